#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "choix/choice.hpp"
#include "choix/json_io.hpp"
#include "choix/models.hpp"

namespace py = pybind11;
using namespace choix;

namespace {

using Vec = std::vector<double>;
using VecSet = std::vector<Vec>;

Option opt(const Vec& v) { return Option(v); }

OptionSet opts(const VecSet& vs) {
    OptionSet out;
    out.reserve(vs.size());
    for (const Vec& v : vs) {
        out.emplace_back(v);
    }
    return out;
}

Vec vec(const Option& u) { return Vec(u.values().begin(), u.values().end()); }

VecSet vecs(const OptionSet& s) {
    VecSet out;
    out.reserve(s.size());
    for (const Option& u : s) {
        out.push_back(vec(u));
    }
    return out;
}

std::vector<VecSet> vecsets(const std::vector<OptionSet>& sets) {
    std::vector<VecSet> out;
    for (const OptionSet& s : sets) {
        out.push_back(vecs(s));
    }
    return out;
}

ConjGenerator conj_from(const std::vector<VecSet>& sets) {
    ConjGenerator h;
    for (const VecSet& s : sets) {
        h.sets.push_back(opts(s));
    }
    return h;
}

py::int_ big(const BigNat& n) { return py::int_(py::module_::import("builtins").attr("int")(to_string(n))); }

Assessment make_assessment(std::size_t dim, const std::vector<std::pair<VecSet, VecSet>>& pairs) {
    Assessment a(dim);
    for (const auto& [chosen, rejected] : pairs) {
        a.add({opts(chosen), opts(rejected)});
    }
    return a;
}

py::dict result_dict(const ChoiceResult& r) {
    py::dict d;
    d["chosen"] = vecs(r.chosen);
    d["rejected"] = vecs(r.rejected);
    d["consistent"] = r.consistent;
    return d;
}

}  // namespace

PYBIND11_MODULE(_choix, m) {
    m.doc() = "Consistency checking and natural extension of choice assessments";

    py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
    py::register_exception<lp::SolverError>(m, "SolverError", PyExc_RuntimeError);
    py::register_exception<Timeout>(m, "Timeout", PyExc_TimeoutError);

    py::class_<ToleranceConfig>(m, "ToleranceConfig")
        .def(py::init([](double tau, double lp_tol) {
                 ToleranceConfig c{tau, lp_tol};
                 c.validate();
                 return c;
             }),
             py::arg("tau") = 0.0, py::arg("lp_tol") = 1e-9)
        .def_readonly("tau", &ToleranceConfig::tau)
        .def_readonly("lp_tol", &ToleranceConfig::lp_tol);

    py::enum_<Method>(m, "Method")
        .value("NAIVE", Method::Naive)
        .value("CONJ", Method::Conjunctive)
        .value("FULL", Method::Full);

    py::class_<Assessment>(m, "Assessment")
        .def(py::init(&make_assessment), py::arg("dimension"),
             py::arg("pairs") = std::vector<std::pair<VecSet, VecSet>>{},
             "pairs: list of (chosen, rejected) option lists")
        .def_static("from_json", [](const std::string& text) { return assessment_from_json(parse_json_text(text)); })
        .def("to_json", [](const Assessment& a) { return to_json(a).dump(); })
        .def("add", [](Assessment& a, const VecSet& chosen, const VecSet& rejected) {
                 a.add({opts(chosen), opts(rejected)});
             },
             py::arg("chosen"), py::arg("rejected") = VecSet{})
        .def("remove", &Assessment::remove)
        .def("prefix", &Assessment::prefix)
        .def_property_readonly("dimension", &Assessment::dimension)
        .def_property_readonly("pairs", [](const Assessment& a) {
            std::vector<std::pair<VecSet, VecSet>> out;
            for (const AssessmentPair& p : a.pairs()) {
                out.emplace_back(vecs(p.chosen), vecs(p.rejected));
            }
            return out;
        })
        .def("__len__", &Assessment::size)
        .def("__eq__", [](const Assessment& a, const Assessment& b) { return a == b; })
        .def("__repr__", [](const Assessment& a) {
            return "Assessment(dimension=" + std::to_string(a.dimension()) + ", pairs=" + std::to_string(a.size()) + ")";
        });

    const ToleranceConfig dflt{};

    m.def("leq", [](const Vec& u, const Vec& v, const ToleranceConfig& c) { return leq(opt(u), opt(v), c); },
          py::arg("u"), py::arg("v"), py::arg("cfg") = dflt);
    m.def("strictly_less",
          [](const Vec& u, const Vec& v, const ToleranceConfig& c) { return strictly_less(opt(u), opt(v), c); },
          py::arg("u"), py::arg("v"), py::arg("cfg") = dflt);
    m.def("translate_set", [](const VecSet& a, const Vec& u) { return vecs(translate_set(opts(a), opt(u))); });
    m.def("rescale_assessment", [](const Assessment& a, double lambda, const Vec& shift) {
        return rescale_assessment(a, lambda, opt(shift));
    });

    m.def("is_feasible",
          [](const VecSet& g, const Vec& v, const ToleranceConfig& c) { return is_feasible(opts(g), opt(v), c); },
          py::arg("generators"), py::arg("v"), py::arg("cfg") = dflt,
          "Whether some nonzero lambda >= 0 has sum_j lambda_j g_j <= v.");
    m.def("in_natural_extension",
          [](const VecSet& g, const Vec& v, const ToleranceConfig& c) {
              return in_natural_extension(opts(g), opt(v), c);
          },
          py::arg("generators"), py::arg("v"), py::arg("cfg") = dflt);
    m.def("option_ord",
          [](const Vec& u, const Vec& v, const ToleranceConfig& c) { return option_ord(opt(u), opt(v), c); },
          py::arg("u"), py::arg("v"), py::arg("cfg") = dflt);
    m.def("g_ord",
          [](const VecSet& g1, const VecSet& g2, const ToleranceConfig& c) { return g_ord(opts(g1), opts(g2), c); },
          py::arg("g1"), py::arg("g2"), py::arg("cfg") = dflt);

    m.def("assessment_to_conjunctive_naive", [](const Assessment& a) {
        return vecsets(assessment_to_conjunctive_naive(a).sets);
    });
    m.def("assessment_to_conjunctive",
          [](const Assessment& a, const ToleranceConfig& c) {
              const ConjGenerator h = assessment_to_conjunctive(a, c);
              return py::make_tuple(vecsets(h.sets), h.inconsistent);
          },
          py::arg("assessment"), py::arg("cfg") = dflt, "Returns (sets, inconsistent).");
    m.def("disjunctive_size", [](const std::vector<VecSet>& h) { return big(disjunctive_size(conj_from(h))); });
    m.def("disjunctive_sets", [](const std::vector<VecSet>& h, std::size_t limit) {
              std::vector<VecSet> out;
              for (const OptionSet& g : disjunctive_stream(conj_from(h))) {
                  if (out.size() == limit) {
                      break;
                  }
                  out.push_back(vecs(g));
              }
              return out;
          },
          py::arg("conjunctive"), py::arg("limit") = 100000,
          "The first `limit` sets of the disjunctive product, in odometer order.");
    m.def("min_cone_subset",
          [](const VecSet& g, const ToleranceConfig& c) { return vecs(min_cone_subset(opts(g), c)); },
          py::arg("generators"), py::arg("cfg") = dflt);
    m.def("conjunctive_to_disjunctive_simplified",
          [](const std::vector<VecSet>& h, const ToleranceConfig& c, double timeout_s) {
              const Deadline d = timeout_s > 0 ? Deadline::after_seconds(timeout_s) : Deadline{};
              py::gil_scoped_release release;
              return vecsets(conjunctive_to_disjunctive_simplified(conj_from(h), c, lp::default_solver(), d).sets);
          },
          py::arg("conjunctive"), py::arg("cfg") = dflt, py::arg("timeout_s") = 0.0);

    m.def("natural_extension",
          [](const VecSet& options, const Assessment& a, Method method, const ToleranceConfig& c) {
              ChoiceResult r;
              {
                  py::gil_scoped_release release;
                  r = natural_extension(opts(options), a, method, c);
              }
              return result_dict(r);
          },
          py::arg("options"), py::arg("assessment"), py::arg("method") = Method::Full, py::arg("cfg") = dflt,
          "Returns {'chosen': [...], 'rejected': [...], 'consistent': bool}.");
    m.def("check_consistency",
          [](const Assessment& a, Method method, const ToleranceConfig& c) {
              py::gil_scoped_release release;
              return check_consistency(a, method, c);
          },
          py::arg("assessment"), py::arg("method") = Method::Full, py::arg("cfg") = dflt);

    py::enum_<ModelKind>(m, "ModelKind")
        .value("LIN", ModelKind::Linear)
        .value("MAX", ModelKind::Maximality)
        .value("ADM", ModelKind::EAdmissibility)
        .value("IMP", ModelKind::Imprecise);

    m.def("random_model_assessment",
          [](ModelKind kind, std::size_t dim, std::size_t pairs, std::uint64_t seed, std::pair<int, int> set_size) {
              Rng rng(seed);
              const ESet es = random_eset(kind, dim, 4, rng);
              std::vector<OptionSet> sets;
              for (std::size_t i = 0; i < pairs; ++i) {
                  sets.push_back(random_option_set(rng, set_size, dim));
              }
              return build_assessment(es, sets);
          },
          py::arg("kind"), py::arg("dimension"), py::arg("pairs"), py::arg("seed"),
          py::arg("set_size") = std::pair<int, int>{2, 8},
          "Assessment produced by a random choice model of the given kind.");
    m.def("lower_expectation", [](const std::vector<Vec>& extremes, const Vec& u) {
        std::vector<Pmf> ps;
        for (const Vec& p : extremes) {
            ps.emplace_back(p);
        }
        return lower_expectation(CredalSet(std::move(ps)), opt(u));
    });
}
