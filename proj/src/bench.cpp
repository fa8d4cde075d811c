#include "choix/bench.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>

#include "choix/choice.hpp"

namespace choix::bench {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::size_t as_size(const Json& j, const char* key) {
    if (!j.is_number_integer() || j.get<long long>() < 0) {
        throw InvalidInput(std::string("\"") + key + "\" must be a nonnegative integer");
    }
    return static_cast<std::size_t>(j.get<long long>());
}

double as_double(const Json& j, const char* key) {
    if (!j.is_number()) {
        throw InvalidInput(std::string("\"") + key + "\" must be a number");
    }
    return j.get<double>();
}

std::vector<OptionSet> random_sets(Rng& rng, const ExperimentConfig& cfg, std::size_t count) {
    std::vector<OptionSet> sets;
    sets.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        sets.push_back(random_option_set(rng, cfg.set_size, cfg.dim));
    }
    return sets;
}

std::string format_scaled(const BigNat& scaled_by_1000) {
    std::string digits = scaled_by_1000.str();
    if (digits.size() < 4) {
        digits.insert(0, 4 - digits.size(), '0');
    }
    std::string out = digits.substr(0, digits.size() - 3);
    std::string frac = digits.substr(digits.size() - 3);
    while (!frac.empty() && frac.back() == '0') {
        frac.pop_back();
    }
    if (!frac.empty()) {
        out += "." + frac;
    }
    return out;
}

std::string format_double(double x) {
    std::ostringstream s;
    s << std::setprecision(6) << x;
    return s.str();
}

std::string mean_counts(const std::vector<std::size_t>& values) {
    BigNat sum = 0;
    for (std::size_t v : values) {
        sum += v;
    }
    const std::size_t n = std::max<std::size_t>(values.size(), 1);
    return format_scaled((sum * 1000 + n / 2) / n);
}

std::string time_cell(const TimingRow& row, const TimeColumn& col) {
    const auto m = row.mean(col);
    return m ? format_double(*m) : "timeout";
}

/// Runs `f` under a fresh per-cell deadline; nullopt on timeout.
template <typename F>
auto within_budget(double budget_s, F&& f) -> std::optional<decltype(f(std::declval<const Deadline&>()))> {
    const Deadline deadline = Deadline::after_seconds(budget_s);
    try {
        return f(deadline);
    } catch (const Timeout&) {
        return std::nullopt;
    }
}

}  // namespace

void ExperimentConfig::validate() const {
    if (dim == 0) {
        throw InvalidInput("\"dim\" must be at least 1");
    }
    if (reps == 0) {
        throw InvalidInput("\"reps\" must be at least 1");
    }
    if (set_size.first < 2 || set_size.second < set_size.first) {
        throw InvalidInput("\"set_size\" must be [lo, hi] with 2 <= lo <= hi");
    }
    if (extremes_per_lowerexp == 0) {
        throw InvalidInput("\"extremes_per_lowerexp\" must be at least 1");
    }
    if (!(eps_step > 0.0) || !(eps_start >= 0.0) || !(eps_stop <= 1.0) || eps_stop < eps_start) {
        throw InvalidInput("epsilon grid must satisfy 0 <= start <= stop <= 1 and step > 0");
    }
    if (!(budget_s > 0.0)) {
        throw InvalidInput("\"budget_s\" must be positive");
    }
}

std::vector<double> ExperimentConfig::epsilon_grid() const {
    std::vector<double> grid;
    const auto steps = static_cast<std::size_t>(std::floor((eps_stop - eps_start) / eps_step + 1e-9));
    for (std::size_t k = 0; k <= steps; ++k) {
        // round to kill accumulated binary noise (0.03 * 3 = 0.09000000000000001)
        grid.push_back(std::round((eps_start + static_cast<double>(k) * eps_step) * 1e12) / 1e12);
    }
    return grid;
}

ExperimentConfig config_from_json(const Json& j) {
    if (!j.is_object()) {
        throw InvalidInput("experiment config must be a JSON object");
    }
    static const std::set<std::string> known{
        "seed", "dim", "L", "reps", "set_size", "model", "extremes_per_lowerexp",
        "epsilon", "queries", "budget_s"};
    for (const auto& [key, value] : j.items()) {
        if (!known.contains(key)) {
            throw InvalidInput("unknown config key \"" + key + "\"");
        }
    }
    ExperimentConfig cfg;
    if (j.contains("seed")) {
        if (!j["seed"].is_number_integer()) {
            throw InvalidInput("\"seed\" must be an integer");
        }
        cfg.seed = j["seed"].get<std::uint64_t>();
    }
    if (j.contains("dim")) cfg.dim = as_size(j["dim"], "dim");
    if (j.contains("L")) cfg.L = as_size(j["L"], "L");
    if (j.contains("reps")) cfg.reps = as_size(j["reps"], "reps");
    if (j.contains("set_size")) {
        const Json& s = j["set_size"];
        if (!s.is_array() || s.size() != 2) {
            throw InvalidInput("\"set_size\" must be a two-element array");
        }
        cfg.set_size = {static_cast<int>(as_size(s[0], "set_size")),
                        static_cast<int>(as_size(s[1], "set_size"))};
    }
    if (j.contains("model")) {
        if (!j["model"].is_string()) {
            throw InvalidInput("\"model\" must be a string");
        }
        cfg.model = parse_model(j["model"].get<std::string>());
    }
    if (j.contains("extremes_per_lowerexp")) {
        cfg.extremes_per_lowerexp = as_size(j["extremes_per_lowerexp"], "extremes_per_lowerexp");
    }
    if (j.contains("epsilon")) {
        const Json& e = j["epsilon"];
        if (!e.is_object()) {
            throw InvalidInput("\"epsilon\" must be an object with start, stop and step");
        }
        if (e.contains("start")) cfg.eps_start = as_double(e["start"], "epsilon.start");
        if (e.contains("stop")) cfg.eps_stop = as_double(e["stop"], "epsilon.stop");
        if (e.contains("step")) cfg.eps_step = as_double(e["step"], "epsilon.step");
    }
    if (j.contains("queries")) cfg.queries = as_size(j["queries"], "queries");
    if (j.contains("budget_s")) cfg.budget_s = as_double(j["budget_s"], "budget_s");
    cfg.validate();
    return cfg;
}

Rng rep_rng(std::uint64_t seed, std::size_t rep) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(rep), 0x63686f69u};
    return Rng(seq);
}

std::vector<SizeRow> run_size_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    std::vector<SizeRow> rows(cfg.L + 1);
    for (std::size_t l = 0; l <= cfg.L; ++l) {
        rows[l].l = l;
    }
    for (std::size_t rep = 0; rep < cfg.reps; ++rep) {
        Rng rng = rep_rng(cfg.seed, rep);
        const ESet es = random_eset(cfg.model, cfg.dim, cfg.extremes_per_lowerexp, rng);
        const std::vector<OptionSet> sets = random_sets(rng, cfg, cfg.L);
        const Assessment assessment = build_assessment(es, sets);

        BigNat naive = 1;
        BigNat conj = 1;
        std::optional<DisjGenerator> full = DisjGenerator{{OptionSet{}}};
        rows[0].g_naive.emplace_back(1);
        rows[0].g_conj.emplace_back(1);
        rows[0].g_full.emplace_back(1);
        for (std::size_t l = 1; l <= cfg.L; ++l) {
            // Both conjunctive constructions treat pairs independently, so the
            // prefix generator is the previous one plus this pair's sets.
            const Assessment single(cfg.dim, {assessment.pairs()[l - 1]});
            naive *= disjunctive_size(assessment_to_conjunctive_naive(single));
            const ConjGenerator piece = assessment_to_conjunctive(single);
            conj *= disjunctive_size(piece);
            if (full) {
                full = within_budget(cfg.budget_s, [&](const Deadline& deadline) {
                    DisjGenerator next = *full;
                    for (const OptionSet& h : piece.sets) {
                        next = extend_disjunctive(next, h, {}, lp::default_solver(), deadline);
                    }
                    return next;
                });
            }
            rows[l].g_naive.emplace_back(naive);
            rows[l].g_conj.emplace_back(conj);
            if (full) {
                rows[l].g_full.emplace_back(BigNat(full->sets.size()));
            } else {
                rows[l].g_full.emplace_back(std::nullopt);
            }
        }
    }
    return rows;
}

std::vector<EpsilonRow> run_epsilon_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    const std::vector<double> grid = cfg.epsilon_grid();
    std::vector<EpsilonRow> rows(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) {
        rows[k].epsilon = grid[k];
    }
    for (std::size_t rep = 0; rep < cfg.reps; ++rep) {
        Rng rng = rep_rng(cfg.seed, rep);
        const Pmf p = random_pmf(cfg.dim, rng);
        const std::vector<OptionSet> sets = random_sets(rng, cfg, cfg.L);
        for (std::size_t k = 0; k < grid.size(); ++k) {
            EpsilonRow& row = rows[k];
            const ESet es({epsilon_contamination(p, grid[k])});
            const Assessment assessment = build_assessment(es, sets);
            const ConjGenerator naive = assessment_to_conjunctive_naive(assessment);
            const ConjGenerator simpl = assessment_to_conjunctive(assessment);
            row.h_naive.push_back(naive.sets.size());
            row.h_simpl.push_back(simpl.sets.size());
            row.g_naive.emplace_back(disjunctive_size(naive));
            row.g_conj.emplace_back(disjunctive_size(simpl));
            const auto full = within_budget(cfg.budget_s, [&](const Deadline& deadline) {
                return conjunctive_to_disjunctive_simplified(simpl, {}, lp::default_solver(),
                                                             deadline);
            });
            if (full) {
                row.g_full.emplace_back(BigNat(full->sets.size()));
            } else {
                row.g_full.emplace_back(std::nullopt);
            }
        }
    }
    return rows;
}

namespace {

// Wall-clock seconds per query to decide every option of each query set.
template <typename Gen>
std::optional<double> time_choose(const std::vector<OptionSet>& queries, Gen&& generator,
                                  double budget_s) {
    if (queries.empty()) {
        return 0.0;
    }
    return within_budget(budget_s, [&](const Deadline& deadline) {
        const auto start = Clock::now();
        for (const OptionSet& a : queries) {
            for (const Option& u : a) {
                is_chosen(a, u, generator, {}, lp::default_solver(), deadline);
            }
        }
        return seconds_since(start) / static_cast<double>(queries.size());
    });
}

}  // namespace

std::vector<TimingRow> run_timing_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    std::vector<TimingRow> rows(cfg.L);
    for (std::size_t l = 1; l <= cfg.L; ++l) {
        rows[l - 1].l = l;
    }
    bool warmed_up = false;
    for (std::size_t rep = 0; rep < cfg.reps; ++rep) {
        Rng rng = rep_rng(cfg.seed, rep);
        const ESet es = random_eset(cfg.model, cfg.dim, cfg.extremes_per_lowerexp, rng);
        const std::vector<OptionSet> sets = random_sets(rng, cfg, cfg.L);
        const std::vector<OptionSet> queries = random_sets(rng, cfg, cfg.queries);
        const Assessment assessment = build_assessment(es, sets);

        if (!warmed_up && cfg.L > 0) {
            const Assessment first = assessment.prefix(1);
            const ConjGenerator h = assessment_to_conjunctive(first);
            const DisjGenerator g = conjunctive_to_disjunctive_simplified(h);
            time_choose(queries, g.sets, cfg.budget_s);
            warmed_up = true;
        }

        bool naive_alive = true;
        bool conj_alive = true;
        bool full_alive = true;
        for (std::size_t l = 1; l <= cfg.L; ++l) {
            TimingRow& row = rows[l - 1];
            const Assessment prefix = assessment.prefix(l);

            auto start = Clock::now();
            const ConjGenerator naive = assessment_to_conjunctive_naive(prefix);
            row.t_build_naive.emplace_back(seconds_since(start));

            start = Clock::now();
            const ConjGenerator simpl = assessment_to_conjunctive(prefix);
            row.t_build_conj.emplace_back(seconds_since(start));

            std::optional<DisjGenerator> full;
            if (full_alive) {
                start = Clock::now();
                full = within_budget(cfg.budget_s, [&](const Deadline& deadline) {
                    ConjGenerator h = assessment_to_conjunctive(prefix);
                    return conjunctive_to_disjunctive_simplified(h, {}, lp::default_solver(),
                                                                 deadline);
                });
                if (full) {
                    row.t_build_full.emplace_back(seconds_since(start));
                } else {
                    full_alive = false;
                    row.t_build_full.emplace_back(std::nullopt);
                }
            } else {
                row.t_build_full.emplace_back(std::nullopt);
            }

            std::optional<double> t;
            t = naive_alive ? time_choose(queries, disjunctive_stream(naive), cfg.budget_s)
                            : std::nullopt;
            naive_alive = t.has_value();
            row.t_choose_naive.push_back(t);

            t = conj_alive ? time_choose(queries, disjunctive_stream(simpl), cfg.budget_s)
                           : std::nullopt;
            conj_alive = t.has_value();
            row.t_choose_conj.push_back(t);

            t = full ? time_choose(queries, full->sets, cfg.budget_s) : std::nullopt;
            row.t_choose_full.push_back(t);
        }
    }
    return rows;
}

std::optional<double> TimingRow::mean(const TimeColumn& column) const {
    if (column.empty()) {
        return std::nullopt;
    }
    double sum = 0.0;
    for (const auto& v : column) {
        if (!v) {
            return std::nullopt;
        }
        sum += *v;
    }
    return sum / static_cast<double>(column.size());
}

std::optional<double> TimingRow::breakeven_n() const {
    const auto bf = mean(t_build_full);
    const auto bc = mean(t_build_conj);
    const auto cc = mean(t_choose_conj);
    const auto cf = mean(t_choose_full);
    if (!bf || !bc || !cc || !cf) {
        return std::nullopt;
    }
    const double denom = *cc - *cf;
    if (!(denom > 0.0)) {
        return std::nullopt;
    }
    return (*bf - *bc) / denom;
}

std::optional<std::pair<double, double>> TimingRow::full_build_range() const {
    std::optional<std::pair<double, double>> range;
    for (const auto& v : t_build_full) {
        if (!v) {
            return std::nullopt;
        }
        if (!range) {
            range = std::pair{*v, *v};
        } else {
            range->first = std::min(range->first, *v);
            range->second = std::max(range->second, *v);
        }
    }
    return range;
}

std::string mean_cell(const SizeColumn& column) {
    BigNat sum = 0;
    for (const auto& v : column) {
        if (!v) {
            return "timeout";
        }
        sum += *v;
    }
    const std::size_t n = std::max<std::size_t>(column.size(), 1);
    return format_scaled((sum * 1000 + n / 2) / n);
}

std::optional<double> mean_value(const SizeColumn& column) {
    if (column.empty()) {
        return std::nullopt;
    }
    BigNat sum = 0;
    for (const auto& v : column) {
        if (!v) {
            return std::nullopt;
        }
        sum += *v;
    }
    return sum.convert_to<double>() / static_cast<double>(column.size());
}

void write_size_csv(std::ostream& out, const std::vector<SizeRow>& rows) {
    out << "l,g_naive,g_conj,g_full\n";
    for (const SizeRow& r : rows) {
        out << r.l << ',' << mean_cell(r.g_naive) << ',' << mean_cell(r.g_conj) << ','
            << mean_cell(r.g_full) << '\n';
    }
}

void write_epsilon_csv(std::ostream& out, const std::vector<EpsilonRow>& rows) {
    out << "epsilon,h_naive,h_simpl,g_naive,g_conj,g_full\n";
    for (const EpsilonRow& r : rows) {
        out << format_double(r.epsilon) << ',' << mean_counts(r.h_naive) << ','
            << mean_counts(r.h_simpl) << ',' << mean_cell(r.g_naive) << ','
            << mean_cell(r.g_conj) << ',' << mean_cell(r.g_full) << '\n';
    }
}

void write_timing_csv(std::ostream& out, const std::vector<TimingRow>& rows) {
    out << "l,t_build_naive,t_build_conj,t_build_full,t_choose_naive,t_choose_conj,"
           "t_choose_full,breakeven_n\n";
    for (const TimingRow& r : rows) {
        const auto be = r.breakeven_n();
        out << r.l << ',' << time_cell(r, r.t_build_naive) << ',' << time_cell(r, r.t_build_conj)
            << ',' << time_cell(r, r.t_build_full) << ',' << time_cell(r, r.t_choose_naive) << ','
            << time_cell(r, r.t_choose_conj) << ',' << time_cell(r, r.t_choose_full) << ','
            << (be ? format_double(*be) : "") << '\n';
    }
}

}  // namespace choix::bench
