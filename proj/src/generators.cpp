#include "choix/generators.hpp"

#include "choix/feasibility.hpp"

namespace choix {

DisjStream::DisjStream(std::vector<OptionSet> sets)
    : sets_(std::make_shared<const std::vector<OptionSet>>(std::move(sets))) {}

DisjStream::iterator::iterator(std::shared_ptr<const std::vector<OptionSet>> sets)
    : sets_(std::move(sets)), index_(sets_->size(), 0), done_(false) {
    for (const OptionSet& h : *sets_) {
        if (h.empty()) {
            done_ = true;
            return;
        }
        current_.push_back(h.front());
    }
}

DisjStream::iterator& DisjStream::iterator::operator++() {
    const std::vector<OptionSet>& sets = *sets_;
    for (std::size_t k = sets.size(); k-- > 0;) {
        if (++index_[k] < sets[k].size()) {
            current_[k] = sets[k][index_[k]];
            return *this;
        }
        index_[k] = 0;
        current_[k] = sets[k].front();
    }
    done_ = true;
    return *this;
}

ConjGenerator assessment_to_conjunctive_naive(const Assessment& assessment) {
    ConjGenerator out;
    for (const AssessmentPair& pair : assessment.pairs()) {
        for (const Option& w : pair.rejected) {
            out.sets.push_back(translate_set(pair.chosen, w));
        }
    }
    return out;
}

ConjGenerator assessment_to_conjunctive(const Assessment& assessment, const ToleranceConfig& cfg,
                                        const lp::Solver& solver) {
    ConjGenerator out;
    for (const AssessmentPair& pair : assessment.pairs()) {
        for (const Option& w : pair.rejected) {
            OptionSet h;
            bool has_positive = false;
            for (const Option& v : pair.chosen) {
                Option d = v - w;
                if (is_positive(d, cfg)) {
                    has_positive = true;
                    break;
                }
                if (!is_nonpositive(d, cfg)) {
                    h.push_back(std::move(d));
                }
            }
            if (has_positive) {
                continue;
            }
            if (h.empty()) {
                return {{OptionSet{}}, true};
            }
            out.sets.push_back(max_elements(h, [&](const Option& s, const Option& t) {
                return option_ord(s, t, cfg, solver);
            }));
        }
    }
    return out;
}

DisjStream disjunctive_stream(const ConjGenerator& conj) { return DisjStream(conj.sets); }

BigNat disjunctive_size(const ConjGenerator& conj) {
    BigNat n = 1;
    for (const OptionSet& h : conj.sets) {
        n *= h.size();
    }
    return n;
}

OptionSet min_cone_subset(const OptionSet& set, const ToleranceConfig& cfg,
                          const lp::Solver& solver) {
    OptionSet residual = set;
    std::size_t i = 0;
    while (i < residual.size()) {
        const Option& u = residual[i];
        bool removable = is_positive(u, cfg);
        if (!removable) {
            OptionSet others;
            others.reserve(residual.size() - 1);
            for (std::size_t j = 0; j < residual.size(); ++j) {
                if (j != i) {
                    others.push_back(residual[j]);
                }
            }
            removable = is_feasible(others, u, cfg, solver);
        }
        if (removable) {
            residual.erase(residual.begin() + static_cast<std::ptrdiff_t>(i));
        } else {
            ++i;
        }
    }
    return residual;
}

namespace {

std::vector<OptionSet> max_by_g_ord(const std::vector<OptionSet>& candidates,
                                    const ToleranceConfig& cfg, const lp::Solver& solver,
                                    const Deadline& deadline) {
    return max_elements(candidates, [&](const OptionSet& s, const OptionSet& t) {
        deadline.check();
        return g_ord(s, t, cfg, solver);
    });
}

}  // namespace

DisjGenerator simplify_disjunctive(const DisjGenerator& disj, const ToleranceConfig& cfg,
                                   const lp::Solver& solver, const Deadline& deadline) {
    std::vector<OptionSet> kept;
    for (const OptionSet& g : disj.sets) {
        deadline.check();
        if (g.empty() || !is_feasible(g, Option::zero(g.front().dim()), cfg, solver)) {
            kept.push_back(min_cone_subset(g, cfg, solver));
        }
    }
    return {max_by_g_ord(kept, cfg, solver, deadline)};
}

DisjGenerator extend_disjunctive(const DisjGenerator& current, const OptionSet& h_set,
                                 const ToleranceConfig& cfg, const lp::Solver& solver,
                                 const Deadline& deadline) {
    std::vector<OptionSet> extended;
    for (const OptionSet& g : current.sets) {
        for (const Option& h : h_set) {
            deadline.check();
            OptionSet candidate = g;
            candidate.push_back(h);
            if (!is_feasible(candidate, Option::zero(h.dim()), cfg, solver)) {
                extended.push_back(min_cone_subset(candidate, cfg, solver));
            }
        }
    }
    return {max_by_g_ord(extended, cfg, solver, deadline)};
}

DisjGenerator conjunctive_to_disjunctive_simplified(const ConjGenerator& conj,
                                                    const ToleranceConfig& cfg,
                                                    const lp::Solver& solver,
                                                    const Deadline& deadline) {
    DisjGenerator current{{OptionSet{}}};
    for (const OptionSet& h_set : conj.sets) {
        current = extend_disjunctive(current, h_set, cfg, solver, deadline);
    }
    return current;
}

}  // namespace choix
