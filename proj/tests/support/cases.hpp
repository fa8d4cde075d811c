#pragma once

// Random instances shared by the unit, property and acceptance tests.

#include <random>
#include <vector>

#include "choix/choice.hpp"
#include "choix/models.hpp"
#include "fm_oracle.hpp"

namespace choix::testing {

inline RationalVector to_rational(const Option& u) {
    RationalVector out;
    for (double x : u.values()) {
        out.emplace_back(static_cast<long long>(x));
    }
    return out;
}

inline bool oracle(const OptionSet& g, const Option& v) {
    std::vector<RationalVector> gs;
    for (const Option& u : g) {
        gs.push_back(to_rational(u));
    }
    return fm_is_feasible(gs, to_rational(v));
}

inline Option random_int_option(Rng& rng, std::size_t dim, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    std::vector<double> v(dim);
    for (double& x : v) {
        x = d(rng);
    }
    return Option(std::move(v));
}

struct IntInstance {
    OptionSet g;
    Option v;
};

inline IntInstance random_int_instance(Rng& rng, std::size_t max_dim, std::size_t max_g, int bound) {
    const std::size_t dim = std::uniform_int_distribution<std::size_t>(1, max_dim)(rng);
    const std::size_t m = std::uniform_int_distribution<std::size_t>(1, max_g)(rng);
    IntInstance out{{}, random_int_option(rng, dim, -bound, bound)};
    for (std::size_t j = 0; j < m; ++j) {
        out.g.push_back(random_int_option(rng, dim, -bound, bound));
    }
    return out;
}

struct ModelCase {
    ESet model;
    Assessment assessment;
};

/// An assessment produced by a random choice model; consistent by construction.
/// Set sizes are resampled while the naive product would exceed `max_product`,
/// so the streamed methods stay tractable.
inline ModelCase random_model_case(Rng& rng, ModelKind kind, std::size_t dim, std::size_t pairs,
                                   std::pair<int, int> set_size = {2, 4},
                                   double max_product = 5e4) {
    for (;;) {
        ESet es = random_eset(kind, dim, 4, rng);
        std::vector<OptionSet> sets;
        for (std::size_t i = 0; i < pairs; ++i) {
            sets.push_back(random_option_set(rng, set_size, dim));
        }
        Assessment a = build_assessment(es, sets);
        if (static_cast<double>(disjunctive_size(assessment_to_conjunctive_naive(a))) <= max_product) {
            return {std::move(es), std::move(a)};
        }
    }
}

inline ModelKind kind_at(std::size_t i) {
    static constexpr ModelKind kinds[] = {ModelKind::Linear, ModelKind::Maximality,
                                          ModelKind::EAdmissibility, ModelKind::Imprecise};
    return kinds[i % 4];
}

/// Options in `a` that `b` does not contain.
inline OptionSet set_minus(const OptionSet& a, const OptionSet& b) {
    OptionSet out;
    for (const Option& u : a) {
        if (!contains(b, u)) {
            out.push_back(u);
        }
    }
    return out;
}

inline bool subset(const OptionSet& a, const OptionSet& b) { return set_minus(a, b).empty(); }

}  // namespace choix::testing
