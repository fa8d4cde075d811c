#pragma once

// Conjunctive generators (one "at least one of these must be desirable" set per
// rejected option) and disjunctive generators (the alternatives obtained by
// picking one option from each conjunctive set), with the simplifications
// that keep them small.

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <iterator>
#include <memory>
#include <span>
#include <vector>

#include "choix/core.hpp"
#include "choix/deadline.hpp"
#include "choix/lp.hpp"

namespace choix {

using BigNat = boost::multiprecision::cpp_int;

struct ConjGenerator {
    std::vector<OptionSet> sets;
    /// Set when simplification emptied a set; `sets` is then {∅}.
    bool inconsistent = false;

    friend bool operator==(const ConjGenerator&, const ConjGenerator&) = default;
};

struct DisjGenerator {
    std::vector<OptionSet> sets;

    friend bool operator==(const DisjGenerator&, const DisjGenerator&) = default;
};

/// Lazy Cartesian selection product of a conjunctive generator. Yields one
/// option set per selection, the last conjunctive set varying fastest.
/// ℋ = ∅ yields a single empty set; any empty H yields nothing.
class DisjStream {
public:
    class iterator {
    public:
        using value_type = OptionSet;
        using difference_type = std::ptrdiff_t;
        using iterator_concept = std::input_iterator_tag;

        iterator() = default;

        const OptionSet& operator*() const { return current_; }
        const OptionSet* operator->() const { return &current_; }
        iterator& operator++();
        void operator++(int) { ++*this; }

        friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.done_; }

    private:
        friend class DisjStream;
        explicit iterator(std::shared_ptr<const std::vector<OptionSet>> sets);

        std::shared_ptr<const std::vector<OptionSet>> sets_;
        std::vector<std::size_t> index_;
        OptionSet current_;
        bool done_ = true;
    };

    explicit DisjStream(std::vector<OptionSet> sets);

    iterator begin() const { return iterator(sets_); }
    std::default_sentinel_t end() const { return {}; }

private:
    std::shared_ptr<const std::vector<OptionSet>> sets_;
};

/// Unsimplified conjunctive generator: {V - w : v ∈ V} for each pair and each w ∈ W.
ConjGenerator assessment_to_conjunctive_naive(const Assessment& assessment);

/// Conjunctive generator with simplifications: drops every set that contains a
/// positive option, drops nonpositive options, keeps only ⊴-maximal options.
/// A set that ends up empty makes the whole result {∅} with the
/// inconsistent flag raised.
ConjGenerator assessment_to_conjunctive(const Assessment& assessment,
                                        const ToleranceConfig& cfg = {},
                                        const lp::Solver& solver = lp::default_solver());

DisjStream disjunctive_stream(const ConjGenerator& conj);

/// ∏_{H} |H|: 1 for ℋ = ∅, 0 if some H is empty.
BigNat disjunctive_size(const ConjGenerator& conj);

/// One representative per maximal equivalence class of the preorder whose
/// domination predicate is `dominated(s, t)` ("s is dominated by t").
/// The first element encountered of each class is kept; survivors keep their
/// input order. Uses at most n(n-1) predicate calls.
template <typename T, typename Dominated>
std::vector<T> max_elements(std::span<const T> items, Dominated&& dominated) {
    std::vector<T> kept;
    for (const T& s : items) {
        const bool maximal =
            std::none_of(kept.begin(), kept.end(), [&](const T& t) { return dominated(s, t); });
        if (!maximal) {
            continue;
        }
        std::vector<T> next;
        next.reserve(kept.size() + 1);
        for (T& t : kept) {
            if (!dominated(t, s)) {
                next.push_back(std::move(t));
            }
        }
        next.push_back(s);
        kept = std::move(next);
    }
    return kept;
}

template <typename T, typename Dominated>
std::vector<T> max_elements(const std::vector<T>& items, Dominated&& dominated) {
    return max_elements(std::span<const T>(items), std::forward<Dominated>(dominated));
}

/// Subset G' ⊆ G with N(G') = N(G) from which no option can be removed
/// without shrinking N. Scans in index order and drops u whenever
/// u ∈ N(G' \ {u}) for the current residual G'.
/// Requires 0 ∉ N(G).
OptionSet min_cone_subset(const OptionSet& set, const ToleranceConfig& cfg = {},
                          const lp::Solver& solver = lp::default_solver());

/// Drops inconsistent sets, minimizes the rest and keeps the ⪯-maximal ones.
DisjGenerator simplify_disjunctive(const DisjGenerator& disj, const ToleranceConfig& cfg = {},
                                   const lp::Solver& solver = lp::default_solver(),
                                   const Deadline& deadline = {});

/// One step of the incremental build: every G ∪ {h} for G in `current` and
/// h in `h_set`, minus inconsistent candidates, each minimized, then reduced
/// to its ⪯-maximal members.
DisjGenerator extend_disjunctive(const DisjGenerator& current, const OptionSet& h_set,
                                 const ToleranceConfig& cfg = {},
                                 const lp::Solver& solver = lp::default_solver(),
                                 const Deadline& deadline = {});

/// Builds a simplified disjunctive generator one conjunctive set at a time,
/// pruning after each step, so the full selection product is never formed.
DisjGenerator conjunctive_to_disjunctive_simplified(
    const ConjGenerator& conj, const ToleranceConfig& cfg = {},
    const lp::Solver& solver = lp::default_solver(), const Deadline& deadline = {});

}  // namespace choix
