#pragma once

// Consistency and natural-extension decisions over a disjunctive generator,
// and the three ways of obtaining that generator from an assessment.

#include <memory>
#include <optional>
#include <ranges>
#include <string_view>

#include "choix/core.hpp"
#include "choix/deadline.hpp"
#include "choix/feasibility.hpp"
#include "choix/generators.hpp"
#include "choix/lp.hpp"

namespace choix {

enum class Method {
    Naive,        ///< unsimplified conjunctive generator, streamed product
    Conjunctive,  ///< simplified conjunctive generator, streamed product
    Full,         ///< simplified conjunctive generator, simplified product kept in memory
};

std::string_view to_string(Method m) noexcept;
/// Accepts "naive", "conj" and "full".
Method parse_method(std::string_view name);

struct ChoiceResult {
    OptionSet chosen;
    OptionSet rejected;
    bool consistent = true;

    friend bool operator==(const ChoiceResult&, const ChoiceResult&) = default;
};

template <typename R>
concept OptionSetRange =
    std::ranges::input_range<R> &&
    std::convertible_to<std::ranges::range_reference_t<R>, const OptionSet&>;

/// True iff some yielded G has 0 ∉ N(G). Stops at the first such G.
template <OptionSetRange R>
bool is_consistent_generator(R&& generator, const ToleranceConfig& cfg = {},
                             const lp::Solver& solver = lp::default_solver(),
                             const Deadline& deadline = {}) {
    for (const OptionSet& g : generator) {
        deadline.check();
        if (g.empty() || !is_feasible(g, Option::zero(g.front().dim()), cfg, solver)) {
            return true;
        }
    }
    return false;
}

/// Whether u survives in A: no v ∈ A - u is positive, and some yielded G
/// keeps every v ∈ A - u outside N(G).
template <OptionSetRange R>
bool is_chosen(const OptionSet& options, const Option& u, R&& generator,
               const ToleranceConfig& cfg = {}, const lp::Solver& solver = lp::default_solver(),
               const Deadline& deadline = {}) {
    if (!contains(options, u)) {
        throw InvalidInput("the queried option is not a member of the option set");
    }
    const OptionSet diffs = translate_set(options, u);
    for (const Option& v : diffs) {
        if (is_positive(v, cfg)) {
            return false;
        }
    }
    for (const OptionSet& g : generator) {
        deadline.check();
        bool escapes = true;
        for (const Option& v : diffs) {
            if (is_feasible(g, v, cfg, solver)) {
                escapes = false;
                break;
            }
        }
        if (escapes) {
            return true;
        }
    }
    return false;
}

/// An assessment run through one of the three methods, ready to answer
/// choice queries. Immutable once built.
class Pipeline {
public:
    Pipeline(const Assessment& assessment, Method method, const ToleranceConfig& cfg = {},
             const lp::Solver& solver = lp::default_solver(), const Deadline& deadline = {});

    Method method() const noexcept { return method_; }
    std::size_t dimension() const noexcept { return dimension_; }
    bool consistent() const noexcept { return consistent_; }
    const ConjGenerator& conjunctive() const noexcept { return conj_; }
    /// The materialized generator; only for Method::Full.
    const std::optional<DisjGenerator>& materialized() const noexcept { return disj_; }

    bool is_chosen(const OptionSet& options, const Option& u, const Deadline& deadline = {}) const;
    ChoiceResult choose(const OptionSet& options, const Deadline& deadline = {}) const;

private:
    template <typename F>
    decltype(auto) with_generator(F&& f) const;

    Method method_;
    std::size_t dimension_;
    ToleranceConfig cfg_;
    const lp::Solver* solver_;
    ConjGenerator conj_;
    std::optional<DisjGenerator> disj_;
    bool consistent_ = false;
};

/// Pipeline for (assessment, method). Full pipelines are memoized per
/// assessment contents and tolerances.
std::shared_ptr<const Pipeline> prepare(const Assessment& assessment, Method method,
                                        const ToleranceConfig& cfg = {},
                                        const lp::Solver& solver = lp::default_solver());

/// The natural extension of the assessment evaluated on `options`. An
/// inconsistent assessment rejects everything and reports consistent=false.
ChoiceResult natural_extension(const OptionSet& options, const Assessment& assessment,
                               Method method = Method::Full, const ToleranceConfig& cfg = {},
                               const lp::Solver& solver = lp::default_solver());

bool check_consistency(const Assessment& assessment, Method method = Method::Full,
                       const ToleranceConfig& cfg = {},
                       const lp::Solver& solver = lp::default_solver());

void clear_pipeline_cache();

}  // namespace choix
