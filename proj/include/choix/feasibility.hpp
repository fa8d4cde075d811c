#pragma once

// Membership predicates for the natural-extension cone N(G) = posi(G ∪ V_{>0}),
// all reduced to one linear feasibility problem.

#include <optional>
#include <vector>

#include "choix/core.hpp"
#include "choix/lp.hpp"

namespace choix {

/// Result of one feasibility LP. When `feasible`, `witness` may hold
/// coefficients λ ≥ 0, not all zero, with Σ λ_j g_j ≤ v; extraction is
/// best-effort.
struct LpOutcome {
    bool feasible = false;
    std::optional<std::vector<double>> witness;
};

/// Decides whether some λ ≥ 0, λ ≠ 0 has Σ λ_j g_j ≤ v, via the equivalent system
///
///   μ_{m+1} v(x) - Σ_k μ_k g_k(x) ≥ 0   for every state x,
///   Σ_{k≤m} μ_k ≥ 1,   μ_{m+1} ≥ 1,   μ ≥ 0,
///
/// which has no strict inequalities. An empty G is never feasible.
///
/// Because the system is a cone cut by two unit half-spaces, the phase-one
/// optimum is either 0 or at least 1. Anything in between is reported as
/// lp::SolverError instead of being rounded to an answer.
LpOutcome solve_feasibility(const OptionSet& generators, const Option& v,
                            const ToleranceConfig& cfg = {},
                            const lp::Solver& solver = lp::default_solver());

bool is_feasible(const OptionSet& generators, const Option& v, const ToleranceConfig& cfg = {},
                 const lp::Solver& solver = lp::default_solver());

/// v ∈ N(G): 0 < v, or is_feasible(G, v).
bool in_natural_extension(const OptionSet& generators, const Option& v,
                          const ToleranceConfig& cfg = {},
                          const lp::Solver& solver = lp::default_solver());

/// u ⊴ v  ⇔  v ∈ N({u}). A preorder on options; true means u is dominated by v.
bool option_ord(const Option& u, const Option& v, const ToleranceConfig& cfg = {},
                const lp::Solver& solver = lp::default_solver());

/// G1 ⪯ G2  ⇔  G2 ⊆ N(G1). True means G1 carries at least the information of
/// G2, so G1 is the one that may be dropped from a disjunctive generator.
bool g_ord(const OptionSet& g1, const OptionSet& g2, const ToleranceConfig& cfg = {},
           const lp::Solver& solver = lp::default_solver());

}  // namespace choix
