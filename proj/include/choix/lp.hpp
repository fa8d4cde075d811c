#pragma once

// Linear feasibility seam. Every membership predicate in the library funnels
// through Solver::solve, so a different backend can be dropped in without
// touching the callers.

#include <cstddef>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace choix::lp {

/// Raised when a backend cannot reach a verdict (iteration limit, NaNs, ...).
/// Never conflated with an infeasible answer.
class SolverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Sense { LessEqual, GreaterEqual, Equal };

struct Constraint {
    std::vector<double> coeffs;
    Sense sense;
    double rhs;
};

/// Find x ≥ 0 with every constraint satisfied. No objective.
struct Problem {
    std::size_t num_vars = 0;
    std::vector<Constraint> constraints;
};

enum class Status { Feasible, Infeasible };

struct Solution {
    Status status;
    /// A feasible point when status == Feasible, empty otherwise.
    std::vector<double> point;
    /// Phase-one optimum: the summed violation of the normalized rows that
    /// could not be satisfied. Zero (up to `tol`) when feasible.
    double infeasibility = 0.0;
};

class Solver {
public:
    virtual ~Solver() = default;
    /// Must be safe to call concurrently from several threads.
    virtual Solution solve(const Problem& problem, double tol) const = 0;
    virtual std::string_view name() const noexcept = 0;
};

/// Dense tableau, two-phase simplex with Bland's anti-cycling rule. Rows are
/// scaled to unit max-norm before pivoting. Meant for the small systems this
/// library produces (tens of rows and columns).
class DenseSimplex final : public Solver {
public:
    Solution solve(const Problem& problem, double tol) const override;
    std::string_view name() const noexcept override { return "dense-simplex"; }
};

const Solver& default_solver();

}  // namespace choix::lp
