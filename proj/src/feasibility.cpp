#include "choix/feasibility.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace choix {

namespace {

// The phase-one optimum of the cone system is 0 or ≥ 1; values inside this
// band mean the solver lost track of the arithmetic.
constexpr double kTroubleLow = 1e-6;
constexpr double kTroubleHigh = 1.0 - 1e-6;

lp::Problem cone_system(const OptionSet& generators, const Option& v) {
    const std::size_t m = generators.size();
    const std::size_t dim = v.dim();
    lp::Problem p;
    p.num_vars = m + 1;
    p.constraints.reserve(dim + 2);
    for (std::size_t x = 0; x < dim; ++x) {
        lp::Constraint c{std::vector<double>(m + 1), lp::Sense::GreaterEqual, 0.0};
        for (std::size_t k = 0; k < m; ++k) {
            c.coeffs[k] = -generators[k][x];
        }
        c.coeffs[m] = v[x];
        p.constraints.push_back(std::move(c));
    }
    lp::Constraint sum{std::vector<double>(m + 1, 1.0), lp::Sense::GreaterEqual, 1.0};
    sum.coeffs[m] = 0.0;
    p.constraints.push_back(std::move(sum));
    lp::Constraint last{std::vector<double>(m + 1, 0.0), lp::Sense::GreaterEqual, 1.0};
    last.coeffs[m] = 1.0;
    p.constraints.push_back(std::move(last));
    return p;
}

bool witness_holds(const lp::Problem& p, const std::vector<double>& mu, double tol) {
    if (mu.size() != p.num_vars) {
        return false;
    }
    for (double x : mu) {
        if (x < -tol) {
            return false;
        }
    }
    for (const lp::Constraint& c : p.constraints) {
        double lhs = 0.0;
        double scale = std::abs(c.rhs);
        for (std::size_t k = 0; k < c.coeffs.size(); ++k) {
            lhs += c.coeffs[k] * mu[k];
            scale = std::max(scale, std::abs(c.coeffs[k] * mu[k]));
        }
        const double slack = tol * std::max(1.0, scale);
        const bool ok = c.sense == lp::Sense::GreaterEqual ? lhs >= c.rhs - slack
                        : c.sense == lp::Sense::LessEqual  ? lhs <= c.rhs + slack
                                                           : std::abs(lhs - c.rhs) <= slack;
        if (!ok) {
            return false;
        }
    }
    return true;
}

}  // namespace

LpOutcome solve_feasibility(const OptionSet& generators, const Option& v,
                            const ToleranceConfig& cfg, const lp::Solver& solver) {
    check_dim(generators, v.dim());
    if (generators.empty()) {
        return {};
    }
    const lp::Problem problem = cone_system(generators, v);
    const lp::Solution sol = solver.solve(problem, std::max(cfg.lp_tol, 1e-12));
    if (sol.status == lp::Status::Infeasible) {
        if (sol.infeasibility > kTroubleLow && sol.infeasibility < kTroubleHigh) {
            std::ostringstream msg;
            msg << "numerical trouble in " << solver.name()
                << ": phase-one optimum " << sol.infeasibility << " is neither 0 nor >= 1";
            throw lp::SolverError(msg.str());
        }
        return {};
    }
    LpOutcome out{true, std::nullopt};
    if (witness_holds(problem, sol.point, std::max(cfg.lp_tol, 1e-12))) {
        // divide out the coefficient of v
        const double scale = sol.point.back();
        out.witness.emplace(sol.point.begin(), sol.point.end() - 1);
        for (double& x : *out.witness) {
            x = std::max(x, 0.0) / scale;
        }
    }
    return out;
}

bool is_feasible(const OptionSet& generators, const Option& v, const ToleranceConfig& cfg,
                 const lp::Solver& solver) {
    return solve_feasibility(generators, v, cfg, solver).feasible;
}

bool in_natural_extension(const OptionSet& generators, const Option& v,
                          const ToleranceConfig& cfg, const lp::Solver& solver) {
    check_dim(generators, v.dim());
    return is_positive(v, cfg) || is_feasible(generators, v, cfg, solver);
}

bool option_ord(const Option& u, const Option& v, const ToleranceConfig& cfg,
                const lp::Solver& solver) {
    check_same_dim(u, v);
    return in_natural_extension(OptionSet{u}, v, cfg, solver);
}

bool g_ord(const OptionSet& g1, const OptionSet& g2, const ToleranceConfig& cfg,
           const lp::Solver& solver) {
    for (const Option& g : g2) {
        if (!g1.empty()) {
            check_same_dim(g1.front(), g);
        }
        if (is_positive(g, cfg)) {
            continue;
        }
        if (!is_feasible(g1, g, cfg, solver)) {
            return false;
        }
    }
    return true;
}

}  // namespace choix
