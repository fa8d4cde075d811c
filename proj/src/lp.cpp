#include "choix/lp.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace choix::lp {

namespace {

constexpr double kPivotEps = 1e-11;
constexpr double kCostEps = 1e-11;
constexpr double kZeroClean = 1e-14;

struct NormalizedRow {
    std::vector<double> coeffs;
    Sense sense;
    double rhs;
};

// Scale to unit max-norm, make rhs ≥ 0 and turn homogeneous ≥ rows into ≤
// rows so that they never need an artificial variable.
bool normalize(const Constraint& c, std::size_t num_vars, NormalizedRow& out) {
    out.coeffs.assign(num_vars, 0.0);
    std::copy_n(c.coeffs.begin(), std::min(num_vars, c.coeffs.size()), out.coeffs.begin());
    out.sense = c.sense;
    out.rhs = c.rhs;

    double scale = std::abs(out.rhs);
    for (double a : out.coeffs) {
        scale = std::max(scale, std::abs(a));
    }
    if (scale == 0.0) {
        return false;  // 0 {≤,≥,=} 0 always holds
    }
    for (double& a : out.coeffs) {
        a /= scale;
    }
    out.rhs /= scale;

    auto flip = [&] {
        for (double& a : out.coeffs) {
            a = -a;
        }
        out.rhs = -out.rhs;
        if (out.sense == Sense::LessEqual) {
            out.sense = Sense::GreaterEqual;
        } else if (out.sense == Sense::GreaterEqual) {
            out.sense = Sense::LessEqual;
        }
    };
    if (out.rhs < 0.0 || (out.rhs == 0.0 && out.sense == Sense::GreaterEqual)) {
        flip();
    }
    out.rhs = std::abs(out.rhs);
    return true;
}

}  // namespace

Solution DenseSimplex::solve(const Problem& problem, double tol) const {
    const std::size_t n = problem.num_vars;
    for (const Constraint& c : problem.constraints) {
        if (c.coeffs.size() > n) {
            throw SolverError("constraint has more coefficients than variables");
        }
        if (!std::isfinite(c.rhs) ||
            !std::ranges::all_of(c.coeffs, [](double a) { return std::isfinite(a); })) {
            throw SolverError("non-finite coefficient in linear program");
        }
    }

    std::vector<NormalizedRow> rows;
    rows.reserve(problem.constraints.size());
    for (const Constraint& c : problem.constraints) {
        NormalizedRow r;
        if (normalize(c, n, r)) {
            rows.push_back(std::move(r));
        }
    }

    const std::size_t m = rows.size();
    std::size_t num_slack = 0;
    std::size_t num_art = 0;
    for (const NormalizedRow& r : rows) {
        if (r.sense != Sense::Equal) {
            ++num_slack;
        }
        if (r.sense != Sense::LessEqual) {
            ++num_art;
        }
    }
    const std::size_t art_begin = n + num_slack;
    const std::size_t cols = art_begin + num_art;
    const std::size_t rhs_col = cols;

    // Row-major tableau; the last row holds the phase-one reduced costs.
    std::vector<std::vector<double>> t(m + 1, std::vector<double>(cols + 1, 0.0));
    std::vector<std::size_t> basis(m);
    std::size_t next_slack = n;
    std::size_t next_art = art_begin;
    for (std::size_t i = 0; i < m; ++i) {
        std::copy(rows[i].coeffs.begin(), rows[i].coeffs.end(), t[i].begin());
        t[i][rhs_col] = rows[i].rhs;
        switch (rows[i].sense) {
            case Sense::LessEqual:
                t[i][next_slack] = 1.0;
                basis[i] = next_slack++;
                break;
            case Sense::GreaterEqual:
                t[i][next_slack++] = -1.0;
                t[i][next_art] = 1.0;
                basis[i] = next_art++;
                break;
            case Sense::Equal:
                t[i][next_art] = 1.0;
                basis[i] = next_art++;
                break;
        }
    }

    std::vector<double>& cost = t[m];
    // Phase-one reduced costs, recomputed from the tableau each iteration so
    // rounding in the cost row cannot accumulate.
    auto refresh_costs = [&] {
        std::fill(cost.begin(), cost.end(), 0.0);
        for (std::size_t j = art_begin; j < cols; ++j) {
            cost[j] = 1.0;
        }
        for (std::size_t i = 0; i < m; ++i) {
            if (basis[i] >= art_begin) {
                for (std::size_t j = 0; j <= cols; ++j) {
                    cost[j] -= t[i][j];
                }
            }
        }
    };

    // Ratio test with Bland tie-breaking; m when the column has no usable pivot.
    auto leaving_row = [&](std::size_t enter) {
        std::size_t leave = m;
        double best = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            const double a = t[i][enter];
            if (a <= kPivotEps) {
                continue;
            }
            const double ratio = t[i][rhs_col] / a;
            if (leave == m || ratio < best - 1e-13 ||
                (ratio <= best + 1e-13 && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        return leave;
    };

    const std::size_t max_iter = 10000 + 100 * (m + cols);
    std::size_t iter = 0;
    while (true) {
        if (++iter > max_iter) {
            throw SolverError("simplex iteration limit reached (" + std::to_string(max_iter) + ")");
        }
        refresh_costs();
        // Phase one is bounded below by zero, so an improving column without a
        // positive pivot is rounding noise; move on to the next candidate.
        std::size_t enter = cols;
        std::size_t leave = m;
        for (std::size_t j = 0; j < cols; ++j) {
            if (cost[j] < -kCostEps) {
                leave = leaving_row(j);
                if (leave != m) {
                    enter = j;
                    break;
                }
            }
        }
        if (enter == cols) {
            break;
        }

        const double pivot = t[leave][enter];
        for (double& x : t[leave]) {
            x /= pivot;
        }
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave) {
                continue;
            }
            const double factor = t[i][enter];
            if (factor == 0.0) {
                continue;
            }
            for (std::size_t j = 0; j <= cols; ++j) {
                t[i][j] -= factor * t[leave][j];
                if (std::abs(t[i][j]) < kZeroClean) {
                    t[i][j] = 0.0;
                }
            }
            t[i][enter] = 0.0;
        }
        basis[leave] = enter;
    }

    Solution sol;
    sol.infeasibility = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        if (basis[i] >= art_begin) {
            sol.infeasibility += std::max(0.0, t[i][rhs_col]);
        }
    }
    if (!std::isfinite(sol.infeasibility)) {
        throw SolverError("simplex produced a non-finite objective");
    }
    if (sol.infeasibility > tol) {
        sol.status = Status::Infeasible;
        return sol;
    }
    sol.status = Status::Feasible;
    sol.point.assign(n, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        if (basis[i] < n) {
            sol.point[basis[i]] = std::max(0.0, t[i][rhs_col]);
        }
    }
    return sol;
}

const Solver& default_solver() {
    static const DenseSimplex solver;
    return solver;
}

}  // namespace choix::lp
