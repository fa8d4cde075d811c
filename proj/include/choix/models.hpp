#pragma once

// Credal-set models used to synthesize ground-truth choice functions and the
// consistent assessments they induce.

#include <cstddef>
#include <random>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "choix/core.hpp"

namespace choix {

using Rng = std::mt19937_64;

/// Probability mass function on the state space.
class Pmf {
public:
    /// Throws InvalidInput unless entries are ≥ 0 and sum to 1 within 1e-12.
    explicit Pmf(std::vector<double> probabilities);

    static Pmf degenerate(std::size_t dim, std::size_t state);

    std::size_t dim() const noexcept { return p_.size(); }
    std::span<const double> probabilities() const noexcept { return p_; }
    double operator[](std::size_t i) const { return p_[i]; }

    friend bool operator==(const Pmf&, const Pmf&) = default;

private:
    std::vector<double> p_;
};

/// Finitely generated credal set, given by its extreme pmfs.
class CredalSet {
public:
    explicit CredalSet(std::vector<Pmf> extremes);

    std::size_t dim() const noexcept { return extremes_.front().dim(); }
    const std::vector<Pmf>& extremes() const noexcept { return extremes_; }

private:
    std::vector<Pmf> extremes_;
};

/// A set of lower expectations, each given as a credal set.
class ESet {
public:
    explicit ESet(std::vector<CredalSet> members);

    std::size_t dim() const noexcept { return members_.front().dim(); }
    const std::vector<CredalSet>& members() const noexcept { return members_; }

private:
    std::vector<CredalSet> members_;
};

enum class ModelKind {
    Linear,          ///< "lin": one linear expectation
    Maximality,      ///< "max": one lower expectation
    EAdmissibility,  ///< "adm": three linear expectations
    Imprecise,       ///< "imp": three lower expectations
};

std::string_view to_string(ModelKind kind) noexcept;
ModelKind parse_model(std::string_view name);

double expectation(const Pmf& p, const Option& u);
double lower_expectation(const CredalSet& credal, const Option& u);

/// {u ∈ A : ∃ E ∈ es, ∀ v ∈ A: E(v - u) ≤ 0 and not u < v}.
/// A zero lower expectation counts as "not rejected".
OptionSet choose_by_eset(const ESet& es, const OptionSet& options, const ToleranceConfig& cfg = {});

/// Extremes (1 - ε) p + ε 𝕀_x for every state x; ε = 0 gives {p}.
CredalSet epsilon_contamination(const Pmf& p, double eps);

/// Uniform draw from the probability simplex (normalized exponential spacings).
Pmf random_pmf(std::size_t dim, Rng& rng);

/// One random E-set of the given kind; lower expectations get
/// `extremes_per_lowerexp` random extreme pmfs each.
ESet random_eset(ModelKind kind, std::size_t dim, std::size_t extremes_per_lowerexp, Rng& rng);

/// One pair (C(A_l), A_l \ C(A_l)) per option set, C = choose_by_eset(es, ·).
Assessment build_assessment(const ESet& es, std::span<const OptionSet> sets,
                            const ToleranceConfig& cfg = {});

/// Option set whose size is uniform on `count_range` and whose entries are
/// uniform on `cube`.
OptionSet random_option_set(Rng& rng, std::pair<int, int> count_range, std::size_t dim,
                            std::pair<double, double> cube = {0.0, 1.0});

}  // namespace choix
