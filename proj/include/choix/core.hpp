#pragma once

// Options, option sets and assessments, together with the componentwise
// vector order every other module builds on.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace choix {

class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DimensionMismatch : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

/// Slack used by the componentwise order (`tau`) and by the LP layer (`lp_tol`).
struct ToleranceConfig {
    double tau = 0.0;
    double lp_tol = 1e-9;

    void validate() const;
};

/// A point of R^X: one utility per state. Always nonempty and finite.
class Option {
public:
    explicit Option(std::vector<double> values);
    Option(std::initializer_list<double> values);

    static Option zero(std::size_t dim);
    static Option unit(std::size_t dim, std::size_t axis);

    std::size_t dim() const noexcept { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    std::span<const double> values() const noexcept { return values_; }

    Option& operator+=(const Option& other);
    Option& operator-=(const Option& other);
    Option& operator*=(double factor);

    friend bool operator==(const Option&, const Option&) = default;

private:
    std::vector<double> values_;
};

Option operator+(Option lhs, const Option& rhs);
Option operator-(Option lhs, const Option& rhs);
Option operator-(Option u);
Option operator*(double factor, Option u);

/// Finite option set stored as an array; duplicates are allowed and order is kept.
using OptionSet = std::vector<Option>;

/// "The options in `rejected` were rejected from chosen ∪ rejected."
struct AssessmentPair {
    OptionSet chosen;
    OptionSet rejected;

    friend bool operator==(const AssessmentPair&, const AssessmentPair&) = default;
};

class Assessment {
public:
    explicit Assessment(std::size_t dimension);
    Assessment(std::size_t dimension, std::vector<AssessmentPair> pairs);

    std::size_t dimension() const noexcept { return dimension_; }
    const std::vector<AssessmentPair>& pairs() const noexcept { return pairs_; }
    std::size_t size() const noexcept { return pairs_.size(); }
    bool empty() const noexcept { return pairs_.empty(); }

    /// Validates and appends; throws InvalidInput on an empty chosen part or
    /// overlapping parts and DimensionMismatch on a wrong dimension.
    void add(AssessmentPair pair);
    void remove(std::size_t index);

    /// The first `n` pairs (all of them if n >= size()).
    Assessment prefix(std::size_t n) const;

    friend bool operator==(const Assessment&, const Assessment&) = default;

private:
    std::size_t dimension_;
    std::vector<AssessmentPair> pairs_;
};

void check_same_dim(const Option& u, const Option& v);
void check_dim(const OptionSet& set, std::size_t dim);

/// u ≤ v componentwise, with slack tau.
bool leq(const Option& u, const Option& v, const ToleranceConfig& cfg = {});

/// u < v: u ≤ v and some component grows by more than tau.
bool strictly_less(const Option& u, const Option& v, const ToleranceConfig& cfg = {});

/// 0 < u.
bool is_positive(const Option& u, const ToleranceConfig& cfg = {});

/// 0 ≥ u componentwise.
bool is_nonpositive(const Option& u, const ToleranceConfig& cfg = {});

/// {a - u : a ∈ A}, in input order.
OptionSet translate_set(const OptionSet& set, const Option& u);

/// {λ a + shift : a ∈ A}.
OptionSet scale_shift(const OptionSet& set, double lambda, const Option& shift);

/// Maps every option x of every pair to λ x + shift. λ must be positive.
Assessment rescale_assessment(const Assessment& assessment, double lambda, const Option& shift);

bool contains(const OptionSet& set, const Option& u);

}  // namespace choix
