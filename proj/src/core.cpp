#include "choix/core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace choix {

void ToleranceConfig::validate() const {
    if (!(tau >= 0.0) || !(lp_tol >= 0.0)) {
        throw InvalidInput("tolerances must be nonnegative");
    }
}

Option::Option(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) {
        throw InvalidInput("an option needs at least one component");
    }
    if (!std::ranges::all_of(values_, [](double x) { return std::isfinite(x); })) {
        throw InvalidInput("option components must be finite");
    }
}

Option::Option(std::initializer_list<double> values) : Option(std::vector<double>(values)) {}

Option Option::zero(std::size_t dim) { return Option(std::vector<double>(dim, 0.0)); }

Option Option::unit(std::size_t dim, std::size_t axis) {
    if (axis >= dim) {
        throw InvalidInput("unit vector axis out of range");
    }
    std::vector<double> v(dim, 0.0);
    v[axis] = 1.0;
    return Option(std::move(v));
}

Option& Option::operator+=(const Option& other) {
    check_same_dim(*this, other);
    for (std::size_t i = 0; i < values_.size(); ++i) {
        values_[i] += other.values_[i];
    }
    return *this;
}

Option& Option::operator-=(const Option& other) {
    check_same_dim(*this, other);
    for (std::size_t i = 0; i < values_.size(); ++i) {
        values_[i] -= other.values_[i];
    }
    return *this;
}

Option& Option::operator*=(double factor) {
    for (double& x : values_) {
        x *= factor;
    }
    return *this;
}

Option operator+(Option lhs, const Option& rhs) { return lhs += rhs; }
Option operator-(Option lhs, const Option& rhs) { return lhs -= rhs; }
Option operator-(Option u) { return u *= -1.0; }
Option operator*(double factor, Option u) { return u *= factor; }

void check_same_dim(const Option& u, const Option& v) {
    if (u.dim() != v.dim()) {
        throw DimensionMismatch("dimension mismatch: " + std::to_string(u.dim()) + " vs " +
                                std::to_string(v.dim()));
    }
}

void check_dim(const OptionSet& set, std::size_t dim) {
    for (const Option& u : set) {
        if (u.dim() != dim) {
            throw DimensionMismatch("option of dimension " + std::to_string(u.dim()) +
                                    " where " + std::to_string(dim) + " was expected");
        }
    }
}

bool leq(const Option& u, const Option& v, const ToleranceConfig& cfg) {
    check_same_dim(u, v);
    for (std::size_t i = 0; i < u.dim(); ++i) {
        if (u[i] > v[i] + cfg.tau) {
            return false;
        }
    }
    return true;
}

bool strictly_less(const Option& u, const Option& v, const ToleranceConfig& cfg) {
    if (!leq(u, v, cfg)) {
        return false;
    }
    for (std::size_t i = 0; i < u.dim(); ++i) {
        if (v[i] - u[i] > cfg.tau) {
            return true;
        }
    }
    return false;
}

bool is_positive(const Option& u, const ToleranceConfig& cfg) {
    return strictly_less(Option::zero(u.dim()), u, cfg);
}

bool is_nonpositive(const Option& u, const ToleranceConfig& cfg) {
    return leq(u, Option::zero(u.dim()), cfg);
}

OptionSet translate_set(const OptionSet& set, const Option& u) {
    OptionSet out;
    out.reserve(set.size());
    for (const Option& a : set) {
        out.push_back(a - u);
    }
    return out;
}

OptionSet scale_shift(const OptionSet& set, double lambda, const Option& shift) {
    OptionSet out;
    out.reserve(set.size());
    for (const Option& a : set) {
        out.push_back(lambda * a + shift);
    }
    return out;
}

Assessment rescale_assessment(const Assessment& assessment, double lambda, const Option& shift) {
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
        throw InvalidInput("rescaling factor must be positive");
    }
    if (shift.dim() != assessment.dimension()) {
        throw DimensionMismatch("shift dimension does not match the assessment");
    }
    Assessment out(assessment.dimension());
    for (const AssessmentPair& p : assessment.pairs()) {
        out.add({scale_shift(p.chosen, lambda, shift), scale_shift(p.rejected, lambda, shift)});
    }
    return out;
}

bool contains(const OptionSet& set, const Option& u) {
    return std::ranges::find(set, u) != set.end();
}

Assessment::Assessment(std::size_t dimension) : dimension_(dimension) {
    if (dimension_ == 0) {
        throw InvalidInput("dimension must be at least 1");
    }
}

Assessment::Assessment(std::size_t dimension, std::vector<AssessmentPair> pairs)
    : Assessment(dimension) {
    pairs_.reserve(pairs.size());
    for (AssessmentPair& p : pairs) {
        add(std::move(p));
    }
}

void Assessment::add(AssessmentPair pair) {
    if (pair.chosen.empty()) {
        throw InvalidInput("the chosen part of a pair must be nonempty");
    }
    check_dim(pair.chosen, dimension_);
    check_dim(pair.rejected, dimension_);
    for (const Option& w : pair.rejected) {
        if (contains(pair.chosen, w)) {
            throw InvalidInput("an option cannot be both chosen and rejected in one pair");
        }
    }
    pairs_.push_back(std::move(pair));
}

void Assessment::remove(std::size_t index) {
    if (index >= pairs_.size()) {
        throw InvalidInput("pair index " + std::to_string(index) + " out of range");
    }
    pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(index));
}

Assessment Assessment::prefix(std::size_t n) const {
    Assessment out(dimension_);
    out.pairs_.assign(pairs_.begin(), pairs_.begin() + static_cast<std::ptrdiff_t>(std::min(n, pairs_.size())));
    return out;
}

}  // namespace choix
