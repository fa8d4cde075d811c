#include "choix/models.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace choix {

Pmf::Pmf(std::vector<double> probabilities) : p_(std::move(probabilities)) {
    if (p_.empty()) {
        throw InvalidInput("a pmf needs at least one state");
    }
    for (double x : p_) {
        if (!(x >= 0.0) || !std::isfinite(x)) {
            throw InvalidInput("pmf entries must be nonnegative and finite");
        }
    }
    const double sum = std::accumulate(p_.begin(), p_.end(), 0.0);
    if (std::abs(sum - 1.0) > 1e-12) {
        throw InvalidInput("pmf entries must sum to 1");
    }
}

Pmf Pmf::degenerate(std::size_t dim, std::size_t state) {
    if (state >= dim) {
        throw InvalidInput("state index out of range");
    }
    std::vector<double> p(dim, 0.0);
    p[state] = 1.0;
    return Pmf(std::move(p));
}

CredalSet::CredalSet(std::vector<Pmf> extremes) : extremes_(std::move(extremes)) {
    if (extremes_.empty()) {
        throw InvalidInput("a credal set needs at least one extreme pmf");
    }
    for (const Pmf& p : extremes_) {
        if (p.dim() != extremes_.front().dim()) {
            throw DimensionMismatch("extreme pmfs of different dimension");
        }
    }
}

ESet::ESet(std::vector<CredalSet> members) : members_(std::move(members)) {
    if (members_.empty()) {
        throw InvalidInput("an E-set needs at least one lower expectation");
    }
    for (const CredalSet& c : members_) {
        if (c.dim() != members_.front().dim()) {
            throw DimensionMismatch("lower expectations of different dimension");
        }
    }
}

std::string_view to_string(ModelKind kind) noexcept {
    switch (kind) {
        case ModelKind::Linear:
            return "lin";
        case ModelKind::Maximality:
            return "max";
        case ModelKind::EAdmissibility:
            return "adm";
        case ModelKind::Imprecise:
            return "imp";
    }
    return "lin";
}

ModelKind parse_model(std::string_view name) {
    if (name == "lin") {
        return ModelKind::Linear;
    }
    if (name == "max") {
        return ModelKind::Maximality;
    }
    if (name == "adm") {
        return ModelKind::EAdmissibility;
    }
    if (name == "imp") {
        return ModelKind::Imprecise;
    }
    throw InvalidInput("unknown model '" + std::string(name) + "' (expected lin, max, adm or imp)");
}

double expectation(const Pmf& p, const Option& u) {
    if (p.dim() != u.dim()) {
        throw DimensionMismatch("pmf and option dimensions differ");
    }
    double e = 0.0;
    for (std::size_t x = 0; x < u.dim(); ++x) {
        e += p[x] * u[x];
    }
    return e;
}

double lower_expectation(const CredalSet& credal, const Option& u) {
    double low = expectation(credal.extremes().front(), u);
    for (const Pmf& p : credal.extremes()) {
        low = std::min(low, expectation(p, u));
    }
    return low;
}

OptionSet choose_by_eset(const ESet& es, const OptionSet& options, const ToleranceConfig& cfg) {
    check_dim(options, es.dim());
    OptionSet chosen;
    for (const Option& u : options) {
        const bool dominated =
            std::ranges::any_of(options, [&](const Option& v) { return strictly_less(u, v, cfg); });
        if (dominated) {
            continue;
        }
        const bool undominated_somewhere =
            std::ranges::any_of(es.members(), [&](const CredalSet& credal) {
                return std::ranges::all_of(options, [&](const Option& v) {
                    return lower_expectation(credal, v - u) <= 0.0;
                });
            });
        if (undominated_somewhere) {
            chosen.push_back(u);
        }
    }
    return chosen;
}

CredalSet epsilon_contamination(const Pmf& p, double eps) {
    if (!(eps >= 0.0 && eps <= 1.0)) {
        throw InvalidInput("contamination level must lie in [0, 1]");
    }
    if (eps == 0.0) {
        return CredalSet({p});
    }
    std::vector<Pmf> extremes;
    extremes.reserve(p.dim());
    for (std::size_t x = 0; x < p.dim(); ++x) {
        std::vector<double> q(p.dim());
        for (std::size_t y = 0; y < p.dim(); ++y) {
            q[y] = (1.0 - eps) * p[y] + (x == y ? eps : 0.0);
        }
        const double sum = std::accumulate(q.begin(), q.end(), 0.0);
        for (double& v : q) {
            v /= sum;
        }
        extremes.emplace_back(std::move(q));
    }
    return CredalSet(std::move(extremes));
}

Pmf random_pmf(std::size_t dim, Rng& rng) {
    if (dim == 0) {
        throw InvalidInput("dimension must be at least 1");
    }
    std::exponential_distribution<double> exp1(1.0);
    std::vector<double> w(dim);
    double sum = 0.0;
    for (double& x : w) {
        x = exp1(rng);
        sum += x;
    }
    for (double& x : w) {
        x /= sum;
    }
    return Pmf(std::move(w));
}

ESet random_eset(ModelKind kind, std::size_t dim, std::size_t extremes_per_lowerexp, Rng& rng) {
    if (extremes_per_lowerexp == 0) {
        throw InvalidInput("a lower expectation needs at least one extreme pmf");
    }
    const bool lower = kind == ModelKind::Maximality || kind == ModelKind::Imprecise;
    const bool several = kind == ModelKind::EAdmissibility || kind == ModelKind::Imprecise;
    const std::size_t members = several ? 3 : 1;
    const std::size_t extremes = lower ? extremes_per_lowerexp : 1;
    std::vector<CredalSet> out;
    out.reserve(members);
    for (std::size_t i = 0; i < members; ++i) {
        std::vector<Pmf> ps;
        ps.reserve(extremes);
        for (std::size_t j = 0; j < extremes; ++j) {
            ps.push_back(random_pmf(dim, rng));
        }
        out.emplace_back(std::move(ps));
    }
    return ESet(std::move(out));
}

Assessment build_assessment(const ESet& es, std::span<const OptionSet> sets,
                            const ToleranceConfig& cfg) {
    Assessment out(es.dim());
    for (const OptionSet& set : sets) {
        AssessmentPair pair;
        pair.chosen = choose_by_eset(es, set, cfg);
        for (const Option& u : set) {
            if (!contains(pair.chosen, u)) {
                pair.rejected.push_back(u);
            }
        }
        out.add(std::move(pair));
    }
    return out;
}

OptionSet random_option_set(Rng& rng, std::pair<int, int> count_range, std::size_t dim,
                            std::pair<double, double> cube) {
    if (count_range.first < 1 || count_range.second < count_range.first) {
        throw InvalidInput("invalid option count range");
    }
    if (dim == 0 || !(cube.first < cube.second)) {
        throw InvalidInput("invalid option domain");
    }
    std::uniform_int_distribution<int> count(count_range.first, count_range.second);
    std::uniform_real_distribution<double> coord(cube.first, cube.second);
    const int n = count(rng);
    OptionSet out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        std::vector<double> v(dim);
        for (double& x : v) {
            x = coord(rng);
        }
        out.emplace_back(std::move(v));
    }
    return out;
}

}  // namespace choix
