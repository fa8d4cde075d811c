#include "choix/choice.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <string>

namespace choix {

std::string_view to_string(Method m) noexcept {
    switch (m) {
        case Method::Naive:
            return "naive";
        case Method::Conjunctive:
            return "conj";
        case Method::Full:
            return "full";
    }
    return "full";
}

Method parse_method(std::string_view name) {
    if (name == "naive") {
        return Method::Naive;
    }
    if (name == "conj") {
        return Method::Conjunctive;
    }
    if (name == "full") {
        return Method::Full;
    }
    throw InvalidInput("unknown method '" + std::string(name) + "' (expected naive, conj or full)");
}

template <typename F>
decltype(auto) Pipeline::with_generator(F&& f) const {
    if (disj_) {
        return f(disj_->sets);
    }
    return f(disjunctive_stream(conj_));
}

Pipeline::Pipeline(const Assessment& assessment, Method method, const ToleranceConfig& cfg,
                   const lp::Solver& solver, const Deadline& deadline)
    : method_(method), dimension_(assessment.dimension()), cfg_(cfg), solver_(&solver) {
    cfg_.validate();
    switch (method_) {
        case Method::Naive:
            conj_ = assessment_to_conjunctive_naive(assessment);
            break;
        case Method::Conjunctive:
            conj_ = assessment_to_conjunctive(assessment, cfg_, solver);
            break;
        case Method::Full:
            conj_ = assessment_to_conjunctive(assessment, cfg_, solver);
            disj_ = conjunctive_to_disjunctive_simplified(conj_, cfg_, solver, deadline);
            break;
    }
    if (conj_.inconsistent) {
        consistent_ = false;
        return;
    }
    consistent_ = with_generator([&](auto&& gen) {
        return is_consistent_generator(gen, cfg_, *solver_, deadline);
    });
}

bool Pipeline::is_chosen(const OptionSet& options, const Option& u,
                         const Deadline& deadline) const {
    return with_generator([&](auto&& gen) {
        return choix::is_chosen(options, u, gen, cfg_, *solver_, deadline);
    });
}

ChoiceResult Pipeline::choose(const OptionSet& options, const Deadline& deadline) const {
    if (options.empty()) {
        throw InvalidInput("cannot choose from an empty option set");
    }
    check_dim(options, dimension_);
    ChoiceResult result;
    result.consistent = consistent_;
    if (!consistent_) {
        result.rejected = options;
        return result;
    }
    std::vector<std::pair<Option, bool>> decided;
    for (const Option& u : options) {
        auto hit = std::ranges::find_if(decided, [&](const auto& d) { return d.first == u; });
        bool chosen;
        if (hit != decided.end()) {
            chosen = hit->second;
        } else {
            chosen = is_chosen(options, u, deadline);
            decided.emplace_back(u, chosen);
        }
        (chosen ? result.chosen : result.rejected).push_back(u);
    }
    return result;
}

namespace {

constexpr std::size_t kCacheCapacity = 32;

void append_bytes(std::string& key, const void* data, std::size_t n) {
    key.append(static_cast<const char*>(data), n);
}

void append_set(std::string& key, const OptionSet& set) {
    const std::uint64_t n = set.size();
    append_bytes(key, &n, sizeof n);
    for (const Option& u : set) {
        append_bytes(key, u.values().data(), u.dim() * sizeof(double));
    }
}

std::string fingerprint(const Assessment& a, const ToleranceConfig& cfg, const lp::Solver& solver) {
    std::string key;
    const std::uint64_t dim = a.dimension();
    const std::uint64_t pairs = a.size();
    const void* solver_id = &solver;
    append_bytes(key, &dim, sizeof dim);
    append_bytes(key, &cfg.tau, sizeof cfg.tau);
    append_bytes(key, &cfg.lp_tol, sizeof cfg.lp_tol);
    append_bytes(key, &solver_id, sizeof solver_id);
    append_bytes(key, &pairs, sizeof pairs);
    for (const AssessmentPair& p : a.pairs()) {
        append_set(key, p.chosen);
        append_set(key, p.rejected);
    }
    return key;
}

struct PipelineCache {
    std::mutex mutex;
    std::map<std::string, std::shared_ptr<const Pipeline>> entries;
};

PipelineCache& cache() {
    static PipelineCache c;
    return c;
}

}  // namespace

std::shared_ptr<const Pipeline> prepare(const Assessment& assessment, Method method,
                                        const ToleranceConfig& cfg, const lp::Solver& solver) {
    if (method != Method::Full) {
        return std::make_shared<const Pipeline>(assessment, method, cfg, solver);
    }
    const std::string key = fingerprint(assessment, cfg, solver);
    PipelineCache& c = cache();
    {
        std::lock_guard lock(c.mutex);
        if (auto it = c.entries.find(key); it != c.entries.end()) {
            return it->second;
        }
    }
    // Built outside the lock; two racing callers may both build, which is harmless.
    auto built = std::make_shared<const Pipeline>(assessment, method, cfg, solver);
    std::lock_guard lock(c.mutex);
    if (c.entries.size() >= kCacheCapacity) {
        c.entries.clear();
    }
    c.entries.emplace(key, built);
    return built;
}

ChoiceResult natural_extension(const OptionSet& options, const Assessment& assessment,
                               Method method, const ToleranceConfig& cfg,
                               const lp::Solver& solver) {
    return prepare(assessment, method, cfg, solver)->choose(options);
}

bool check_consistency(const Assessment& assessment, Method method, const ToleranceConfig& cfg,
                       const lp::Solver& solver) {
    return prepare(assessment, method, cfg, solver)->consistent();
}

void clear_pipeline_cache() {
    std::lock_guard lock(cache().mutex);
    cache().entries.clear();
}

}  // namespace choix
