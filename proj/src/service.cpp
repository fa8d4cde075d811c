#include "choix/service.hpp"

#include <httplib.h>

#include <fstream>
#include <shared_mutex>
#include <sstream>

#include "choix/choice.hpp"

namespace choix::service {

struct SessionService::Session {
    Session(std::string id_, Assessment a) : id(std::move(id_)), assessment(std::move(a)) {}

    std::string id;
    Assessment assessment;
    // Mutations take it exclusively, queries shared.
    std::shared_mutex mutex;
    // Guards the lazily rebuilt simplified pipeline.
    std::mutex cache_mutex;
    std::shared_ptr<const Pipeline> full;
};

namespace {

Response error(int status, const std::string& message) {
    return {status, Json{{"error", message}}};
}

Response not_found(const std::string& id) { return error(404, "unknown session '" + id + "'"); }

Json partial_stats(const Assessment& a, const ToleranceConfig& cfg) {
    const ConjGenerator naive = assessment_to_conjunctive_naive(a);
    const ConjGenerator simpl = assessment_to_conjunctive(a, cfg);
    return Json{{"h_naive", naive.sets.size()},
                {"h_simplified", simpl.sets.size()},
                {"g_naive_size", to_string(disjunctive_size(naive))}};
}

template <typename F>
Response guarded(F&& f) {
    try {
        return f();
    } catch (const InvalidInput& e) {
        return error(400, e.what());
    } catch (const Json::exception& e) {
        return error(400, e.what());
    } catch (const lp::SolverError& e) {
        return error(500, std::string("solver error: ") + e.what());
    }
}

}  // namespace

SessionService::SessionService(ServiceOptions options)
    : options_(std::move(options)), id_rng_(std::random_device{}()) {
    options_.tolerance.validate();
    if (options_.state_dir) {
        std::filesystem::create_directories(*options_.state_dir);
        load_state();
    }
}

SessionService::~SessionService() = default;

std::size_t SessionService::session_count() const {
    std::lock_guard lock(sessions_mutex_);
    return sessions_.size();
}

std::shared_ptr<SessionService::Session> SessionService::find(const std::string& id) const {
    std::lock_guard lock(sessions_mutex_);
    auto it = sessions_.find(id);
    return it == sessions_.end() ? nullptr : it->second;
}

std::string SessionService::new_id() {
    // caller holds sessions_mutex_
    std::ostringstream s;
    s << std::hex << id_rng_();
    return s.str();
}

void SessionService::persist(const Session& s) const {
    if (!options_.state_dir) {
        return;
    }
    const auto path = *options_.state_dir / (s.id + ".json");
    const auto tmp = *options_.state_dir / (s.id + ".json.tmp");
    {
        std::ofstream out(tmp);
        out << Json{{"id", s.id}, {"assessment", to_json(s.assessment)}}.dump();
    }
    std::filesystem::rename(tmp, path);
}

void SessionService::load_state() {
    for (const auto& entry : std::filesystem::directory_iterator(*options_.state_dir)) {
        if (entry.path().extension() != ".json") {
            continue;
        }
        try {
            const Json j = read_json_file(entry.path().string());
            const std::string id = j.at("id").get<std::string>();
            sessions_.emplace(id, std::make_shared<Session>(id, assessment_from_json(j.at("assessment"))));
        } catch (const std::exception&) {
            // unreadable snapshots are skipped, not fatal
        }
    }
}

Response SessionService::create_session(const Json& body) {
    return guarded([&] {
        if (!body.is_object() || !body.contains("dimension") ||
            !body["dimension"].is_number_integer() || body["dimension"].get<long long>() < 1) {
            return error(400, "\"dimension\" must be a positive integer");
        }
        Assessment a(static_cast<std::size_t>(body["dimension"].get<long long>()));
        std::shared_ptr<Session> s;
        {
            std::lock_guard lock(sessions_mutex_);
            std::string id;
            do {
                id = new_id();
            } while (sessions_.contains(id));
            s = std::make_shared<Session>(id, std::move(a));
            sessions_.emplace(id, s);
        }
        persist(*s);
        return Response{201, Json{{"id", s->id}, {"dimension", s->assessment.dimension()}}};
    });
}

Response SessionService::get_session(const std::string& id) {
    auto s = find(id);
    if (!s) {
        return not_found(id);
    }
    std::shared_lock lock(s->mutex);
    Json j = to_json(s->assessment);
    j["id"] = s->id;
    return {200, std::move(j)};
}

Response SessionService::delete_session(const std::string& id) {
    std::shared_ptr<Session> s;
    {
        std::lock_guard lock(sessions_mutex_);
        auto it = sessions_.find(id);
        if (it == sessions_.end()) {
            return not_found(id);
        }
        s = it->second;
        sessions_.erase(it);
    }
    if (options_.state_dir) {
        std::error_code ec;
        std::filesystem::remove(*options_.state_dir / (id + ".json"), ec);
    }
    return {200, Json{{"deleted", id}}};
}

namespace {

// Caller holds the session lock (shared or exclusive).
template <typename SessionT>
std::shared_ptr<const Pipeline> ensure_full(SessionT& s, const ServiceOptions& options) {
    std::lock_guard lock(s.cache_mutex);
    if (!s.full) {
        s.full = std::make_shared<const Pipeline>(
            s.assessment, Method::Full, options.tolerance, lp::default_solver(),
            Deadline::after_seconds(options.rebuild_timeout_s));
    }
    return s.full;
}

Response timeout_response(const Assessment& a, const ToleranceConfig& cfg) {
    return {503, Json{{"error", "rebuilding the simplified generator exceeded the time budget"},
                      {"stats", partial_stats(a, cfg)}}};
}

}  // namespace

Response SessionService::add_pair(const std::string& id, const Json& body) {
    auto s = find(id);
    if (!s) {
        return not_found(id);
    }
    return guarded([&] {
        std::unique_lock lock(s->mutex);
        s->assessment.add(pair_from_json(body, s->assessment.dimension()));
        {
            std::lock_guard cache(s->cache_mutex);
            s->full.reset();
        }
        persist(*s);
        try {
            const auto p = ensure_full(*s, options_);
            return Response{200, Json{{"pairs", s->assessment.size()}, {"consistent", p->consistent()}}};
        } catch (const Timeout&) {
            return timeout_response(s->assessment, options_.tolerance);
        }
    });
}

Response SessionService::remove_pair(const std::string& id, std::size_t index) {
    auto s = find(id);
    if (!s) {
        return not_found(id);
    }
    return guarded([&] {
        std::unique_lock lock(s->mutex);
        if (index >= s->assessment.size()) {
            return error(404, "no pair at index " + std::to_string(index));
        }
        s->assessment.remove(index);
        {
            std::lock_guard cache(s->cache_mutex);
            s->full.reset();
        }
        persist(*s);
        try {
            const auto p = ensure_full(*s, options_);
            return Response{200, Json{{"pairs", s->assessment.size()}, {"consistent", p->consistent()}}};
        } catch (const Timeout&) {
            return timeout_response(s->assessment, options_.tolerance);
        }
    });
}

Response SessionService::consistency(const std::string& id) {
    auto s = find(id);
    if (!s) {
        return not_found(id);
    }
    return guarded([&] {
        std::shared_lock lock(s->mutex);
        try {
            return Response{200, Json{{"consistent", ensure_full(*s, options_)->consistent()}}};
        } catch (const Timeout&) {
            return timeout_response(s->assessment, options_.tolerance);
        }
    });
}

Response SessionService::choose(const std::string& id, const Json& body) {
    auto s = find(id);
    if (!s) {
        return not_found(id);
    }
    return guarded([&] {
        std::shared_lock lock(s->mutex);
        const OptionSet options = option_set_from_json(body, s->assessment.dimension());
        if (options.empty()) {
            return error(400, "\"options\" must contain at least one option");
        }
        try {
            return Response{200, to_json(ensure_full(*s, options_)->choose(options))};
        } catch (const Timeout&) {
            return timeout_response(s->assessment, options_.tolerance);
        }
    });
}

Response SessionService::stats(const std::string& id) {
    auto s = find(id);
    if (!s) {
        return not_found(id);
    }
    return guarded([&] {
        std::shared_lock lock(s->mutex);
        Json j = partial_stats(s->assessment, options_.tolerance);
        try {
            const auto p = ensure_full(*s, options_);
            j["g_full_size"] = p->materialized() ? p->materialized()->sets.size() : 0;
            return Response{200, std::move(j)};
        } catch (const Timeout&) {
            return timeout_response(s->assessment, options_.tolerance);
        }
    });
}

void mount_routes(httplib::Server& server, SessionService& service) {
    auto reply = [](httplib::Response& res, const Response& r) {
        res.status = r.status;
        res.set_content(r.body.dump(), "application/json");
    };
    auto with_body = [reply](const httplib::Request& req, httplib::Response& res, auto&& f) {
        Json body;
        try {
            body = parse_json_text(req.body);
        } catch (const InvalidInput& e) {
            reply(res, error(400, e.what()));
            return;
        }
        reply(res, f(body));
    };
    const std::string sid = R"(/api/sessions/([A-Za-z0-9_-]+))";

    server.Post("/api/sessions", [&service, with_body](const httplib::Request& req, httplib::Response& res) {
        with_body(req, res, [&](const Json& b) { return service.create_session(b); });
    });
    server.Get(sid, [&service, reply](const httplib::Request& req, httplib::Response& res) {
        reply(res, service.get_session(req.matches[1]));
    });
    server.Delete(sid, [&service, reply](const httplib::Request& req, httplib::Response& res) {
        reply(res, service.delete_session(req.matches[1]));
    });
    server.Post(sid + "/pairs", [&service, with_body](const httplib::Request& req, httplib::Response& res) {
        const std::string id = req.matches[1];
        with_body(req, res, [&](const Json& b) { return service.add_pair(id, b); });
    });
    server.Delete(sid + R"(/pairs/(\d+))", [&service, reply](const httplib::Request& req, httplib::Response& res) {
        const std::string id = req.matches[1];
        std::size_t index = 0;
        try {
            index = std::stoull(req.matches[2]);
        } catch (const std::exception&) {
            reply(res, error(400, "bad pair index"));
            return;
        }
        reply(res, service.remove_pair(id, index));
    });
    server.Get(sid + "/consistency", [&service, reply](const httplib::Request& req, httplib::Response& res) {
        reply(res, service.consistency(req.matches[1]));
    });
    server.Post(sid + "/choose", [&service, with_body](const httplib::Request& req, httplib::Response& res) {
        const std::string id = req.matches[1];
        with_body(req, res, [&](const Json& b) { return service.choose(id, b); });
    });
    server.Get(sid + "/stats", [&service, reply](const httplib::Request& req, httplib::Response& res) {
        reply(res, service.stats(req.matches[1]));
    });
}

}  // namespace choix::service
