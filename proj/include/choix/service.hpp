#pragma once

// Session-scoped elicitation API. SessionService holds the logic and speaks
// JSON in, (status, JSON) out; mount_routes wires it onto an HTTP server:
//
//   POST   /api/sessions                      {"dimension": 2}
//   GET    /api/sessions/{id}
//   DELETE /api/sessions/{id}
//   POST   /api/sessions/{id}/pairs           {"chosen": [...], "rejected": [...]}
//   DELETE /api/sessions/{id}/pairs/{index}
//   GET    /api/sessions/{id}/consistency
//   POST   /api/sessions/{id}/choose          {"options": [...]}
//   GET    /api/sessions/{id}/stats
//
// Errors come back as {"error": "..."}.

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>

#include "choix/json_io.hpp"

namespace httplib {
class Server;
}

namespace choix::service {

struct Response {
    int status = 200;
    Json body;
};

struct ServiceOptions {
    /// When set, every session is mirrored to <state_dir>/<id>.json.
    std::optional<std::filesystem::path> state_dir;
    /// Budget for rebuilding a session's simplified generator; exceeded → 503.
    double rebuild_timeout_s = 30.0;
    ToleranceConfig tolerance;
};

class SessionService {
public:
    explicit SessionService(ServiceOptions options = {});
    ~SessionService();

    SessionService(const SessionService&) = delete;
    SessionService& operator=(const SessionService&) = delete;

    Response create_session(const Json& body);
    Response get_session(const std::string& id);
    Response delete_session(const std::string& id);
    Response add_pair(const std::string& id, const Json& body);
    Response remove_pair(const std::string& id, std::size_t index);
    Response consistency(const std::string& id);
    Response choose(const std::string& id, const Json& body);
    Response stats(const std::string& id);

    std::size_t session_count() const;

private:
    struct Session;

    std::shared_ptr<Session> find(const std::string& id) const;
    std::string new_id();
    void persist(const Session& s) const;
    void load_state();

    ServiceOptions options_;
    mutable std::mutex sessions_mutex_;
    std::map<std::string, std::shared_ptr<Session>> sessions_;
    std::mt19937_64 id_rng_;
};

/// Registers the REST routes on `server`. `service` must outlive the server.
void mount_routes(httplib::Server& server, SessionService& service);

}  // namespace choix::service
