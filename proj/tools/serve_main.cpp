#include <httplib.h>

#include <CLI11.hpp>
#include <iostream>

#include "choix/service.hpp"

int main(int argc, char** argv) {
    CLI::App app{"HTTP service for interactive choice elicitation", "choix-serve"};
    std::string host = "127.0.0.1";
    int port = 8080;
    std::string state_dir;
    std::string static_dir;
    double timeout_s = 30.0;
    bool cors = false;
    app.add_option("--host", host, "Bind address");
    app.add_option("--port", port, "Port")->check(CLI::Range(0, 65535));
    app.add_option("--state-dir", state_dir, "Directory for session snapshots");
    app.add_option("--timeout", timeout_s, "Seconds allowed for a generator rebuild")
        ->check(CLI::PositiveNumber);
    app.add_option("--static", static_dir, "Serve files from this directory at /");
    app.add_flag("--cors", cors, "Allow cross-origin requests (for a separately served frontend)");
    CLI11_PARSE(app, argc, argv);

    choix::service::ServiceOptions options;
    if (!state_dir.empty()) {
        options.state_dir = state_dir;
    }
    options.rebuild_timeout_s = timeout_s;

    choix::service::SessionService service(options);
    httplib::Server server;
    choix::service::mount_routes(server, service);
    if (cors) {
        server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                                    {"Access-Control-Allow-Methods", "GET, POST, DELETE, OPTIONS"},
                                    {"Access-Control-Allow-Headers", "Content-Type"}});
        server.Options(".*", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
    }
    if (!static_dir.empty() && !server.set_mount_point("/", static_dir)) {
        std::cerr << "cannot serve " << static_dir << '\n';
        return 2;
    }
    std::cerr << "listening on " << host << ':' << port << " (" << service.session_count()
              << " sessions restored)\n";
    if (!server.listen(host, port)) {
        std::cerr << "cannot bind " << host << ':' << port << '\n';
        return 1;
    }
    return 0;
}
