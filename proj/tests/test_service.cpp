#include <doctest.h>
#include <httplib.h>

#include <filesystem>
#include <thread>

#include "choix/choice.hpp"
#include "choix/service.hpp"

using namespace choix;
using namespace choix::service;
namespace fs = std::filesystem;

namespace {

const Json kPair1 = Json::parse(R"({"chosen":[[5,-3],[3,-2]],"rejected":[[1,-1],[-2,1]]})");
const Json kPair2 = Json::parse(R"({"chosen":[[-4,8]],"rejected":[[3,1]]})");
const Json kBadPair = Json::parse(R"({"chosen":[[0,0]],"rejected":[[1,1]]})");

std::string make_session(SessionService& s, int dim = 2) {
    const Response r = s.create_session(Json{{"dimension", dim}});
    REQUIRE(r.status == 201);
    return r.body["id"].get<std::string>();
}

}  // namespace

TEST_SUITE("service") {

TEST_CASE("session lifecycle") {
    SessionService s;
    const std::string id = make_session(s);
    CHECK(s.session_count() == 1);
    CHECK(s.consistency(id).body == Json{{"consistent", true}});

    const Response st = s.stats(id);
    CHECK(st.status == 200);
    CHECK(st.body["h_naive"] == 0);
    CHECK(st.body["h_simplified"] == 0);
    CHECK(st.body["g_naive_size"] == "1");
    CHECK(st.body["g_full_size"] == 1);

    CHECK(s.add_pair(id, kPair1).status == 200);
    const Response added = s.add_pair(id, kPair2);
    CHECK(added.body["consistent"] == true);
    CHECK(added.body["pairs"] == 2);
    CHECK(s.stats(id).body["g_full_size"] == 1);
    CHECK(s.stats(id).body["g_naive_size"] == "4");

    const Response c3 = s.choose(id, Json::parse(R"({"options":[[-3,4],[0,1],[4,-3]]})"));
    CHECK(c3.body["chosen"] == Json::parse("[[-3,4]]"));
    const Response c4 = s.choose(id, Json::parse(R"({"options":[[-2,2],[5,-4]]})"));
    CHECK(c4.body["chosen"] == Json::parse("[[-2,2],[5,-4]]"));
    const Response single = s.choose(id, Json::parse(R"({"options":[[1,1]]})"));
    CHECK(single.body["chosen"] == Json::parse("[[1,1]]"));

    CHECK(s.add_pair(id, kBadPair).body["consistent"] == false);
    CHECK(s.stats(id).body["g_full_size"] == 0);
    CHECK(s.consistency(id).body["consistent"] == false);
    CHECK(s.remove_pair(id, 2).body["consistent"] == true);
    CHECK(s.get_session(id).body["pairs"].size() == 2);

    CHECK(s.delete_session(id).status == 200);
    CHECK(s.get_session(id).status == 404);
    CHECK(s.session_count() == 0);
}

TEST_CASE("a mutation that flips a decision is never served stale") {
    SessionService s;
    const std::string id = make_session(s);
    s.add_pair(id, kPair1);
    s.add_pair(id, kPair2);
    const Json a4 = Json::parse(R"({"options":[[-2,2],[5,-4]]})");
    CHECK(s.choose(id, a4).body["chosen"].size() == 2);
    s.add_pair(id, Json::parse(R"({"chosen":[[-2,2]],"rejected":[[5,-4]]})"));
    CHECK(s.choose(id, a4).body["chosen"] == Json::parse("[[-2,2]]"));
    s.remove_pair(id, 2);
    CHECK(s.choose(id, a4).body["chosen"].size() == 2);
}

TEST_CASE("errors") {
    SessionService s;
    CHECK(s.get_session("nope").status == 404);
    CHECK(s.consistency("nope").status == 404);
    CHECK(s.create_session(Json{{"dimension", 0}}).status == 400);
    CHECK(s.create_session(Json::object()).status == 400);
    const std::string id = make_session(s);
    CHECK(s.add_pair(id, Json::parse(R"({"chosen":[[1,2,3]]})")).status == 400);
    CHECK(s.add_pair(id, Json::parse(R"({"chosen":[]})")).status == 400);
    CHECK(s.remove_pair(id, 0).status == 404);
    CHECK(s.choose(id, Json::parse(R"({"options":[]})")).status == 400);
    CHECK(s.choose(id, Json::parse(R"({"options":[[1]]})")).status == 400);
    CHECK(s.choose(id, Json::parse(R"("x")")).status == 400);
}

TEST_CASE("rebuild timeout reports partial stats") {
    ServiceOptions o;
    o.rebuild_timeout_s = 0.0;
    SessionService s(o);
    const std::string id = make_session(s);
    const Response r = s.add_pair(id, kPair1);
    CHECK(r.status == 503);
    CHECK(r.body.contains("error"));
    CHECK(r.body["stats"]["h_naive"] == 2);
    // the pair itself was recorded
    CHECK(s.get_session(id).body["pairs"].size() == 1);
}

TEST_CASE("sessions persist across restarts") {
    const fs::path dir = fs::temp_directory_path() / "choix-service-state";
    fs::remove_all(dir);
    std::string id;
    {
        ServiceOptions o;
        o.state_dir = dir;
        SessionService s(o);
        id = make_session(s);
        s.add_pair(id, kPair1);
        s.add_pair(id, kPair2);
    }
    {
        ServiceOptions o;
        o.state_dir = dir;
        SessionService s(o);
        CHECK(s.session_count() == 1);
        CHECK(s.get_session(id).body["pairs"].size() == 2);
        CHECK(s.choose(id, Json::parse(R"([[-3,4],[0,1],[4,-3]])")).body["chosen"] == Json::parse("[[-3,4]]"));
        s.delete_session(id);
    }
    {
        ServiceOptions o;
        o.state_dir = dir;
        CHECK(SessionService(o).session_count() == 0);
    }
    fs::remove_all(dir);
}

TEST_CASE("HTTP routes") {
    SessionService service;
    httplib::Server server;
    mount_routes(server, service);
    const int port = server.bind_to_any_port("127.0.0.1");
    REQUIRE(port > 0);
    std::thread worker([&] { server.listen_after_bind(); });
    server.wait_until_ready();

    httplib::Client client("127.0.0.1", port);
    auto created = client.Post("/api/sessions", R"({"dimension":2})", "application/json");
    REQUIRE(created);
    CHECK(created->status == 201);
    const std::string id = Json::parse(created->body)["id"];
    const std::string base = "/api/sessions/" + id;

    auto cons = client.Get(base + "/consistency");
    REQUIRE(cons);
    CHECK(Json::parse(cons->body) == Json{{"consistent", true}});
    CHECK(client.Post(base + "/pairs", kPair1.dump(), "application/json")->status == 200);
    CHECK(client.Post(base + "/pairs", kPair2.dump(), "application/json")->status == 200);

    auto chosen = client.Post(base + "/choose", R"({"options":[[-3,4],[0,1],[4,-3]]})", "application/json");
    REQUIRE(chosen);
    const Json lib = to_json(natural_extension(
        {Option{-3, 4}, Option{0, 1}, Option{4, -3}},
        Assessment(2, {{{Option{5, -3}, Option{3, -2}}, {Option{1, -1}, Option{-2, 1}}},
                       {{Option{-4, 8}}, {Option{3, 1}}}})));
    CHECK(Json::parse(chosen->body) == lib);

    auto bad = client.Post(base + "/pairs", kBadPair.dump(), "application/json");
    CHECK(Json::parse(bad->body)["consistent"] == false);
    CHECK(client.Delete(base + "/pairs/2")->status == 200);
    CHECK(Json::parse(client.Get(base + "/stats")->body)["g_full_size"] == 1);
    CHECK(client.Get(base)->status == 200);

    CHECK(client.Get("/api/sessions/unknown")->status == 404);
    CHECK(client.Post("/api/sessions", "{oops", "application/json")->status == 400);
    CHECK(client.Delete(base)->status == 200);
    CHECK(client.Get(base + "/stats")->status == 404);

    server.stop();
    worker.join();
}

}
