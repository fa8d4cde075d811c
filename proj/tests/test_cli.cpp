#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "choix/choice.hpp"
#include "choix/cli.hpp"
#include "choix/json_io.hpp"

using namespace choix;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / ("choix-cli-" + std::to_string(std::rand()))) {
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string write(const std::string& name, const std::string& text) const {
        std::ofstream(path / name) << text;
        return (path / name).string();
    }
};

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

const char* kRunning =
    R"({"dimension":2,"pairs":[{"chosen":[[5,-3],[3,-2]],"rejected":[[1,-1],[-2,1]]},)"
    R"({"chosen":[[-4,8]],"rejected":[[3,1]]}]})";

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("check") {
    TempDir t;
    const auto a = t.write("a.json", kRunning);
    for (const char* m : {"naive", "conj", "full"}) {
        const Run r = run({"check", "--assessment", a, "--method", m});
        CHECK(r.code == cli::kOk);
        CHECK(r.out == "{\"consistent\":true}\n");
    }
    const auto bad = t.write("bad.json", R"({"dimension":2,"pairs":[{"chosen":[[0,0]],"rejected":[[1,1]]}]})");
    const Run r = run({"check", "--assessment", bad});
    CHECK(r.code == cli::kInconsistent);
    CHECK(r.out == "{\"consistent\":false}\n");
}

TEST_CASE("choose matches the library byte for byte") {
    TempDir t;
    const auto a = t.write("a.json", kRunning);
    const auto o = t.write("o.json", R"({"options":[[-3,4],[0,1],[4,-3]]})");
    const Run r = run({"choose", "--assessment", a, "--options", o});
    CHECK(r.code == cli::kOk);
    CHECK(r.out == "{\"chosen\":[[-3,4]],\"consistent\":true,\"rejected\":[[0,1],[4,-3]]}\n");
    const ChoiceResult lib = natural_extension(option_set_from_json(read_json_file(o)),
                                               assessment_from_json(read_json_file(a)));
    CHECK(r.out == to_json(lib).dump() + "\n");
}

TEST_CASE("simplify") {
    TempDir t;
    const auto a = t.write("a.json", kRunning);
    const Run r = run({"simplify", "--assessment", a});
    REQUIRE(r.code == cli::kOk);
    const Json j = parse_json_text(r.out);
    CHECK(j["sizes"]["h_naive"] == 3);
    CHECK(j["sizes"]["g_naive"] == "4");
    CHECK(j["sizes"]["g_full"] == 1);
    CHECK(j["inconsistent"] == false);
    CHECK(j["conjunctive"].size() == 3);
}

TEST_CASE("input errors exit 2") {
    TempDir t;
    CHECK(run({}).code == cli::kInputError);
    CHECK(run({"bogus"}).code == cli::kInputError);
    CHECK(run({"check"}).code == cli::kInputError);
    CHECK(run({"check", "--assessment", (t.path / "missing.json").string()}).code == cli::kInputError);
    const auto junk = t.write("junk.json", "{]");
    const Run r = run({"check", "--assessment", junk});
    CHECK(r.code == cli::kInputError);
    CHECK(r.err.find("error") != std::string::npos);
    const auto a = t.write("a.json", kRunning);
    CHECK(run({"check", "--assessment", a, "--method", "fast"}).code == cli::kInputError);
    const auto o3 = t.write("o.json", R"([[1,2,3]])");
    CHECK(run({"choose", "--assessment", a, "--options", o3}).code == cli::kInputError);
    CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("experiment writes CSV") {
    TempDir t;
    const auto cfg = t.write("c.json", R"({"dim":2,"L":2,"reps":1,"set_size":[2,3],"model":"lin"})");
    const auto out = (t.path / "sizes.csv").string();
    const Run r = run({"experiment", "size", "--config", cfg, "--out", out});
    REQUIRE(r.code == cli::kOk);
    std::ifstream in(out);
    std::string header;
    std::getline(in, header);
    CHECK(header == "l,g_naive,g_conj,g_full");
    const Run to_stdout = run({"experiment", "size", "--config", cfg});
    CHECK(to_stdout.out.rfind("l,g_naive", 0) == 0);
    CHECK(run({"experiment", "size", "--config", cfg}).out == to_stdout.out);
    CHECK(run({"experiment", "size", "--config", cfg, "--seed", "42"}).out == to_stdout.out);
    CHECK(run({"experiment", "size", "--config", cfg, "--seed", "x"}).code == cli::kInputError);
    const auto bad = t.write("bad.json", R"({"dim":2,"colour":"red"})");
    CHECK(run({"experiment", "size", "--config", bad}).code == cli::kInputError);
    CHECK(run({"experiment", "nope", "--config", cfg}).code == cli::kInputError);
}

}
