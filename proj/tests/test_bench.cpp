#include <doctest.h>

#include <sstream>

#include "choix/bench.hpp"

using namespace choix;
using namespace choix::bench;

namespace {

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) {
        out.push_back(l);
    }
    return out;
}

ExperimentConfig small(ModelKind model) {
    ExperimentConfig cfg;
    cfg.dim = 3;
    cfg.L = 4;
    cfg.reps = 2;
    cfg.set_size = {2, 4};
    cfg.model = model;
    cfg.queries = 2;
    cfg.budget_s = 30;
    return cfg;
}

}  // namespace

TEST_SUITE("bench") {

TEST_CASE("config parsing") {
    const ExperimentConfig cfg = config_from_json(parse_json_text(
        R"({"seed":7,"dim":3,"L":5,"reps":2,"set_size":[2,4],"model":"imp",)"
        R"("epsilon":{"start":0.1,"stop":0.3,"step":0.1},"budget_s":5})"));
    CHECK(cfg.seed == 7);
    CHECK(cfg.L == 5);
    CHECK(cfg.model == ModelKind::Imprecise);
    CHECK(cfg.set_size == std::pair{2, 4});
    const auto grid = cfg.epsilon_grid();
    REQUIRE(grid.size() == 3);
    CHECK(grid[2] == doctest::Approx(0.3));
    CHECK(ExperimentConfig{}.epsilon_grid().size() == 33);
    CHECK_THROWS_AS((config_from_json(parse_json_text(R"({"colour":1})"))), InvalidInput);
    CHECK_THROWS_AS((config_from_json(parse_json_text(R"({"dim":0})"))), InvalidInput);
    CHECK_THROWS_AS((config_from_json(parse_json_text(R"({"set_size":[3,2]})"))), InvalidInput);
    CHECK_THROWS_AS((config_from_json(parse_json_text(R"({"model":"x"})"))), InvalidInput);
}

TEST_CASE("mean cells") {
    CHECK(mean_cell({BigNat(1), BigNat(2)}) == "1.5");
    CHECK(mean_cell({BigNat(3)}) == "3");
    CHECK(mean_cell({BigNat(1), BigNat(1), BigNat(2)}) == "1.333");
    CHECK(mean_cell({BigNat(1), std::nullopt}) == "timeout");
    CHECK(mean_value({BigNat(1), BigNat(2)}) == 1.5);
    CHECK_FALSE(mean_value({std::nullopt}));
}

TEST_CASE("size experiment invariants and schema") {
    const auto rows = run_size_experiment(small(ModelKind::Maximality));
    REQUIRE(rows.size() == 5);
    CHECK(rows[0].l == 0);
    CHECK(mean_cell(rows[0].g_naive) == "1");
    CHECK(mean_cell(rows[0].g_full) == "1");
    for (const SizeRow& r : rows) {
        for (std::size_t k = 0; k < 2; ++k) {
            REQUIRE(r.g_full[k]);
            CHECK(*r.g_full[k] <= *r.g_conj[k]);
            CHECK(*r.g_conj[k] <= *r.g_naive[k]);
        }
    }
    std::ostringstream csv;
    write_size_csv(csv, rows);
    const auto ls = lines(csv.str());
    CHECK(ls.front() == "l,g_naive,g_conj,g_full");
    CHECK(ls.size() == 6);
}

TEST_CASE("linear model keeps a single disjunctive set") {
    for (const SizeRow& r : run_size_experiment(small(ModelKind::Linear))) {
        for (const auto& v : r.g_full) {
            CHECK(v == BigNat(1));
        }
    }
}

TEST_CASE("seeded runs are reproducible") {
    std::ostringstream a, b;
    write_size_csv(a, run_size_experiment(small(ModelKind::Imprecise)));
    write_size_csv(b, run_size_experiment(small(ModelKind::Imprecise)));
    CHECK(a.str() == b.str());
}

TEST_CASE("epsilon experiment") {
    ExperimentConfig cfg = small(ModelKind::Linear);
    cfg.eps_start = 0.1;
    cfg.eps_stop = 0.9;
    cfg.eps_step = 0.4;
    const auto rows = run_epsilon_experiment(cfg);
    REQUIRE(rows.size() == 3);
    for (const EpsilonRow& r : rows) {
        CHECK(r.h_naive.size() == 2);
        for (std::size_t k = 0; k < 2; ++k) {
            CHECK(r.h_simpl[k] <= r.h_naive[k]);
            REQUIRE(r.g_full[k]);
            CHECK(*r.g_full[k] <= *r.g_conj[k]);
        }
    }
    std::ostringstream csv;
    write_epsilon_csv(csv, rows);
    const auto ls = lines(csv.str());
    CHECK(ls.front() == "epsilon,h_naive,h_simpl,g_naive,g_conj,g_full");
    CHECK(ls[1].rfind("0.1,", 0) == 0);
}

TEST_CASE("timing experiment schema") {
    ExperimentConfig cfg = small(ModelKind::Maximality);
    cfg.L = 2;
    const auto rows = run_timing_experiment(cfg);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].l == 1);
    for (const TimingRow& r : rows) {
        CHECK(r.mean(r.t_build_full));
        CHECK(*r.mean(r.t_choose_naive) >= 0);
        const auto range = r.full_build_range();
        REQUIRE(range);
        CHECK(range->first <= range->second);
    }
    std::ostringstream csv;
    write_timing_csv(csv, rows);
    const auto ls = lines(csv.str());
    CHECK(ls.front() ==
          "l,t_build_naive,t_build_conj,t_build_full,t_choose_naive,t_choose_conj,t_choose_full,breakeven_n");
    CHECK(ls.size() == 3);
    CHECK(std::count(ls[1].begin(), ls[1].end(), ',') == 7);
}

TEST_CASE("timeouts are reported as such") {
    ExperimentConfig cfg = small(ModelKind::Imprecise);
    cfg.set_size = {8, 8};
    cfg.L = 6;
    cfg.reps = 1;
    cfg.budget_s = 1e-9;
    const auto rows = run_size_experiment(cfg);
    std::ostringstream csv;
    write_size_csv(csv, rows);
    CHECK(csv.str().find("timeout") != std::string::npos);
    // once a cell times out, later prefixes stay timed out
    bool seen = false;
    for (const SizeRow& r : rows) {
        if (seen) {
            CHECK_FALSE(r.g_full[0]);
        }
        seen = seen || !r.g_full[0];
    }
}

}
