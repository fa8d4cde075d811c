#include "choix/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include "choix/bench.hpp"
#include "choix/choice.hpp"
#include "choix/json_io.hpp"

namespace choix::cli {

namespace {

ToleranceConfig tolerance_from_env() {
    ToleranceConfig cfg;
    if (const char* raw = std::getenv("CHOIX_LP_TOL"); raw != nullptr && *raw != '\0') {
        char* end = nullptr;
        const double v = std::strtod(raw, &end);
        if (end == raw || *end != '\0' || !(v >= 0.0)) {
            throw InvalidInput(std::string("CHOIX_LP_TOL is not a nonnegative number: ") + raw);
        }
        cfg.lp_tol = v;
    }
    return cfg;
}

Json simplify_report(const Assessment& assessment, const ToleranceConfig& cfg) {
    const ConjGenerator naive = assessment_to_conjunctive_naive(assessment);
    const ConjGenerator simpl = assessment_to_conjunctive(assessment, cfg);
    const DisjGenerator full = conjunctive_to_disjunctive_simplified(simpl, cfg);
    Json sizes{{"h_naive", naive.sets.size()},
               {"h_simplified", simpl.sets.size()},
               {"g_naive", to_string(disjunctive_size(naive))},
               {"g_conj", to_string(disjunctive_size(simpl))},
               {"g_full", full.sets.size()}};
    return Json{{"conjunctive_naive", to_json(naive.sets)},
                {"conjunctive", to_json(simpl.sets)},
                {"inconsistent", simpl.inconsistent},
                {"disjunctive", to_json(full.sets)},
                {"sizes", std::move(sizes)}};
}

int run_experiment(const std::string& kind, const std::string& config_path,
                   const std::optional<std::uint64_t>& seed, const std::string& out_path,
                   std::ostream& out) {
    bench::ExperimentConfig cfg = bench::config_from_json(read_json_file(config_path));
    if (seed) {
        cfg.seed = *seed;
    }
    std::ofstream file;
    std::ostream* sink = &out;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
            throw InvalidInput("cannot write " + out_path);
        }
        sink = &file;
    }
    if (kind == "size") {
        bench::write_size_csv(*sink, bench::run_size_experiment(cfg));
    } else if (kind == "epsilon") {
        bench::write_epsilon_csv(*sink, bench::run_epsilon_experiment(cfg));
    } else {
        bench::write_timing_csv(*sink, bench::run_timing_experiment(cfg));
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Consistency and natural extension of choice assessments", "choix"};
    app.require_subcommand(1);

    std::string assessment_path;
    std::string options_path;
    std::string method_name = "full";
    std::string config_path;
    std::string out_path;
    std::string kind;
    std::optional<std::uint64_t> seed;
    const std::vector<std::string> methods{"naive", "conj", "full"};

    auto* check = app.add_subcommand("check", "Decide whether an assessment is consistent");
    check->add_option("--assessment", assessment_path, "Assessment JSON file")->required();
    check->add_option("--method", method_name, "naive, conj or full")
        ->check(CLI::IsMember(methods));

    auto* choose = app.add_subcommand("choose", "Evaluate the natural extension on an option set");
    choose->add_option("--assessment", assessment_path, "Assessment JSON file")->required();
    choose->add_option("--options", options_path, "Option-set JSON file")->required();
    choose->add_option("--method", method_name, "naive, conj or full")
        ->check(CLI::IsMember(methods));

    auto* simplify = app.add_subcommand("simplify", "Print simplified generators and their sizes");
    simplify->add_option("--assessment", assessment_path, "Assessment JSON file")->required();

    auto* experiment = app.add_subcommand("experiment", "Run an experiment and write CSV");
    experiment->add_option("kind", kind, "size, epsilon or timing")
        ->required()
        ->check(CLI::IsMember({"size", "epsilon", "timing"}));
    experiment->add_option("--config", config_path, "Experiment config JSON file")->required();
    experiment->add_option("--seed", seed, "Override the config's seed");
    experiment->add_option("--out", out_path, "CSV output path (stdout if omitted)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        const ToleranceConfig cfg = tolerance_from_env();
        if (check->parsed()) {
            const Assessment a = assessment_from_json(read_json_file(assessment_path));
            const bool consistent = check_consistency(a, parse_method(method_name), cfg);
            out << Json{{"consistent", consistent}}.dump() << '\n';
            return consistent ? kOk : kInconsistent;
        }
        if (choose->parsed()) {
            const Assessment a = assessment_from_json(read_json_file(assessment_path));
            const OptionSet options =
                option_set_from_json(read_json_file(options_path), a.dimension());
            const ChoiceResult r = natural_extension(options, a, parse_method(method_name), cfg);
            out << to_json(r).dump() << '\n';
            return kOk;
        }
        if (simplify->parsed()) {
            const Assessment a = assessment_from_json(read_json_file(assessment_path));
            out << simplify_report(a, cfg).dump() << '\n';
            return kOk;
        }
        return run_experiment(kind, config_path, seed, out_path, out);
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const Json::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const lp::SolverError& e) {
        err << "solver error: " << e.what() << '\n';
        return kSolverError;
    }
}

}  // namespace choix::cli
