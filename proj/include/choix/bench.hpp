#pragma once

// Experiment harness: generator growth with assessment size, growth under
// ε-contamination, and build/choose timings. Results go out as CSV.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "choix/generators.hpp"
#include "choix/json_io.hpp"
#include "choix/models.hpp"

namespace choix::bench {

struct ExperimentConfig {
    std::uint64_t seed = 42;
    std::size_t dim = 4;
    std::size_t L = 10;
    std::size_t reps = 3;
    std::pair<int, int> set_size{2, 8};
    ModelKind model = ModelKind::Maximality;
    std::size_t extremes_per_lowerexp = 4;
    // ε grid for the contamination sweep
    double eps_start = 0.03;
    double eps_stop = 0.99;
    double eps_step = 0.03;
    // random query sets per row in the timing experiment
    std::size_t queries = 5;
    // wall-clock budget per cell, seconds
    double budget_s = 60.0;

    void validate() const;
    std::vector<double> epsilon_grid() const;
};

/// Missing keys keep their defaults; unknown keys are rejected.
ExperimentConfig config_from_json(const Json& j);

/// Per-repetition values of one size column; nullopt marks a timed-out cell.
using SizeColumn = std::vector<std::optional<BigNat>>;

struct SizeRow {
    std::size_t l = 0;
    SizeColumn g_naive;
    SizeColumn g_conj;
    SizeColumn g_full;
};

struct EpsilonRow {
    double epsilon = 0.0;
    std::vector<std::size_t> h_naive;
    std::vector<std::size_t> h_simpl;
    SizeColumn g_naive;
    SizeColumn g_conj;
    SizeColumn g_full;
};

/// Seconds per repetition; nullopt marks a timed-out cell.
using TimeColumn = std::vector<std::optional<double>>;

struct TimingRow {
    std::size_t l = 0;
    TimeColumn t_build_naive;
    TimeColumn t_build_conj;
    TimeColumn t_build_full;
    TimeColumn t_choose_naive;
    TimeColumn t_choose_conj;
    TimeColumn t_choose_full;

    std::optional<double> mean(const TimeColumn& column) const;
    /// (t_build_full - t_build_conj) / (t_choose_conj - t_choose_full) on the
    /// repetition means, when both are available and the denominator is positive.
    std::optional<double> breakeven_n() const;
    /// Spread of the full build time over repetitions.
    std::optional<std::pair<double, double>> full_build_range() const;
};

/// Rows for ℓ = 0..L. The product columns use ∏|H|; the full column is the
/// size of the materialized simplified generator.
std::vector<SizeRow> run_size_experiment(const ExperimentConfig& cfg);

std::vector<EpsilonRow> run_epsilon_experiment(const ExperimentConfig& cfg);

/// Timings are informational only.
std::vector<TimingRow> run_timing_experiment(const ExperimentConfig& cfg);

/// Mean over repetitions as a decimal string (at most three decimals), or
/// "timeout" if any repetition timed out.
std::string mean_cell(const SizeColumn& column);
std::optional<double> mean_value(const SizeColumn& column);

void write_size_csv(std::ostream& out, const std::vector<SizeRow>& rows);
void write_epsilon_csv(std::ostream& out, const std::vector<EpsilonRow>& rows);
void write_timing_csv(std::ostream& out, const std::vector<TimingRow>& rows);

/// Independent stream for one repetition of an experiment.
Rng rep_rng(std::uint64_t seed, std::size_t rep);

}  // namespace choix::bench
