#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "uavplan/energy.hpp"
#include "uavplan/grid.hpp"
#include "uavplan/qlearning.hpp"

namespace uavplan {

enum class SuccessMode : std::uint8_t { StartToDest, AllCells };

struct SweepConfig {
    int rows = 20;
    int cols = 20;
    std::vector<int> extra_ps_counts;  // defaults to 0..50 when empty
    int trials_per_count = 100;
    int nofly_count = 0;
    std::uint64_t seed = 1;
    SuccessMode mode = SuccessMode::StartToDest;
    Cell start{1, 1};
    Cell dest{14, 14};
    BatteryModel battery{};
    // When true each trial trains a fresh Q-learning policy instead of
    // asking the exact oracle; much slower, used for fidelity runs.
    bool use_learner = false;
    Hyperparams hyper{};
    RewardTable rewards{};

    void validate() const;
};

struct SweepEntry {
    int extra_ps = 0;
    int trials = 0;
    int successes = 0;
    double probability = 0.0;
};

struct SweepResult {
    std::vector<SweepEntry> entries;
    int trials_per_count = 0;
    std::uint64_t seed = 0;
};

// Monte-Carlo feasibility sweep over random power-station counts. Each
// (count, trial) pair gets a derived child seed, so results are bit-exact
// reproducible regardless of execution order or parallelism.
SweepResult run_sweep(const SweepConfig& config);

// Builds one trial's map: k power stations placed uniformly without
// replacement (plus fixed PSs at start and destination), after any no-fly
// cells. Exposed for testing.
GridMap make_trial_map(const SweepConfig& config, int extra_ps, std::uint64_t trial_seed);

struct ConvergenceReport {
    // First 1-based episode at which the trailing-window max delta is below
    // the threshold; empty when never converged.
    std::optional<long> converged_episode;
    std::vector<double> smoothed;  // trailing window average per episode
};

ConvergenceReport convergence_report(const TrainingLog& log, long window, double threshold);

}  // namespace uavplan
