#pragma once

#include <cstdint>
#include <string>

#include "uavplan/energy.hpp"
#include "uavplan/experiments.hpp"
#include "uavplan/grid.hpp"
#include "uavplan/qlearning.hpp"

namespace uavplan {

// Policy/value document: JSON with grid dimensions, per-cell action letter
// and value, the hyperparameters used, the seed, and episodes_run.
std::string policy_document(const GridMap& grid, const Policy& policy, const ValueMap& values,
                            const Hyperparams& hyper, std::uint64_t seed, long episodes_run);

struct PolicyDocument {
    Policy policy;
    ValueMap values;
    Hyperparams hyper;
    std::uint64_t seed = 0;
    long episodes_run = 0;
};

PolicyDocument parse_policy_document(const std::string& text);

// Two-column CSV `episode,delta`.
std::string deltas_csv(const TrainingLog& log);

// `step,row,col,battery` rows plus a trailing summary line.
std::string trace_csv(const EnergyTrace& trace);

// `extra_ps,trials,successes,probability`.
std::string sweep_csv(const SweepResult& result);

// `episode,delta,delta_smoothed`.
std::string convergence_csv(const TrainingLog& log, const ConvergenceReport& report);

// ASCII policy map: per cell the greedy action letter, with power stations,
// no-fly cells, and the destination marked.
std::string render_policy_map(const GridMap& grid, const Policy& policy);

// One-line sparkline of values scaled to [0, 1].
std::string sparkline(const std::vector<double>& values);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace uavplan
