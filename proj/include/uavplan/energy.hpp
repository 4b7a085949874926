#pragma once

#include <vector>

#include "uavplan/grid.hpp"
#include "uavplan/qlearning.hpp"

namespace uavplan {

struct BatteryModel {
    double capacity = 1.0;       // full charge
    double per_step_cost = 0.1;  // charge per cell move
    double min_reserve = 0.0;    // minimum charge required to land

    void validate() const;  // throws std::invalid_argument

    // Whole-step charge quanta; capacity/per_step_cost must be integral.
    int step_range() const;
    // Quanta that must remain after any move.
    int reserve_steps() const;
};

enum class Outcome : int { Success = 0, Depleted = 2, Loop = 3, NoFlyViolation = 4 };

inline int outcome_exit_code(Outcome o) { return static_cast<int>(o); }
const char* outcome_name(Outcome o);

struct TraceStep {
    Cell cell;
    double battery;  // after arrival (and recharge, if any)
};

struct EnergyTrace {
    std::vector<TraceStep> steps;  // includes the start cell at index 0
    Outcome outcome = Outcome::Success;
    double min_battery = 0.0;
    long total_steps = 0;
    double mission_time = 0.0;  // s
};

inline constexpr double kDefaultCellSize = 800.0;       // m
inline constexpr double kDefaultSpeed = 800.0 / 60.0;   // m/s (800 m per minute)

// Follows the policy from `start` with a full battery, deducting one step
// cost per move and recharging to capacity on power-station-bearing cells.
// A visit to a no-fly cell flags the trace NoFlyViolation without stopping it.
EnergyTrace simulate_policy(const GridMap& grid, const Policy& policy, const BatteryModel& battery,
                            Cell start, double cell_size_m = kDefaultCellSize,
                            double speed_mps = kDefaultSpeed);

double mission_time(long total_steps, double cell_size_m, double speed_mps);

}  // namespace uavplan
