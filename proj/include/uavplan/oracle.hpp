#pragma once

#include <vector>

#include "uavplan/energy.hpp"
#include "uavplan/grid.hpp"
#include "uavplan/qlearning.hpp"

namespace uavplan {

struct ValueIterationResult {
    ValueMap values;
    // Full argmax action set per non-terminal cell, row-major.
    std::vector<std::vector<Action>> optimal_actions;
    int iterations = 0;
};

// Exact Bellman fixed point with V(destination) = 0 and the destination
// reward granted on the entering transition, matching the learner's update.
ValueIterationResult value_iteration(const GridMap& grid, const RewardTable& rewards, double gamma,
                                     double tol);

struct RefuelPathResult {
    bool feasible = false;
    int steps = 0;
    std::vector<Cell> path;  // start .. destination when feasible
};

// BFS over (cell, charge) product states. No-fly cells are excluded from the
// search graph; power-station-bearing cells restore full charge. Returns the
// minimum move count from (start, full) to the destination, or infeasible.
RefuelPathResult refuel_shortest_path(const GridMap& grid, const BatteryModel& battery,
                                      Cell start);

// Plain BFS shortest-path length ignoring charge, over non-no-fly cells;
// -1 when unreachable.
int unconstrained_shortest_path(const GridMap& grid, Cell start);

}  // namespace uavplan
