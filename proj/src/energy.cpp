#include "uavplan/energy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace uavplan {

void BatteryModel::validate() const {
    if (!(capacity > 0)) throw std::invalid_argument("capacity must be > 0");
    if (!(per_step_cost > 0 && per_step_cost <= capacity))
        throw std::invalid_argument("per_step_cost must be in (0, capacity]");
    if (!(min_reserve >= 0 && min_reserve < capacity))
        throw std::invalid_argument("min_reserve must be in [0, capacity)");
    const double ratio = capacity / per_step_cost;
    if (std::abs(ratio - std::llround(ratio)) > 1e-9)
        throw std::invalid_argument("capacity must be an integral number of step costs");
}

int BatteryModel::step_range() const {
    validate();
    return static_cast<int>(std::llround(capacity / per_step_cost));
}

int BatteryModel::reserve_steps() const {
    // Smallest quanta count whose charge is >= min_reserve.
    return static_cast<int>(std::ceil(min_reserve / per_step_cost - 1e-12));
}

const char* outcome_name(Outcome o) {
    switch (o) {
        case Outcome::Success: return "Success";
        case Outcome::Depleted: return "Depleted";
        case Outcome::Loop: return "Loop";
        case Outcome::NoFlyViolation: return "NoFlyViolation";
    }
    return "?";
}

double mission_time(long total_steps, double cell_size_m, double speed_mps) {
    if (!(speed_mps > 0)) throw std::domain_error("speed must be > 0");
    return static_cast<double>(total_steps) * cell_size_m / speed_mps;
}

EnergyTrace simulate_policy(const GridMap& grid, const Policy& policy, const BatteryModel& battery,
                            Cell start, double cell_size_m, double speed_mps) {
    battery.validate();
    if (!grid.in_bounds(start)) throw std::invalid_argument("start out of bounds");
    if (grid.at(start) == CellKind::NoFly) throw std::invalid_argument("start is a no-fly cell");
    if (policy.rows != grid.rows() || policy.cols != grid.cols())
        throw std::invalid_argument("policy dimensions do not match the grid");

    const int full = battery.step_range();
    const int reserve = battery.reserve_steps();
    // Charge tracked in whole step quanta to keep arithmetic exact.
    int charge = full;  // mission starts with a full battery

    EnergyTrace trace;
    trace.steps.push_back({start, battery.capacity});
    trace.min_battery = battery.capacity;

    bool nofly_visited = grid.at(start) == CellKind::NoFly;
    bool depleted = false;
    bool looped = false;

    const long hard_cap = static_cast<long>(grid.rows()) * grid.cols() * full;
    std::unordered_set<std::size_t> since_recharge{grid.index(start)};

    Cell cell = start;
    while (!grid.is_terminal(cell)) {
        auto action = policy.at(cell);
        if (!action) throw std::invalid_argument("policy has no action at a visited cell");
        if (charge - 1 < reserve) {
            depleted = true;  // next move would breach the reserve
            break;
        }
        Cell next = neighbor(cell, *action);
        if (!grid.in_bounds(next)) throw std::invalid_argument("policy action leaves the grid");
        --charge;
        if (grid.recharges(next)) {
            charge = full;
            since_recharge.clear();
        }
        ++trace.total_steps;
        if (grid.at(next) == CellKind::NoFly) nofly_visited = true;

        const double level = charge * battery.per_step_cost;
        trace.steps.push_back({next, level});
        trace.min_battery = std::min(trace.min_battery, level);
        cell = next;

        if (!since_recharge.insert(grid.index(next)).second || trace.total_steps > hard_cap) {
            looped = true;  // revisit without recharge, or step budget exhausted
            break;
        }
    }

    if (nofly_visited)
        trace.outcome = Outcome::NoFlyViolation;
    else if (depleted)
        trace.outcome = Outcome::Depleted;
    else if (looped)
        trace.outcome = Outcome::Loop;
    else
        trace.outcome = Outcome::Success;

    trace.mission_time = mission_time(trace.total_steps, cell_size_m, speed_mps);
    return trace;
}

}  // namespace uavplan
