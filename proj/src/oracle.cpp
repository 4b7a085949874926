#include "uavplan/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>

namespace uavplan {

ValueIterationResult value_iteration(const GridMap& grid, const RewardTable& rewards, double gamma,
                                     double tol) {
    if (!(gamma > 0 && gamma < 1)) throw std::invalid_argument("gamma must be in (0,1)");
    if (!(tol > 0)) throw std::invalid_argument("tol must be > 0");
    rewards.validate();

    const std::size_t n = grid.cell_count();
    std::vector<double> v(n, 0.0);  // V(destination) pinned at 0
    int iterations = 0;

    for (;;) {
        ++iterations;
        double max_change = 0.0;
        for (int r = 0; r < grid.rows(); ++r) {
            for (int c = 0; c < grid.cols(); ++c) {
                Cell s{r, c};
                if (grid.is_terminal(s)) continue;
                double best = -std::numeric_limits<double>::infinity();
                for (Action a : available_actions(grid, s)) {
                    auto [s2, reward] = step(grid, rewards, s, a);
                    const double next_v = grid.is_terminal(s2) ? 0.0 : v[grid.index(s2)];
                    best = std::max(best, reward + gamma * next_v);
                }
                max_change = std::max(max_change, std::abs(best - v[grid.index(s)]));
                v[grid.index(s)] = best;
            }
        }
        if (max_change < tol) break;
    }

    ValueIterationResult out;
    out.values.rows = grid.rows();
    out.values.cols = grid.cols();
    out.values.values = v;
    out.iterations = iterations;
    out.optimal_actions.resize(n);
    const double tie_tol = std::max(tol * 10.0, 1e-9);
    for (int r = 0; r < grid.rows(); ++r) {
        for (int c = 0; c < grid.cols(); ++c) {
            Cell s{r, c};
            if (grid.is_terminal(s)) continue;
            double best = -std::numeric_limits<double>::infinity();
            std::vector<std::pair<Action, double>> qs;
            for (Action a : available_actions(grid, s)) {
                auto [s2, reward] = step(grid, rewards, s, a);
                const double next_v = grid.is_terminal(s2) ? 0.0 : v[grid.index(s2)];
                const double q = reward + gamma * next_v;
                qs.emplace_back(a, q);
                best = std::max(best, q);
            }
            for (auto [a, q] : qs) {
                if (q >= best - tie_tol) out.optimal_actions[grid.index(s)].push_back(a);
            }
        }
    }
    return out;
}

RefuelPathResult refuel_shortest_path(const GridMap& grid, const BatteryModel& battery,
                                      Cell start) {
    battery.validate();
    if (!grid.in_bounds(start)) throw std::invalid_argument("start out of bounds");

    RefuelPathResult out;
    if (grid.at(start) == CellKind::NoFly) return out;  // strictly feasible optimum only

    const int full = battery.step_range();
    const int reserve = battery.reserve_steps();
    const std::size_t n = grid.cell_count();
    const std::size_t states = n * static_cast<std::size_t>(full + 1);

    auto charge_at = [&](Cell c, int charge) {
        return grid.recharges(c) ? full : charge;
    };
    auto state_id = [&](Cell c, int charge) {
        return grid.index(c) * static_cast<std::size_t>(full + 1) + charge;
    };

    std::vector<std::int64_t> parent(states, -2);  // -2 unseen, -1 root
    const int start_charge = charge_at(start, full);
    std::deque<std::pair<Cell, int>> frontier{{start, start_charge}};
    parent[state_id(start, start_charge)] = -1;

    std::int64_t goal = -1;
    std::vector<int> dist(states, 0);
    while (!frontier.empty() && goal < 0) {
        auto [cell, charge] = frontier.front();
        frontier.pop_front();
        const std::size_t id = state_id(cell, charge);
        if (cell == grid.destination()) {
            goal = static_cast<std::int64_t>(id);
            break;
        }
        if (charge - 1 < reserve) continue;  // no outgoing edges when out of charge
        for (Action a : kActionOrder) {
            Cell next = neighbor(cell, a);
            if (!grid.in_bounds(next) || grid.at(next) == CellKind::NoFly) continue;
            const int next_charge = charge_at(next, charge - 1);
            const std::size_t nid = state_id(next, next_charge);
            if (parent[nid] != -2) continue;
            parent[nid] = static_cast<std::int64_t>(id);
            dist[nid] = dist[id] + 1;
            frontier.emplace_back(next, next_charge);
        }
    }

    if (goal < 0) return out;

    out.feasible = true;
    out.steps = dist[static_cast<std::size_t>(goal)];
    for (std::int64_t id = goal; id != -1; id = parent[static_cast<std::size_t>(id)]) {
        const std::size_t cell_index = static_cast<std::size_t>(id) / (full + 1);
        out.path.push_back({static_cast<int>(cell_index / grid.cols()),
                            static_cast<int>(cell_index % grid.cols())});
    }
    std::reverse(out.path.begin(), out.path.end());
    return out;
}

int unconstrained_shortest_path(const GridMap& grid, Cell start) {
    if (!grid.in_bounds(start)) throw std::invalid_argument("start out of bounds");
    std::vector<int> dist(grid.cell_count(), -1);
    std::deque<Cell> frontier{start};
    dist[grid.index(start)] = 0;
    while (!frontier.empty()) {
        Cell c = frontier.front();
        frontier.pop_front();
        if (c == grid.destination()) return dist[grid.index(c)];
        for (Action a : kActionOrder) {
            Cell nb = neighbor(c, a);
            if (!grid.in_bounds(nb) || grid.at(nb) == CellKind::NoFly) continue;
            if (dist[grid.index(nb)] >= 0) continue;
            dist[grid.index(nb)] = dist[grid.index(c)] + 1;
            frontier.push_back(nb);
        }
    }
    return -1;
}

}  // namespace uavplan
