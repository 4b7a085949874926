#include "uavplan/qlearning.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

namespace uavplan {

void Hyperparams::validate() const {
    if (!(gamma > 0 && gamma < 1)) throw std::invalid_argument("gamma must be in (0,1)");
    if (!(alpha0 > 0)) throw std::invalid_argument("alpha0 must be > 0");
    if (epochs < 1) throw std::invalid_argument("epochs must be >= 1");
    if (!(eps_numerator > 0)) throw std::invalid_argument("eps_numerator must be > 0");
    if (!(convergence_threshold >= 0))
        throw std::invalid_argument("convergence_threshold must be >= 0");
}

QTable::QTable(const GridMap& grid, const RewardTable& rewards)
    : rows_(grid.rows()), cols_(grid.cols()), dest_(grid.destination()) {
    const std::size_t n = grid.cell_count();
    legal_.resize(n);
    q_.assign(n, {0.0, 0.0, 0.0, 0.0});
    counts_sa_.assign(n, {0, 0, 0, 0});
    counts_s_.assign(n, 0);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) {
            Cell cell{r, c};
            if (grid.is_terminal(cell)) continue;
            legal_[idx(cell)] = available_actions(grid, cell);
            for (Action a : legal_[idx(cell)]) {
                // Initial value: the immediate reward of the entered cell.
                q_[idx(cell)][static_cast<std::size_t>(a)] =
                    reward_for_entering(grid, rewards, neighbor(cell, a));
            }
        }
    }
}

bool QTable::has_state(Cell c) const {
    return c.row >= 0 && c.row < rows_ && c.col >= 0 && c.col < cols_ && c != dest_;
}

std::span<const Action> QTable::actions(Cell c) const {
    if (!has_state(c)) throw std::invalid_argument("cell is not a Q-table state");
    return legal_[idx(c)];
}

void QTable::check_key(Cell c, Action a) const {
    if (!has_state(c)) throw std::invalid_argument("cell is not a Q-table state");
    const auto& legal = legal_[idx(c)];
    if (std::find(legal.begin(), legal.end(), a) == legal.end())
        throw std::invalid_argument("action is not legal at this cell");
}

double QTable::q(Cell c, Action a) const {
    check_key(c, a);
    return q_[idx(c)][static_cast<std::size_t>(a)];
}

void QTable::set_q(Cell c, Action a, double value) {
    check_key(c, a);
    q_[idx(c)][static_cast<std::size_t>(a)] = value;
}

std::uint64_t QTable::count_sa(Cell c, Action a) const {
    check_key(c, a);
    return counts_sa_[idx(c)][static_cast<std::size_t>(a)];
}

void QTable::increment_count_sa(Cell c, Action a) {
    check_key(c, a);
    ++counts_sa_[idx(c)][static_cast<std::size_t>(a)];
}

std::uint64_t QTable::count_s(Cell c) const {
    if (!has_state(c)) throw std::invalid_argument("cell is not a Q-table state");
    return counts_s_[idx(c)];
}

void QTable::increment_count_s(Cell c) {
    if (!has_state(c)) throw std::invalid_argument("cell is not a Q-table state");
    ++counts_s_[idx(c)];
}

std::pair<Action, double> QTable::best(Cell c) const {
    const auto legal = actions(c);
    if (legal.empty()) throw std::logic_error("no legal actions at cell");
    Action best_a = legal[0];
    double best_q = q_[idx(c)][static_cast<std::size_t>(best_a)];
    for (Action a : legal.subspan(1)) {
        double v = q_[idx(c)][static_cast<std::size_t>(a)];
        if (v > best_q) {  // strict: ties keep the earlier action in tie order
            best_q = v;
            best_a = a;
        }
    }
    return {best_a, best_q};
}

std::vector<Action> QTable::argmax_set(Cell c, double tie_tol) const {
    auto [a, m] = best(c);
    std::vector<Action> out;
    for (Action cand : actions(c)) {
        if (q_[idx(c)][static_cast<std::size_t>(cand)] >= m - tie_tol) out.push_back(cand);
    }
    return out;
}

Action epsilon_greedy(Action proposed, std::span<const Action> legal, double eps, Rng& rng) {
    if (legal.empty()) throw std::invalid_argument("legal action set is empty");
    if (std::find(legal.begin(), legal.end(), proposed) == legal.end())
        throw std::invalid_argument("proposed action is not legal");
    if (!(eps >= 0)) throw std::invalid_argument("eps must be >= 0");
    const double u = rng.uniform01();
    if (u < std::min(eps, 1.0)) return legal[rng.uniform_index(legal.size())];
    return proposed;
}

double adaptive_alpha(double alpha0, std::uint64_t count, double offset, double slope) {
    return alpha0 / (offset + static_cast<double>(count) * slope);
}

double q_update(double q_sa, double reward, double max_q_next, double alpha, double gamma) {
    return q_sa + alpha * (reward + gamma * max_q_next - q_sa);
}

namespace {

// Destination reachability under unconstrained 4-neighbor movement.
bool destination_reachable(const GridMap& grid) {
    std::vector<std::uint8_t> seen(grid.cell_count(), 0);
    std::deque<Cell> frontier{grid.start()};
    seen[grid.index(grid.start())] = 1;
    while (!frontier.empty()) {
        Cell c = frontier.front();
        frontier.pop_front();
        if (c == grid.destination()) return true;
        for (Action a : kActionOrder) {
            Cell n = neighbor(c, a);
            if (!grid.in_bounds(n) || seen[grid.index(n)]) continue;
            seen[grid.index(n)] = 1;
            frontier.push_back(n);
        }
    }
    return false;
}

}  // namespace

TrainResult train(const GridMap& grid, const RewardTable& rewards, const Hyperparams& hyper,
                  std::uint64_t seed) {
    hyper.validate();
    rewards.validate();
    if (!destination_reachable(grid))
        throw std::runtime_error("destination is unreachable from the start");

    // Episode start states: uniform over non-terminal, non-no-fly cells.
    std::vector<Cell> start_states;
    for (int r = 0; r < grid.rows(); ++r) {
        for (int c = 0; c < grid.cols(); ++c) {
            Cell cell{r, c};
            if (grid.is_terminal(cell) || grid.at(cell) == CellKind::NoFly) continue;
            start_states.push_back(cell);
        }
    }

    QTable q(grid, rewards);
    TrainingLog log;
    Rng rng(seed);

    const long step_cap = 10L * grid.rows() * grid.cols();
    const int early_stop_window = 100;
    int below_threshold_streak = 0;

    for (long episode = 1; episode <= hyper.epochs; ++episode) {
        const double eps = hyper.eps_numerator / static_cast<double>(episode);
        Cell s = start_states[rng.uniform_index(start_states.size())];
        Action a = q.best(s).first;
        double biggest_change = 0.0;

        long steps = 0;
        while (!grid.is_terminal(s) && steps < step_cap) {
            a = epsilon_greedy(a, q.actions(s), eps, rng);
            auto [s2, r] = step(grid, rewards, s, a);
            const double alpha = adaptive_alpha(hyper.alpha0, q.count_sa(s, a),
                                                hyper.alpha_decay_offset, hyper.alpha_decay_slope);
            q.increment_count_sa(s, a);
            const double old_qsa = q.q(s, a);
            Action a2 = a;
            double max_q_next = 0.0;  // V(destination) = 0
            if (!grid.is_terminal(s2)) std::tie(a2, max_q_next) = q.best(s2);
            const double updated = q_update(old_qsa, r, max_q_next, alpha, hyper.gamma);
            q.set_q(s, a, updated);
            biggest_change = std::max(biggest_change, std::abs(old_qsa - updated));
            q.increment_count_s(s);
            ++log.total_updates;
            s = s2;
            a = a2;
            ++steps;
        }

        log.deltas.push_back(biggest_change);
        log.episodes_run = episode;

        if (hyper.convergence_threshold > 0) {
            if (biggest_change < hyper.convergence_threshold) {
                if (++below_threshold_streak >= early_stop_window) break;
            } else {
                below_threshold_streak = 0;
            }
        }
    }

    return {std::move(q), std::move(log)};
}

std::pair<Policy, ValueMap> extract_policy(const QTable& q) {
    Policy policy;
    ValueMap values;
    policy.rows = values.rows = q.rows();
    policy.cols = values.cols = q.cols();
    const std::size_t n = static_cast<std::size_t>(q.rows()) * q.cols();
    policy.actions.assign(n, std::nullopt);
    values.values.assign(n, 0.0);
    for (int r = 0; r < q.rows(); ++r) {
        for (int c = 0; c < q.cols(); ++c) {
            Cell cell{r, c};
            if (!q.has_state(cell)) continue;
            auto [a, v] = q.best(cell);
            policy.actions[static_cast<std::size_t>(r) * q.cols() + c] = a;
            values.values[static_cast<std::size_t>(r) * q.cols() + c] = v;
        }
    }
    return {std::move(policy), std::move(values)};
}

}  // namespace uavplan
