#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "uavplan/grid.hpp"
#include "uavplan/rng.hpp"

namespace uavplan {

struct Hyperparams {
    double gamma = 0.9;
    double alpha0 = 0.1;
    double eps_numerator = 0.9;
    long epochs = 100000;
    double alpha_decay_offset = 0.995;
    double alpha_decay_slope = 0.005;
    // Early stop once the per-episode max delta stays below this for 100
    // consecutive episodes; 0 disables early stopping.
    double convergence_threshold = 1e-3;

    void validate() const;
};

// Tabular Q values plus per-(s,a) and per-s update counts. Keys cover exactly
// the non-terminal cells and their legal actions.
class QTable {
public:
    // Initializes q(s, a) to the immediate reward of the cell reached by a.
    QTable(const GridMap& grid, const RewardTable& rewards);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Cell destination() const { return dest_; }

    bool has_state(Cell c) const;
    std::span<const Action> actions(Cell c) const;

    double q(Cell c, Action a) const;
    void set_q(Cell c, Action a, double value);

    std::uint64_t count_sa(Cell c, Action a) const;
    void increment_count_sa(Cell c, Action a);
    std::uint64_t count_s(Cell c) const;
    void increment_count_s(Cell c);

    // Greedy action and its value, ties broken Up < Down < Left < Right.
    std::pair<Action, double> best(Cell c) const;
    // All maximizing actions within tie_tol of the max.
    std::vector<Action> argmax_set(Cell c, double tie_tol = 0.0) const;

private:
    int rows_;
    int cols_;
    Cell dest_;
    std::vector<std::vector<Action>> legal_;      // per cell, in tie order
    std::vector<std::array<double, 4>> q_;        // indexed by Action
    std::vector<std::array<std::uint64_t, 4>> counts_sa_;
    std::vector<std::uint64_t> counts_s_;

    std::size_t idx(Cell c) const { return static_cast<std::size_t>(c.row) * cols_ + c.col; }
    void check_key(Cell c, Action a) const;
};

struct Policy {
    int rows = 0;
    int cols = 0;
    std::vector<std::optional<Action>> actions;  // row-major; terminal cells empty

    std::optional<Action> at(Cell c) const {
        return actions[static_cast<std::size_t>(c.row) * cols + c.col];
    }
};

struct ValueMap {
    int rows = 0;
    int cols = 0;
    std::vector<double> values;  // row-major; terminal cell 0

    double at(Cell c) const { return values[static_cast<std::size_t>(c.row) * cols + c.col]; }
};

struct TrainingLog {
    std::vector<double> deltas;  // per-episode biggest absolute Q change
    long episodes_run = 0;
    std::uint64_t total_updates = 0;
};

// With probability min(eps, 1) a uniform draw from `legal`, else `proposed`.
// Always consumes one uniform draw, plus one index draw on the random branch.
Action epsilon_greedy(Action proposed, std::span<const Action> legal, double eps, Rng& rng);

// alpha0 / (offset + count * slope); strictly decreasing in count.
double adaptive_alpha(double alpha0, std::uint64_t count, double offset = 0.995,
                      double slope = 0.005);

// One-step update toward reward + gamma * max_q_next.
double q_update(double q_sa, double reward, double max_q_next, double alpha, double gamma);

struct TrainResult {
    QTable qtable;
    TrainingLog log;
};

// Runs episodic Q-learning with eps = eps_numerator / t (t = episode index
// from 1), adaptive per-(s,a) learning rate, and uniform start states over
// non-terminal, non-no-fly cells. Deterministic in (grid, rewards, hyper, seed).
TrainResult train(const GridMap& grid, const RewardTable& rewards, const Hyperparams& hyper,
                  std::uint64_t seed);

std::pair<Policy, ValueMap> extract_policy(const QTable& q);

}  // namespace uavplan
