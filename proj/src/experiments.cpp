#include "uavplan/experiments.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <stdexcept>

#include "uavplan/oracle.hpp"
#include "uavplan/rng.hpp"

namespace uavplan {

void SweepConfig::validate() const {
    if (rows < 2 || cols < 2) throw std::invalid_argument("grid must be at least 2x2");
    if (trials_per_count < 1) throw std::invalid_argument("trials_per_count must be >= 1");
    if (nofly_count < 0) throw std::invalid_argument("nofly_count must be >= 0");
    battery.validate();
    const long total_cells = static_cast<long>(rows) * cols;
    const long placeable = total_cells - 2 - nofly_count;  // minus start and destination
    for (int k : extra_ps_counts) {
        if (k < 0 || k > placeable)
            throw std::invalid_argument("extra PS count " + std::to_string(k) +
                                        " does not fit the grid");
    }
    if (start == dest || start.row < 0 || start.row >= rows || start.col < 0 ||
        start.col >= cols || dest.row < 0 || dest.row >= rows || dest.col < 0 || dest.col >= cols)
        throw std::invalid_argument("bad start/destination");
}

GridMap make_trial_map(const SweepConfig& config, int extra_ps, std::uint64_t trial_seed) {
    Rng rng(trial_seed);
    const std::size_t n = static_cast<std::size_t>(config.rows) * config.cols;
    std::vector<CellKind> kinds(n, CellKind::Regular);
    auto idx = [&](Cell c) { return static_cast<std::size_t>(c.row) * config.cols + c.col; };
    kinds[idx(config.start)] = CellKind::Start;
    kinds[idx(config.dest)] = CellKind::Destination;

    std::vector<std::size_t> open;
    for (std::size_t i = 0; i < n; ++i) {
        if (kinds[i] == CellKind::Regular) open.push_back(i);
    }
    // Fisher-Yates style draws without replacement: no-fly cells first,
    // then the extra power stations.
    auto draw = [&]() {
        const std::size_t j = rng.uniform_index(open.size());
        const std::size_t cell = open[j];
        open[j] = open.back();
        open.pop_back();
        return cell;
    };
    for (int i = 0; i < config.nofly_count; ++i) kinds[draw()] = CellKind::NoFly;
    for (int i = 0; i < extra_ps; ++i) kinds[draw()] = CellKind::PowerStation;

    return GridMap(config.rows, config.cols, std::move(kinds), config.start, config.dest);
}

namespace {

bool trial_succeeds(const SweepConfig& config, const GridMap& grid, std::uint64_t trial_seed) {
    if (config.use_learner) {
        auto trained = train(grid, config.rewards, config.hyper, trial_seed);
        auto [policy, values] = extract_policy(trained.qtable);
        if (config.mode == SuccessMode::StartToDest) {
            return simulate_policy(grid, policy, config.battery, grid.start()).outcome ==
                   Outcome::Success;
        }
        for (int r = 0; r < grid.rows(); ++r) {
            for (int c = 0; c < grid.cols(); ++c) {
                Cell cell{r, c};
                if (grid.is_terminal(cell) || grid.at(cell) == CellKind::NoFly) continue;
                if (simulate_policy(grid, policy, config.battery, cell).outcome !=
                    Outcome::Success)
                    return false;
            }
        }
        return true;
    }

    if (config.mode == SuccessMode::StartToDest)
        return refuel_shortest_path(grid, config.battery, grid.start()).feasible;
    for (int r = 0; r < grid.rows(); ++r) {
        for (int c = 0; c < grid.cols(); ++c) {
            Cell cell{r, c};
            if (grid.is_terminal(cell) || grid.at(cell) == CellKind::NoFly) continue;
            if (!refuel_shortest_path(grid, config.battery, cell).feasible) return false;
        }
    }
    return true;
}

SweepEntry run_count(const SweepConfig& config, int k) {
    SweepEntry entry;
    entry.extra_ps = k;
    entry.trials = config.trials_per_count;
    for (int trial = 0; trial < config.trials_per_count; ++trial) {
        const std::uint64_t trial_seed = derive_seed(config.seed, static_cast<std::uint64_t>(k),
                                                     static_cast<std::uint64_t>(trial));
        GridMap grid = make_trial_map(config, k, trial_seed);
        if (trial_succeeds(config, grid, trial_seed)) ++entry.successes;
    }
    entry.probability = static_cast<double>(entry.successes) / entry.trials;
    return entry;
}

}  // namespace

SweepResult run_sweep(const SweepConfig& config) {
    config.validate();
    std::vector<int> counts = config.extra_ps_counts;
    if (counts.empty()) {
        counts.resize(51);
        std::iota(counts.begin(), counts.end(), 0);
    }

    // Counts run in parallel; per-(count, trial) child seeds keep the result
    // independent of scheduling.
    std::vector<std::future<SweepEntry>> futures;
    futures.reserve(counts.size());
    for (int k : counts) {
        futures.push_back(
            std::async(std::launch::async, [&config, k]() { return run_count(config, k); }));
    }

    SweepResult out;
    out.trials_per_count = config.trials_per_count;
    out.seed = config.seed;
    for (auto& f : futures) out.entries.push_back(f.get());
    return out;
}

ConvergenceReport convergence_report(const TrainingLog& log, long window, double threshold) {
    if (log.deltas.empty()) throw std::invalid_argument("training log is empty");
    if (window < 1) throw std::invalid_argument("window must be >= 1");
    if (window > static_cast<long>(log.deltas.size()))
        throw std::invalid_argument("window exceeds the number of episodes");

    ConvergenceReport report;
    report.smoothed.resize(log.deltas.size());

    double running_sum = 0.0;
    for (std::size_t i = 0; i < log.deltas.size(); ++i) {
        running_sum += log.deltas[i];
        if (i >= static_cast<std::size_t>(window)) running_sum -= log.deltas[i - window];
        const long span = std::min<long>(static_cast<long>(i) + 1, window);
        report.smoothed[i] = running_sum / static_cast<double>(span);
    }

    for (std::size_t i = static_cast<std::size_t>(window) - 1; i < log.deltas.size(); ++i) {
        double window_max = 0.0;
        for (std::size_t j = i + 1 - window; j <= i; ++j)
            window_max = std::max(window_max, log.deltas[j]);
        if (window_max < threshold) {
            report.converged_episode = static_cast<long>(i) + 1;  // 1-based episode index
            break;
        }
    }
    return report;
}

}  // namespace uavplan
