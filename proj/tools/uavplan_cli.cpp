#include <cstdint>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "uavplan/energy.hpp"
#include "uavplan/experiments.hpp"
#include "uavplan/grid.hpp"
#include "uavplan/io.hpp"
#include "uavplan/oracle.hpp"
#include "uavplan/qlearning.hpp"
#include "uavplan/radio.hpp"

namespace {

using namespace uavplan;

Cell parse_cell(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw CLI::ValidationError("cell must be 'row,col'");
    return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
}

std::vector<int> parse_counts(const std::string& text) {
    const auto dots = text.find("..");
    std::vector<int> out;
    if (dots == std::string::npos) {
        out.push_back(std::stoi(text));
        return out;
    }
    const int lo = std::stoi(text.substr(0, dots));
    const int hi = std::stoi(text.substr(dots + 2));
    if (hi < lo) throw CLI::ValidationError("counts range must be A..B with A <= B");
    for (int k = lo; k <= hi; ++k) out.push_back(k);
    return out;
}

std::uint64_t resolve_seed(bool seed_given, std::uint64_t seed) {
    if (seed_given) return seed;
    std::random_device rd;
    const std::uint64_t drawn = (static_cast<std::uint64_t>(rd()) << 32) | rd();
    std::cout << "seed: " << drawn << "\n";
    return drawn;
}

std::string config_comment(const std::string& config) { return "# config: " + config + "\n"; }

int run(int argc, char** argv) {
    CLI::App app{"Energy-aware UAV grid path planner"};
    app.require_subcommand(1);

    // --- train ---
    auto* train_cmd = app.add_subcommand("train", "Train a Q-learning policy on a map");
    std::string map_path, out_path = "policy.json", deltas_path = "deltas.csv";
    Hyperparams hyper;
    std::uint64_t seed = 0;
    bool seed_given = false;
    train_cmd->add_option("--map", map_path, "map file")->required();
    train_cmd->add_option("--out", out_path, "policy/value output file");
    train_cmd->add_option("--deltas", deltas_path, "per-episode delta CSV");
    train_cmd->add_option("--epochs", hyper.epochs, "episode count");
    train_cmd->add_option("--gamma", hyper.gamma, "discount factor");
    train_cmd->add_option("--alpha", hyper.alpha0, "base learning rate");
    train_cmd->add_option("--eps-num", hyper.eps_numerator, "exploration numerator (eps = n/t)");
    train_cmd->add_option("--threshold", hyper.convergence_threshold,
                          "early-stop delta threshold (0 disables)");
    train_cmd->add_option("--seed", seed, "RNG seed")->each([&](const std::string&) {
        seed_given = true;
    });

    // --- validate ---
    auto* validate_cmd = app.add_subcommand("validate", "Simulate a policy and check energy");
    std::string policy_path, trace_path = "trace.csv", start_text;
    BatteryModel battery;
    double cell_size = kDefaultCellSize, speed = kDefaultSpeed;
    validate_cmd->add_option("--map", map_path, "map file")->required();
    validate_cmd->add_option("--policy", policy_path, "policy file from train")->required();
    validate_cmd->add_option("--start", start_text, "start cell 'row,col' (default map start)");
    validate_cmd->add_option("--capacity", battery.capacity, "battery capacity");
    validate_cmd->add_option("--step-cost", battery.per_step_cost, "charge cost per move");
    validate_cmd->add_option("--reserve", battery.min_reserve, "minimum landing reserve");
    validate_cmd->add_option("--cell-size", cell_size, "cell size in meters");
    validate_cmd->add_option("--speed", speed, "UAV speed in m/s");
    validate_cmd->add_option("--out", trace_path, "trace CSV output");

    // --- sweep ---
    auto* sweep_cmd = app.add_subcommand("sweep", "Monte-Carlo feasibility vs PS count");
    std::string counts_text = "0..50", mode_text = "start", sweep_out = "sweep.csv";
    int trials = 100, rows = 20, cols = 20, nofly = 0;
    bool use_learner = false;
    sweep_cmd->add_option("--counts", counts_text, "extra PS counts, 'A..B' or a single value");
    sweep_cmd->add_option("--trials", trials, "trials per count");
    sweep_cmd->add_option("--mode", mode_text, "success mode: start|all")
        ->check(CLI::IsMember({"start", "all"}));
    sweep_cmd->add_flag("--learner", use_learner, "train a learner per trial instead of oracle");
    sweep_cmd->add_option("--rows", rows, "grid rows");
    sweep_cmd->add_option("--cols", cols, "grid cols");
    sweep_cmd->add_option("--nofly", nofly, "random no-fly cells per trial");
    sweep_cmd->add_option("--capacity", battery.capacity, "battery capacity");
    sweep_cmd->add_option("--step-cost", battery.per_step_cost, "charge cost per move");
    sweep_cmd->add_option("--reserve", battery.min_reserve, "minimum landing reserve");
    sweep_cmd->add_option("--out", sweep_out, "sweep CSV output");
    sweep_cmd->add_option("--seed", seed, "RNG seed")->each([&](const std::string&) {
        seed_given = true;
    });

    // --- oracle ---
    auto* oracle_cmd = app.add_subcommand("oracle", "Exact refuel shortest path");
    oracle_cmd->add_option("--map", map_path, "map file")->required();
    oracle_cmd->add_option("--capacity", battery.capacity, "battery capacity");
    oracle_cmd->add_option("--step-cost", battery.per_step_cost, "charge cost per move");
    oracle_cmd->add_option("--reserve", battery.min_reserve, "minimum landing reserve");
    oracle_cmd->add_option("--start", start_text, "start cell 'row,col' (default map start)");

    // --- coverage ---
    auto* coverage_cmd = app.add_subcommand("coverage", "Derive a feasibility map from stations");
    std::string stations_path, coverage_out = "coverage.map";
    RadioParams radio;
    double gbs_alt = 0.0, abs_alt = 0.0;
    std::string cov_start = "1,1", cov_dest = "14,14";
    coverage_cmd->add_option("--stations", stations_path, "station layout file")->required();
    coverage_cmd->add_option("--rows", rows, "grid rows");
    coverage_cmd->add_option("--cols", cols, "grid cols");
    coverage_cmd->add_option("--cell-size", cell_size, "cell size in meters");
    coverage_cmd->add_option("--tx-power", radio.tx_power, "transmit power (W)");
    coverage_cmd->add_option("--gain-ref", radio.channel_gain_ref, "channel gain at 1 m");
    coverage_cmd->add_option("--noise", radio.noise_power, "noise power (W)");
    coverage_cmd->add_option("--snr-min", radio.snr_min, "minimum SNR (linear)");
    coverage_cmd->add_option("--uav-alt", radio.uav_altitude, "UAV altitude (m)");
    coverage_cmd->add_option("--gbs-alt", gbs_alt, "ground BS altitude (m)");
    coverage_cmd->add_option("--abs-alt", abs_alt, "aerial BS altitude (m)");
    coverage_cmd->add_option("--cf", radio.carrier_freq, "carrier frequency (Hz)");
    coverage_cmd->add_option("--start", cov_start, "start cell 'row,col'");
    coverage_cmd->add_option("--dest", cov_dest, "destination cell 'row,col'");
    coverage_cmd->add_option("--out", coverage_out, "output map file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;  // usage/parse errors always exit 1
    }

    if (train_cmd->parsed()) {
        const GridMap grid = GridMap::from_text(read_file(map_path));
        const std::uint64_t run_seed = resolve_seed(seed_given, seed);
        RewardTable rewards;
        auto result = train(grid, rewards, hyper, run_seed);
        auto [policy, values] = extract_policy(result.qtable);
        write_file(out_path,
                   policy_document(grid, policy, values, hyper, run_seed, result.log.episodes_run));
        std::ostringstream cfg;
        cfg << "map=" << map_path << " seed=" << run_seed << " gamma=" << hyper.gamma
            << " alpha0=" << hyper.alpha0 << " eps_num=" << hyper.eps_numerator
            << " epochs=" << hyper.epochs << " threshold=" << hyper.convergence_threshold;
        write_file(deltas_path, config_comment(cfg.str()) + deltas_csv(result.log));
        std::cout << render_policy_map(grid, policy);
        std::cout << "episodes_run: " << result.log.episodes_run << "\n";
        return 0;
    }

    if (validate_cmd->parsed()) {
        const GridMap grid = GridMap::from_text(read_file(map_path));
        const PolicyDocument doc = parse_policy_document(read_file(policy_path));
        if (doc.policy.rows != grid.rows() || doc.policy.cols != grid.cols()) {
            std::cerr << "error: policy dimensions do not match the map\n";
            return 1;
        }
        const Cell start = start_text.empty() ? grid.start() : parse_cell(start_text);
        const EnergyTrace trace =
            simulate_policy(grid, doc.policy, battery, start, cell_size, speed);
        std::ostringstream cfg;
        cfg << "map=" << map_path << " policy=" << policy_path << " start=" << start.row << ','
            << start.col << " capacity=" << battery.capacity
            << " step_cost=" << battery.per_step_cost << " reserve=" << battery.min_reserve;
        write_file(trace_path, config_comment(cfg.str()) + trace_csv(trace));
        std::cout << "outcome: " << outcome_name(trace.outcome)
                  << "\ntotal_steps: " << trace.total_steps
                  << "\nmin_battery: " << trace.min_battery
                  << "\nmission_time_s: " << trace.mission_time << "\n";
        return outcome_exit_code(trace.outcome);
    }

    if (sweep_cmd->parsed()) {
        SweepConfig config;
        config.rows = rows;
        config.cols = cols;
        config.extra_ps_counts = parse_counts(counts_text);
        config.trials_per_count = trials;
        config.nofly_count = nofly;
        config.seed = resolve_seed(seed_given, seed);
        config.mode = mode_text == "all" ? SuccessMode::AllCells : SuccessMode::StartToDest;
        config.battery = battery;
        config.use_learner = use_learner;
        const SweepResult result = run_sweep(config);
        std::ostringstream cfg;
        cfg << "seed=" << config.seed << " trials=" << trials << " mode=" << mode_text
            << " rows=" << rows << " cols=" << cols << " nofly=" << nofly
            << " learner=" << (use_learner ? 1 : 0);
        write_file(sweep_out, config_comment(cfg.str()) + sweep_csv(result));
        std::vector<double> probs;
        for (const auto& e : result.entries) probs.push_back(e.probability);
        std::cout << "probability vs extra PS count:\n[" << sparkline(probs) << "]\n";
        return 0;
    }

    if (oracle_cmd->parsed()) {
        const GridMap grid = GridMap::from_text(read_file(map_path));
        const Cell start = start_text.empty() ? grid.start() : parse_cell(start_text);
        const RefuelPathResult result = refuel_shortest_path(grid, battery, start);
        if (!result.feasible) {
            std::cout << "infeasible\n";
            return 0;
        }
        std::cout << "length: " << result.steps << "\npath:";
        for (const Cell& c : result.path) std::cout << " (" << c.row << ',' << c.col << ')';
        std::cout << "\n";
        return 0;
    }

    if (coverage_cmd->parsed()) {
        const auto stations = parse_stations(read_file(stations_path), gbs_alt, abs_alt);
        const FeasibilityMap feasible = feasibility_map(rows, cols, cell_size, stations, radio);
        if (feasible.empty_station_warning)
            std::cerr << "warning: no stations given, every cell is infeasible\n";
        const Cell start = parse_cell(cov_start);
        const Cell dest = parse_cell(cov_dest);
        std::ostringstream cfg;
        cfg << "stations=" << stations_path << " rows=" << rows << " cols=" << cols
            << " cell_size=" << cell_size << " tx_power=" << radio.tx_power
            << " gain_ref=" << radio.channel_gain_ref << " noise=" << radio.noise_power
            << " snr_min=" << radio.snr_min << " uav_alt=" << radio.uav_altitude
            << " gbs_alt=" << gbs_alt << " abs_alt=" << abs_alt << " cf=" << radio.carrier_freq;
        std::string map_text = config_comment(cfg.str());
        for (int r = 0; r < rows; ++r) {
            for (int c = 0; c < cols; ++c) {
                if (Cell{r, c} == start)
                    map_text.push_back('S');
                else if (Cell{r, c} == dest)
                    map_text.push_back('D');
                else
                    map_text.push_back(feasible.at(r, c) ? '.' : 'X');
            }
            map_text.push_back('\n');
        }
        write_file(coverage_out, map_text);
        return 0;
    }

    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
