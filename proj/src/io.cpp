#include "uavplan/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace uavplan {

namespace {

using ordered_json = nlohmann::ordered_json;

Action action_of_letter(char ch) {
    switch (ch) {
        case 'U': return Action::Up;
        case 'D': return Action::Down;
        case 'L': return Action::Left;
        case 'R': return Action::Right;
        default: throw std::runtime_error(std::string("unknown action letter '") + ch + "'");
    }
}

}  // namespace

std::string policy_document(const GridMap& grid, const Policy& policy, const ValueMap& values,
                            const Hyperparams& hyper, std::uint64_t seed, long episodes_run) {
    ordered_json doc;
    doc["rows"] = grid.rows();
    doc["cols"] = grid.cols();
    doc["start"] = {grid.start().row, grid.start().col};
    doc["destination"] = {grid.destination().row, grid.destination().col};
    doc["seed"] = seed;
    doc["episodes_run"] = episodes_run;
    doc["hyperparams"] = {{"gamma", hyper.gamma},
                          {"alpha0", hyper.alpha0},
                          {"eps_numerator", hyper.eps_numerator},
                          {"epochs", hyper.epochs},
                          {"alpha_decay_offset", hyper.alpha_decay_offset},
                          {"alpha_decay_slope", hyper.alpha_decay_slope},
                          {"convergence_threshold", hyper.convergence_threshold}};
    ordered_json cells = ordered_json::array();
    for (int r = 0; r < grid.rows(); ++r) {
        for (int c = 0; c < grid.cols(); ++c) {
            Cell cell{r, c};
            auto a = policy.at(cell);
            if (!a) continue;
            cells.push_back({{"row", r},
                             {"col", c},
                             {"action", std::string(1, action_letter(*a))},
                             {"value", values.at(cell)}});
        }
    }
    doc["cells"] = std::move(cells);
    return doc.dump(2) + "\n";
}

PolicyDocument parse_policy_document(const std::string& text) {
    const auto doc = ordered_json::parse(text);
    PolicyDocument out;
    const int rows = doc.at("rows").get<int>();
    const int cols = doc.at("cols").get<int>();
    out.policy.rows = out.values.rows = rows;
    out.policy.cols = out.values.cols = cols;
    out.policy.actions.assign(static_cast<std::size_t>(rows) * cols, std::nullopt);
    out.values.values.assign(static_cast<std::size_t>(rows) * cols, 0.0);
    out.seed = doc.at("seed").get<std::uint64_t>();
    out.episodes_run = doc.at("episodes_run").get<long>();
    const auto& h = doc.at("hyperparams");
    out.hyper.gamma = h.at("gamma").get<double>();
    out.hyper.alpha0 = h.at("alpha0").get<double>();
    out.hyper.eps_numerator = h.at("eps_numerator").get<double>();
    out.hyper.epochs = h.at("epochs").get<long>();
    out.hyper.alpha_decay_offset = h.at("alpha_decay_offset").get<double>();
    out.hyper.alpha_decay_slope = h.at("alpha_decay_slope").get<double>();
    out.hyper.convergence_threshold = h.at("convergence_threshold").get<double>();
    for (const auto& cell : doc.at("cells")) {
        const int r = cell.at("row").get<int>();
        const int c = cell.at("col").get<int>();
        if (r < 0 || r >= rows || c < 0 || c >= cols)
            throw std::runtime_error("policy cell out of bounds");
        const std::string letter = cell.at("action").get<std::string>();
        if (letter.size() != 1) throw std::runtime_error("bad action letter");
        const std::size_t i = static_cast<std::size_t>(r) * cols + c;
        out.policy.actions[i] = action_of_letter(letter[0]);
        out.values.values[i] = cell.at("value").get<double>();
    }
    return out;
}

std::string deltas_csv(const TrainingLog& log) {
    std::ostringstream out;
    out << "episode,delta\n";
    for (std::size_t i = 0; i < log.deltas.size(); ++i)
        out << (i + 1) << ',' << ordered_json(log.deltas[i]).dump() << '\n';
    return out.str();
}

std::string trace_csv(const EnergyTrace& trace) {
    std::ostringstream out;
    out << "step,row,col,battery\n";
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const auto& s = trace.steps[i];
        out << i << ',' << s.cell.row << ',' << s.cell.col << ','
            << ordered_json(s.battery).dump() << '\n';
    }
    out << "# outcome=" << outcome_name(trace.outcome) << " total_steps=" << trace.total_steps
        << " min_battery=" << ordered_json(trace.min_battery).dump()
        << " mission_time_s=" << ordered_json(trace.mission_time).dump() << '\n';
    return out.str();
}

std::string sweep_csv(const SweepResult& result) {
    std::ostringstream out;
    out << "extra_ps,trials,successes,probability\n";
    for (const auto& e : result.entries) {
        out << e.extra_ps << ',' << e.trials << ',' << e.successes << ','
            << ordered_json(e.probability).dump() << '\n';
    }
    return out.str();
}

std::string convergence_csv(const TrainingLog& log, const ConvergenceReport& report) {
    std::ostringstream out;
    out << "episode,delta,delta_smoothed\n";
    for (std::size_t i = 0; i < log.deltas.size(); ++i) {
        out << (i + 1) << ',' << ordered_json(log.deltas[i]).dump() << ','
            << ordered_json(report.smoothed[i]).dump() << '\n';
    }
    return out.str();
}

std::string render_policy_map(const GridMap& grid, const Policy& policy) {
    std::string out;
    for (int r = 0; r < grid.rows(); ++r) {
        for (int c = 0; c < grid.cols(); ++c) {
            Cell cell{r, c};
            if (c > 0) out.push_back(' ');
            if (grid.is_terminal(cell)) {
                out += " D";
                continue;
            }
            auto a = policy.at(cell);
            out.push_back(a ? action_letter(*a) : '?');
            switch (grid.at(cell)) {
                case CellKind::PowerStation:
                case CellKind::Start: out.push_back('*'); break;
                case CellKind::NoFly: out.push_back('!'); break;
                default: out.push_back(' '); break;
            }
        }
        out.push_back('\n');
    }
    return out;
}

std::string sparkline(const std::vector<double>& values) {
    static const char levels[] = " .:-=+*#%@";
    std::string out;
    for (double v : values) {
        double clamped = v;
        if (clamped < 0) clamped = 0;
        if (clamped > 1) clamped = 1;
        out.push_back(levels[static_cast<std::size_t>(clamped * 9.0 + 0.5)]);
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
}

}  // namespace uavplan
