#include "uavplan/grid.hpp"

#include <sstream>

namespace uavplan {

Action opposite(Action a) {
    switch (a) {
        case Action::Up: return Action::Down;
        case Action::Down: return Action::Up;
        case Action::Left: return Action::Right;
        case Action::Right: return Action::Left;
    }
    throw std::logic_error("invalid action");
}

char action_letter(Action a) {
    switch (a) {
        case Action::Up: return 'U';
        case Action::Down: return 'D';
        case Action::Left: return 'L';
        case Action::Right: return 'R';
    }
    throw std::logic_error("invalid action");
}

Cell neighbor(Cell c, Action a) {
    switch (a) {
        case Action::Up: return {c.row - 1, c.col};
        case Action::Down: return {c.row + 1, c.col};
        case Action::Left: return {c.row, c.col - 1};
        case Action::Right: return {c.row, c.col + 1};
    }
    throw std::logic_error("invalid action");
}

void RewardTable::validate() const {
    if (!(ps_reward > 0)) throw std::invalid_argument("ps_reward must be > 0");
    if (!(step_cost < 0)) throw std::invalid_argument("step_cost must be < 0");
    if (!(destination_reward > 0)) throw std::invalid_argument("destination_reward must be > 0");
    if (!(nofly_penalty < step_cost))
        throw std::invalid_argument("nofly_penalty must be below step_cost");
}

MapParseError::MapParseError(std::string msg, int line, int column)
    : std::runtime_error("map parse error at line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + std::move(msg)),
      line_(line),
      column_(column) {}

namespace {

CellKind kind_of_char(char ch, int line, int column) {
    switch (ch) {
        case '.': return CellKind::Regular;
        case 'P': return CellKind::PowerStation;
        case 'X': return CellKind::NoFly;
        case 'S': return CellKind::Start;
        case 'D': return CellKind::Destination;
        default:
            throw MapParseError(std::string("unknown cell character '") + ch + "'", line, column);
    }
}

char char_of_kind(CellKind k) {
    switch (k) {
        case CellKind::Regular: return '.';
        case CellKind::PowerStation: return 'P';
        case CellKind::NoFly: return 'X';
        case CellKind::Start: return 'S';
        case CellKind::Destination: return 'D';
    }
    throw std::logic_error("invalid cell kind");
}

}  // namespace

GridMap GridMap::from_text(const std::string& text) {
    std::vector<std::vector<CellKind>> grid_rows;
    std::vector<Cell> starts;
    std::vector<Cell> dests;

    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int width = -1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (width < 0) {
            width = static_cast<int>(line.size());
        } else if (static_cast<int>(line.size()) != width) {
            throw MapParseError("ragged row, expected width " + std::to_string(width), line_no,
                                static_cast<int>(line.size()) + 1);
        }
        std::vector<CellKind> row;
        row.reserve(line.size());
        int r = static_cast<int>(grid_rows.size());
        for (int c = 0; c < static_cast<int>(line.size()); ++c) {
            CellKind k = kind_of_char(line[c], line_no, c + 1);
            if (k == CellKind::Start) starts.push_back({r, c});
            if (k == CellKind::Destination) dests.push_back({r, c});
            row.push_back(k);
        }
        grid_rows.push_back(std::move(row));
    }

    if (grid_rows.empty()) throw MapParseError("empty map", 1, 1);
    if (starts.size() != 1)
        throw MapParseError(starts.empty() ? "missing start cell 'S'" : "duplicate start cell 'S'",
                            line_no, 1);
    if (dests.size() != 1)
        throw MapParseError(
            dests.empty() ? "missing destination cell 'D'" : "duplicate destination cell 'D'",
            line_no, 1);

    std::vector<CellKind> flat;
    flat.reserve(grid_rows.size() * grid_rows[0].size());
    for (const auto& row : grid_rows) flat.insert(flat.end(), row.begin(), row.end());

    return GridMap(static_cast<int>(grid_rows.size()), width, std::move(flat), starts[0],
                   dests[0]);
}

GridMap::GridMap(int rows, int cols, std::vector<CellKind> kinds, Cell start, Cell dest)
    : rows_(rows), cols_(cols), cells_(std::move(kinds)), start_(start), dest_(dest) {
    validate();
}

void GridMap::validate() const {
    if (rows_ < 2 || cols_ < 2) throw std::invalid_argument("grid must be at least 2x2");
    if (cells_.size() != static_cast<std::size_t>(rows_) * cols_)
        throw std::invalid_argument("cell matrix does not match dimensions");
    if (!in_bounds(start_) || !in_bounds(dest_))
        throw std::invalid_argument("start/destination out of bounds");
    if (start_ == dest_) throw std::invalid_argument("start and destination must differ");
    if (at(start_) != CellKind::Start) throw std::invalid_argument("start cell kind mismatch");
    if (at(dest_) != CellKind::Destination)
        throw std::invalid_argument("destination cell kind mismatch");
}

std::string GridMap::to_text() const {
    std::string out;
    out.reserve(static_cast<std::size_t>(rows_) * (cols_ + 1));
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) out.push_back(char_of_kind(at({r, c})));
        out.push_back('\n');
    }
    return out;
}

std::vector<Action> available_actions(const GridMap& grid, Cell cell) {
    if (!grid.in_bounds(cell)) throw std::invalid_argument("cell out of bounds");
    if (grid.is_terminal(cell)) return {};
    std::vector<Action> out;
    out.reserve(4);
    for (Action a : kActionOrder) {
        if (grid.in_bounds(neighbor(cell, a))) out.push_back(a);
    }
    return out;
}

double reward_for_entering(const GridMap& grid, const RewardTable& rewards, Cell entered) {
    double base;
    switch (grid.at(entered)) {
        case CellKind::PowerStation:
        case CellKind::Start: base = rewards.ps_reward; break;
        case CellKind::Regular: base = rewards.step_cost; break;
        case CellKind::NoFly: base = rewards.nofly_penalty; break;
        case CellKind::Destination: base = rewards.destination_reward; break;
        default: throw std::logic_error("invalid cell kind");
    }
    if (rewards.shaping) return rewards.shaping(base, entered);
    return base;
}

StepResult step(const GridMap& grid, const RewardTable& rewards, Cell cell, Action action) {
    Cell next = neighbor(cell, action);
    if (!grid.in_bounds(next)) throw std::invalid_argument("action leaves the grid");
    if (grid.is_terminal(cell)) throw std::invalid_argument("cannot step from the destination");
    return {next, reward_for_entering(grid, rewards, next)};
}

}  // namespace uavplan
