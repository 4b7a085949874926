#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace uavplan {

struct Cell {
    int row = 0;
    int col = 0;
    auto operator<=>(const Cell&) const = default;
};

enum class CellKind : std::uint8_t { Regular, PowerStation, NoFly, Start, Destination };

// Tie-break order for argmax is the declaration order: Up < Down < Left < Right.
enum class Action : std::uint8_t { Up = 0, Down = 1, Left = 2, Right = 3 };

inline constexpr std::array<Action, 4> kActionOrder{Action::Up, Action::Down, Action::Left,
                                                    Action::Right};

Action opposite(Action a);
char action_letter(Action a);
Cell neighbor(Cell c, Action a);

struct RewardTable {
    double ps_reward = 1.0;
    double step_cost = -0.1;
    double destination_reward = 1000.0;
    double nofly_penalty = -30.0;

    // Optional multiplicative shaping of the entered cell's reward.
    // Disabled (null) by default; rewards are then the plain constants above.
    std::function<double(double base, Cell entered)> shaping;

    void validate() const;  // throws std::invalid_argument
};

// Thrown by GridMap::from_text with 1-based line/column of the offending input.
class MapParseError : public std::runtime_error {
public:
    MapParseError(std::string msg, int line, int column);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

// Immutable after construction; safe to share across threads.
class GridMap {
public:
    // Parses the map-file text format: '.' regular, 'P' power station,
    // 'X' no-fly, 'S' start, 'D' destination; '#' lines are comments.
    static GridMap from_text(const std::string& text);

    // Canonical rendering; from_text(to_text()) round-trips.
    std::string to_text() const;

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Cell start() const { return start_; }
    Cell destination() const { return dest_; }

    bool in_bounds(Cell c) const {
        return c.row >= 0 && c.row < rows_ && c.col >= 0 && c.col < cols_;
    }
    CellKind at(Cell c) const { return cells_[static_cast<std::size_t>(c.row) * cols_ + c.col]; }
    std::size_t index(Cell c) const { return static_cast<std::size_t>(c.row) * cols_ + c.col; }
    std::size_t cell_count() const { return cells_.size(); }

    bool is_terminal(Cell c) const { return c == dest_; }
    // Start and Destination carry implicit power stations.
    bool recharges(Cell c) const {
        CellKind k = at(c);
        return k == CellKind::PowerStation || k == CellKind::Start || k == CellKind::Destination;
    }

    // Builds a map programmatically; kinds must already contain exactly one
    // Start and one Destination consistent with the coordinates given.
    GridMap(int rows, int cols, std::vector<CellKind> kinds, Cell start, Cell dest);

private:
    int rows_;
    int cols_;
    std::vector<CellKind> cells_;
    Cell start_;
    Cell dest_;

    void validate() const;
};

// Legal moves from a cell: exactly the directions staying in bounds.
// The destination is terminal and yields no actions.
std::vector<Action> available_actions(const GridMap& grid, Cell cell);

struct StepResult {
    Cell next;
    double reward;
};

// Deterministic transition; reward keyed by the kind of the entered cell.
StepResult step(const GridMap& grid, const RewardTable& rewards, Cell cell, Action action);

double reward_for_entering(const GridMap& grid, const RewardTable& rewards, Cell entered);

}  // namespace uavplan
