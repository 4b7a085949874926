#include <algorithm>

#include "doctest.h"
#include "uavplan/grid.hpp"
#include "uavplan/rng.hpp"

using namespace uavplan;

TEST_CASE("load_map parses a minimal 2x2 map") {
    auto grid = GridMap::from_text("SD\n..\n");
    CHECK(grid.rows() == 2);
    CHECK(grid.cols() == 2);
    CHECK(grid.start() == Cell{0, 0});
    CHECK(grid.destination() == Cell{0, 1});
    CHECK(grid.at({1, 0}) == CellKind::Regular);
}

TEST_CASE("load_map echoes 20x20 coordinates") {
    std::string text;
    for (int r = 0; r < 20; ++r) {
        for (int c = 0; c < 20; ++c) {
            if (r == 1 && c == 1)
                text += 'S';
            else if (r == 14 && c == 14)
                text += 'D';
            else
                text += '.';
        }
        text += '\n';
    }
    auto grid = GridMap::from_text(text);
    CHECK(grid.start() == Cell{1, 1});
    CHECK(grid.destination() == Cell{14, 14});
}

TEST_CASE("load_map accepts an unreachable-looking layout; reachability is not a parse concern") {
    auto grid = GridMap::from_text("SX\nXD\n");
    CHECK(grid.at({0, 1}) == CellKind::NoFly);
    CHECK(grid.at({1, 0}) == CellKind::NoFly);
}

TEST_CASE("load_map rejects malformed input with line/column") {
    CHECK_THROWS_AS(GridMap::from_text("SD.\n..\n"), MapParseError);
    try {
        GridMap::from_text("SD\n.Q\n");
        FAIL("expected parse error");
    } catch (const MapParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 2);
    }
    CHECK_THROWS_AS(GridMap::from_text("..\n.D\n"), MapParseError);   // missing S
    CHECK_THROWS_AS(GridMap::from_text("SS\n.D\n"), MapParseError);   // duplicate S
    CHECK_THROWS_AS(GridMap::from_text("SD\n.D\n"), MapParseError);   // duplicate D
    CHECK_THROWS_AS(GridMap::from_text(""), MapParseError);
    CHECK_THROWS_AS(GridMap::from_text("# only comments\n"), MapParseError);
}

TEST_CASE("map text round-trips through load and render") {
    const std::string canonical = "S.P\n.X.\n..D\n";
    auto grid = GridMap::from_text(canonical);
    CHECK(grid.to_text() == canonical);
    CHECK(GridMap::from_text(grid.to_text()).to_text() == canonical);
}

TEST_CASE("comment lines and trailing newline handling") {
    auto grid = GridMap::from_text("# header\nSD\n..");
    CHECK(grid.rows() == 2);
}

TEST_CASE("available_actions respects boundaries") {
    auto grid = GridMap::from_text("S...\n....\n...D\n");
    auto corner = available_actions(grid, {0, 0});
    CHECK(corner == std::vector<Action>{Action::Down, Action::Right});
    auto edge = available_actions(grid, {0, 1});
    CHECK(edge.size() == 3);
    auto interior = available_actions(grid, {1, 1});
    CHECK(interior.size() == 4);
    CHECK(available_actions(grid, {2, 3}).empty());  // destination is terminal
    CHECK_THROWS_AS(available_actions(grid, {5, 5}), std::invalid_argument);
}

TEST_CASE("step transitions and rewards keyed by entered cell") {
    auto grid = GridMap::from_text(
        "....\n"
        ".S..\n"
        "..P.\n"
        "...D\n");
    RewardTable rewards;
    auto down = step(grid, rewards, {1, 1}, Action::Down);
    CHECK(down.next == Cell{2, 1});
    CHECK(down.reward == doctest::Approx(-0.1));
    auto right = step(grid, rewards, down.next, Action::Right);
    CHECK(right.next == Cell{2, 2});
    CHECK(right.reward == doctest::Approx(1.0));  // PS cell
    auto into_dest = step(grid, rewards, {3, 2}, Action::Right);
    CHECK(into_dest.reward == doctest::Approx(1000.0));
    CHECK_THROWS_AS(step(grid, rewards, {0, 0}, Action::Up), std::invalid_argument);
}

TEST_CASE("no-fly entry is penalized, not terminal") {
    auto grid = GridMap::from_text("SX\n.D\n");
    RewardTable rewards;
    auto res = step(grid, rewards, {0, 0}, Action::Right);
    CHECK(res.reward == doctest::Approx(-30.0));
    CHECK_FALSE(grid.is_terminal(res.next));
    CHECK(grid.is_terminal(grid.destination()));
    CHECK_FALSE(grid.is_terminal(grid.start()));
}

TEST_CASE("entering the start cell rewards like a power station") {
    auto grid = GridMap::from_text("S.\n.D\n");
    RewardTable rewards;
    CHECK(step(grid, rewards, {0, 1}, Action::Left).reward == doctest::Approx(1.0));
}

TEST_CASE("transitions are reversible") {
    auto grid = GridMap::from_text("S....\n.....\n....D\n");
    RewardTable rewards;
    Rng rng(3);
    for (int i = 0; i < 500; ++i) {
        Cell c{static_cast<int>(rng.uniform_index(3)), static_cast<int>(rng.uniform_index(5))};
        if (grid.is_terminal(c)) continue;
        auto legal = available_actions(grid, c);
        Action a = legal[rng.uniform_index(legal.size())];
        Cell there = step(grid, rewards, c, a).next;
        if (grid.is_terminal(there)) continue;
        CHECK(step(grid, rewards, there, opposite(a)).next == c);
    }
}

TEST_CASE("reward depends only on the entered cell, not the path") {
    auto grid = GridMap::from_text("S..\n.P.\n..D\n");
    RewardTable rewards;
    double from_left = step(grid, rewards, {1, 0}, Action::Right).reward;
    double from_above = step(grid, rewards, {0, 1}, Action::Down).reward;
    double from_right = step(grid, rewards, {1, 2}, Action::Left).reward;
    CHECK(from_left == from_above);
    CHECK(from_above == from_right);
}

TEST_CASE("every non-terminal cell has at least two actions") {
    for (const char* text : {"SD\n..\n", "S...\n...D\n", "S.\n..\n..\n.D\n"}) {
        auto grid = GridMap::from_text(text);
        for (int r = 0; r < grid.rows(); ++r) {
            for (int c = 0; c < grid.cols(); ++c) {
                if (grid.is_terminal({r, c})) continue;
                CHECK(available_actions(grid, {r, c}).size() >= 2);
            }
        }
    }
}

TEST_CASE("optional distance shaping hook is off by default") {
    RewardTable plain;
    auto grid = GridMap::from_text("S.\n.D\n");
    CHECK_FALSE(static_cast<bool>(plain.shaping));
    RewardTable shaped;
    shaped.shaping = [](double base, Cell) { return base * 2.0; };
    CHECK(step(grid, shaped, {0, 0}, Action::Right).reward == doctest::Approx(-0.2));
}

TEST_CASE("reward table validation") {
    RewardTable bad;
    bad.nofly_penalty = 0.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    RewardTable ok;
    CHECK_NOTHROW(ok.validate());
}
