#include <cmath>

#include "doctest.h"
#include "uavplan/radio.hpp"
#include "uavplan/rng.hpp"

using namespace uavplan;

namespace {

RadioParams params_with_ratio(double gamma0_over_snr, double uav_alt, double bs_alt) {
    RadioParams p;
    p.tx_power = gamma0_over_snr;
    p.channel_gain_ref = 1.0;
    p.noise_power = 1.0;
    p.snr_min = 1.0;
    p.uav_altitude = uav_alt;
    p.bs_altitude = bs_alt;
    return p;
}

// Independent per-cell scan, deliberately not sharing code with
// feasibility_map: recomputes radii and distances from scratch.
std::vector<std::uint8_t> brute_force_feasible(int rows, int cols, double cell_size,
                                               const std::vector<BaseStation>& stations,
                                               const RadioParams& params) {
    std::vector<std::uint8_t> out(static_cast<std::size_t>(rows) * cols, 0);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            const double cx = (c + 0.5) * cell_size;
            const double cy = (r + 0.5) * cell_size;
            for (const auto& s : stations) {
                const double gamma0 =
                    params.tx_power * params.channel_gain_ref / params.noise_power;
                const double gap = params.uav_altitude - s.altitude;
                const double radicand = gamma0 / params.snr_min - gap * gap;
                REQUIRE(radicand >= 0);
                const double radius = std::sqrt(radicand);
                const double dist =
                    std::sqrt((cx - s.x) * (cx - s.x) + (cy - s.y) * (cy - s.y));
                if (dist <= radius) {
                    out[static_cast<std::size_t>(r) * cols + c] = 1;
                    break;
                }
            }
        }
    }
    return out;
}

}  // namespace

TEST_CASE("coverage_radius matches hand-derived values") {
    CHECK(coverage_radius(params_with_ratio(9.0, 3.0, 0.0)) == doctest::Approx(0.0));
    CHECK(coverage_radius(params_with_ratio(25.0, 3.0, 0.0)) == doctest::Approx(4.0));
    CHECK_THROWS_AS(coverage_radius(params_with_ratio(8.0, 3.0, 0.0)), NoHorizontalCoverage);
}

TEST_CASE("coverage_radius monotonicity in parameters") {
    Rng rng(42);
    for (int i = 0; i < 200; ++i) {
        RadioParams p;
        p.tx_power = 1.0 + rng.uniform01() * 100.0;
        p.channel_gain_ref = 0.5 + rng.uniform01();
        p.noise_power = 0.1 + rng.uniform01();
        p.snr_min = 0.1 + rng.uniform01();
        p.uav_altitude = rng.uniform01() * 3.0;
        p.bs_altitude = 0.0;
        double base;
        try {
            base = coverage_radius(p);
        } catch (const NoHorizontalCoverage&) {
            continue;
        }
        RadioParams more_power = p;
        more_power.tx_power *= 1.5;
        CHECK(coverage_radius(more_power) >= base);
        RadioParams more_gain = p;
        more_gain.channel_gain_ref *= 2.0;
        CHECK(coverage_radius(more_gain) >= base);
        // Shrinking the budget can only shrink the radius (or void coverage).
        RadioParams more_snr = p;
        more_snr.snr_min *= 1.5;
        try {
            const double r = coverage_radius(more_snr);
            CHECK(r <= base);
        } catch (const NoHorizontalCoverage&) {
        }
        RadioParams more_noise = p;
        more_noise.noise_power *= 2.0;
        try {
            const double r = coverage_radius(more_noise);
            CHECK(r <= base);
        } catch (const NoHorizontalCoverage&) {
        }
    }
}

TEST_CASE("path_loss_db examples") {
    CHECK(path_loss_db(1.0, 1.0) == doctest::Approx(-147.55));
    CHECK(path_loss_db(1000.0, 2e9) == doctest::Approx(98.47).epsilon(1e-4));
    CHECK(path_loss_db(100.0, 2e9) == doctest::Approx(78.47).epsilon(1e-4));
    CHECK_THROWS_AS(path_loss_db(0.0, 2e9), std::domain_error);
    CHECK_THROWS_AS(path_loss_db(100.0, -1.0), std::domain_error);
}

TEST_CASE("path_loss_db decade law is exact") {
    Rng rng(7);
    for (int i = 0; i < 100; ++i) {
        const double d = 1.0 + rng.uniform01() * 1e4;
        const double cf = 1e8 + rng.uniform01() * 1e10;
        CHECK(path_loss_db(10.0 * d, cf) - path_loss_db(d, cf) ==
              doctest::Approx(20.0).epsilon(1e-12));
    }
}

TEST_CASE("db and linear conversions round-trip") {
    CHECK(db_to_linear(linear_to_db(3.7)) == doctest::Approx(3.7));
    CHECK(linear_to_db(10.0) == doctest::Approx(10.0));
    CHECK_THROWS_AS(linear_to_db(0.0), std::domain_error);
}

TEST_CASE("feasibility_map trivial cases") {
    RadioParams dominating = params_with_ratio(1e12, 100.0, 0.0);
    std::vector<BaseStation> one{{8000.0, 8000.0, 0.0, StationKind::GBS}};
    auto all = feasibility_map(20, 20, 800.0, one, dominating);
    for (int r = 0; r < 20; ++r)
        for (int c = 0; c < 20; ++c) CHECK(all.at(r, c));
    CHECK_FALSE(all.empty_station_warning);

    auto none = feasibility_map(20, 20, 800.0, {}, dominating);
    CHECK(none.empty_station_warning);
    for (int r = 0; r < 20; ++r)
        for (int c = 0; c < 20; ++c) CHECK_FALSE(none.at(r, c));
}

TEST_CASE("feasibility_map 2000 m radius agrees with per-cell distance scan") {
    // gamma0/snr_min = 2000^2 + 100^2 so the radius is exactly 2000 m.
    RadioParams p = params_with_ratio(2000.0 * 2000.0 + 100.0 * 100.0, 100.0, 0.0);
    std::vector<BaseStation> center{{10 * 800.0, 10 * 800.0, 0.0, StationKind::GBS}};
    auto map = feasibility_map(20, 20, 800.0, center, p);
    auto brute = brute_force_feasible(20, 20, 800.0, center, p);
    int count = 0;
    for (int r = 0; r < 20; ++r) {
        for (int c = 0; c < 20; ++c) {
            CHECK(map.at(r, c) == (brute[static_cast<std::size_t>(r) * 20 + c] != 0));
            if (map.at(r, c)) ++count;
        }
    }
    CHECK(count > 0);
    CHECK(count < 400);
}

TEST_CASE("feasibility_map monotone under station addition and matches brute force") {
    Rng rng(99);
    RadioParams p = params_with_ratio(1500.0 * 1500.0 + 100.0 * 100.0, 100.0, 0.0);
    for (int layout = 0; layout < 20; ++layout) {
        std::vector<BaseStation> s1;
        const int n = 1 + static_cast<int>(rng.uniform_index(4));
        for (int i = 0; i < n; ++i)
            s1.push_back({rng.uniform01() * 16000.0, rng.uniform01() * 16000.0, 0.0,
                          StationKind::GBS});
        std::vector<BaseStation> s2 = s1;
        s2.push_back({rng.uniform01() * 16000.0, rng.uniform01() * 16000.0, 50.0,
                      StationKind::ABS});

        auto m1 = feasibility_map(12, 12, 800.0, s1, p);
        auto m2 = feasibility_map(12, 12, 800.0, s2, p);
        auto brute = brute_force_feasible(12, 12, 800.0, s1, p);
        for (int r = 0; r < 12; ++r) {
            for (int c = 0; c < 12; ++c) {
                CHECK(m1.at(r, c) == (brute[static_cast<std::size_t>(r) * 12 + c] != 0));
                if (m1.at(r, c)) CHECK(m2.at(r, c));  // subset property
            }
        }
    }
}

TEST_CASE("parse_stations reads the layout format") {
    auto stations = parse_stations("# comment\nGBS 100 200\nABS 300.5 400\n\n", 10.0, 80.0);
    REQUIRE(stations.size() == 2);
    CHECK(stations[0].kind == StationKind::GBS);
    CHECK(stations[0].x == doctest::Approx(100.0));
    CHECK(stations[0].altitude == doctest::Approx(10.0));
    CHECK(stations[1].kind == StationKind::ABS);
    CHECK(stations[1].altitude == doctest::Approx(80.0));
    CHECK_THROWS(parse_stations("UFO 1 2\n", 0, 0));
    CHECK_THROWS(parse_stations("GBS 1\n", 0, 0));
}

TEST_CASE("RadioParams validation") {
    RadioParams p;
    p.uav_altitude = 5.0;
    p.bs_altitude = 10.0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p.bs_altitude = 0.0;
    p.tx_power = 0.0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}
