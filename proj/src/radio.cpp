#include "uavplan/radio.hpp"

#include <cmath>
#include <sstream>

namespace uavplan {

void RadioParams::validate() const {
    if (!(tx_power > 0)) throw std::invalid_argument("tx_power must be > 0");
    if (!(channel_gain_ref > 0)) throw std::invalid_argument("channel_gain_ref must be > 0");
    if (!(noise_power > 0)) throw std::invalid_argument("noise_power must be > 0");
    if (!(snr_min > 0)) throw std::invalid_argument("snr_min must be > 0");
    if (!(carrier_freq > 0)) throw std::invalid_argument("carrier_freq must be > 0");
    if (!(bs_altitude >= 0)) throw std::invalid_argument("bs_altitude must be >= 0");
    if (!(uav_altitude >= bs_altitude))
        throw std::invalid_argument("uav_altitude must be >= bs_altitude");
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double linear) {
    if (!(linear > 0)) throw std::domain_error("linear value must be > 0");
    return 10.0 * std::log10(linear);
}

double coverage_radius(const RadioParams& params) {
    params.validate();
    const double gamma0 = params.tx_power * params.channel_gain_ref / params.noise_power;
    const double altitude_gap = params.uav_altitude - params.bs_altitude;
    const double radicand = gamma0 / params.snr_min - altitude_gap * altitude_gap;
    if (radicand < 0)
        throw NoHorizontalCoverage("no horizontal coverage: altitude gap exceeds link budget");
    return std::sqrt(radicand);
}

double path_loss_db(double distance_m, double carrier_freq_hz) {
    if (!(distance_m > 0)) throw std::domain_error("distance must be > 0");
    if (!(carrier_freq_hz > 0)) throw std::domain_error("carrier frequency must be > 0");
    return 20.0 * std::log10(distance_m) + 20.0 * std::log10(carrier_freq_hz) - 147.55;
}

FeasibilityMap feasibility_map(int rows, int cols, double cell_size_m,
                               const std::vector<BaseStation>& stations,
                               const RadioParams& params) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("grid must be at least 1x1");
    if (!(cell_size_m > 0)) throw std::invalid_argument("cell size must be > 0");

    FeasibilityMap out;
    out.rows = rows;
    out.cols = cols;
    out.feasible.assign(static_cast<std::size_t>(rows) * cols, 0);
    if (stations.empty()) {
        out.empty_station_warning = true;
        return out;
    }

    // Coverage radius per station, with the station's own altitude.
    std::vector<double> radius(stations.size());
    for (std::size_t i = 0; i < stations.size(); ++i) {
        RadioParams p = params;
        p.bs_altitude = stations[i].altitude;
        radius[i] = coverage_radius(p);
    }

    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            const double cx = (c + 0.5) * cell_size_m;
            const double cy = (r + 0.5) * cell_size_m;
            for (std::size_t i = 0; i < stations.size(); ++i) {
                const double dx = cx - stations[i].x;
                const double dy = cy - stations[i].y;
                if (std::hypot(dx, dy) <= radius[i]) {
                    out.feasible[static_cast<std::size_t>(r) * cols + c] = 1;
                    break;
                }
            }
        }
    }
    return out;
}

std::vector<BaseStation> parse_stations(const std::string& text, double gbs_altitude,
                                        double abs_altitude) {
    std::vector<BaseStation> out;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::istringstream fields(line);
        std::string kind;
        double x, y;
        if (!(fields >> kind >> x >> y))
            throw std::runtime_error("bad station entry at line " + std::to_string(line_no));
        BaseStation bs;
        bs.x = x;
        bs.y = y;
        if (kind == "GBS") {
            bs.kind = StationKind::GBS;
            bs.altitude = gbs_altitude;
        } else if (kind == "ABS") {
            bs.kind = StationKind::ABS;
            bs.altitude = abs_altitude;
        } else {
            throw std::runtime_error("unknown station kind '" + kind + "' at line " +
                                     std::to_string(line_no));
        }
        out.push_back(bs);
    }
    return out;
}

}  // namespace uavplan
