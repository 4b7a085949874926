#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace uavplan {

// Link-budget parameters in linear units (SNR ratios, watts), not dB.
struct RadioParams {
    double tx_power = 1.0;          // W
    double channel_gain_ref = 1.0;  // power gain at 1 m reference distance
    double noise_power = 1.0;       // W
    double snr_min = 1.0;           // linear ratio
    double uav_altitude = 100.0;    // m
    double bs_altitude = 0.0;       // m
    double carrier_freq = 2e9;      // Hz

    void validate() const;  // throws std::invalid_argument
};

enum class StationKind : std::uint8_t { GBS, ABS };

struct BaseStation {
    double x = 0.0;  // m
    double y = 0.0;  // m
    double altitude = 0.0;
    StationKind kind = StationKind::GBS;
};

double db_to_linear(double db);
double linear_to_db(double linear);

// Altitude gap alone exceeds the link budget: no horizontal coverage exists.
class NoHorizontalCoverage : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Max horizontal distance at which the minimum SNR is met:
// sqrt(gamma0/snr_min - (H - HG)^2) with gamma0 = P * beta0 / sigma^2.
double coverage_radius(const RadioParams& params);

// Free-space path loss: 20 log10(d) + 20 log10(cf) - 147.55 dB.
double path_loss_db(double distance_m, double carrier_freq_hz);

struct FeasibilityMap {
    int rows = 0;
    int cols = 0;
    std::vector<std::uint8_t> feasible;  // row-major, 1 = feasible
    bool empty_station_warning = false;

    bool at(int row, int col) const {
        return feasible[static_cast<std::size_t>(row) * cols + col] != 0;
    }
};

// A cell is feasible iff its center lies within the coverage radius of at
// least one station; the radius uses the station's own altitude as the
// base-station altitude. Boundary equality counts as covered.
FeasibilityMap feasibility_map(int rows, int cols, double cell_size_m,
                               const std::vector<BaseStation>& stations,
                               const RadioParams& params);

// Station layout text: one `kind x_m y_m` entry per line, kind in {GBS, ABS},
// '#' lines and blank lines ignored. Altitude per kind supplied by the caller.
std::vector<BaseStation> parse_stations(const std::string& text, double gbs_altitude,
                                        double abs_altitude);

}  // namespace uavplan
