#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "sehasel/config.hpp"
#include "sehasel/metrics.hpp"
#include "sehasel/trace.hpp"

namespace sehasel {

struct ScenarioResult {
    SimTrace trace;
    MetricsReport report;
    /// Scenario-specific scalars (drop_fraction, ripple_x_a, angle ranges...).
    std::map<std::string, double> extra;
};

/// Runs one scenario end to end. Sweep kinds delegate to the sweep routines
/// below and leave the trace empty.
ScenarioResult run_scenario(const ScenarioConfig& config);

struct SweepPoint {
    double frequency;     // Hz
    double load;          // kg added on plate A
    double peak_to_peak;  // m, x_b over the post-60 s window
};

/// AC_HOLD at every (frequency, load) pair; points evaluated concurrently,
/// results in input order.
std::vector<SweepPoint> frequency_sweep(const ScenarioConfig& config);

struct HysteresisPoint {
    double magnitude;  // V
    double strain_up;
    double strain_down;
};

struct HysteresisResult {
    std::vector<HysteresisPoint> loop;
    double mhs = 0.0;  // max vertical strain gap
    double mos = 0.0;  // max strain
};

/// Quasi-static 0 -> v_max -> 0 magnitude sweep through the play operator.
HysteresisResult hysteresis_sweep(const ScenarioConfig& config, double v_max,
                                  int steps);

/// Play width such that the sweep's MHS/MOS hits target_ratio (default 0.30).
double calibrate_play_width(const ScenarioConfig& config, double v_max,
                            double target_ratio = 0.30);

/// Structured text report: `key: value` lines.
void write_report(std::ostream& out, const ScenarioConfig& config,
                  const ScenarioResult& result);

std::string sweep_table_csv(const std::vector<SweepPoint>& points);
std::string hysteresis_table_csv(const HysteresisResult& result);

}  // namespace sehasel
