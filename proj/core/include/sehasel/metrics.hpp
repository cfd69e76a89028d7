#pragma once

#include <cstddef>
#include <span>

namespace sehasel {

struct MetricsReport {
    double rmse = 0.0;           // m
    double overshoot_pct = 0.0;  // fraction of step height
    double peak_to_peak = 0.0;   // m
    double settling_time = 0.0;  // s
    double max_hysteresis_strain = 0.0;  // filled by hysteresis sweeps
    double max_output_strain = 0.0;
};

struct SampleWindow {
    std::size_t begin = 0;
    std::size_t end = 0;  // exclusive
};

/// RMSE and peak-to-peak over the window; overshoot over the target's rising
/// edges; settling time to the 5 %-of-step-height band.
MetricsReport compute_metrics(std::span<const double> x,
                              std::span<const double> target, double dt,
                              SampleWindow window);

}  // namespace sehasel
