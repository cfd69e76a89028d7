#include "sehasel/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "sehasel/errors.hpp"

namespace sehasel {

MetricsReport compute_metrics(std::span<const double> x,
                              std::span<const double> target, double dt,
                              SampleWindow window) {
    if (x.size() != target.size())
        throw ValidationError("metrics: series lengths differ");
    if (window.end > x.size() || window.begin >= window.end)
        throw ValidationError("metrics: empty window");
    if (!(dt > 0.0)) throw ValidationError("metrics: dt must be positive");

    MetricsReport report;
    double ss = 0.0;
    double lo = x[window.begin], hi = x[window.begin];
    for (std::size_t i = window.begin; i < window.end; ++i) {
        const double e = x[i] - target[i];
        ss += e * e;
        lo = std::min(lo, x[i]);
        hi = std::max(hi, x[i]);
    }
    report.rmse = std::sqrt(ss / (window.end - window.begin));
    report.peak_to_peak = hi - lo;

    // Target edges inside the window.
    std::vector<std::size_t> edges;
    for (std::size_t i = window.begin + 1; i < window.end; ++i)
        if (target[i] != target[i - 1]) edges.push_back(i);

    double worst_overshoot = 0.0;
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const std::size_t at = edges[e];
        const double step = target[at] - target[at - 1];
        if (step <= 0.0) continue;  // rising edges only
        const std::size_t plateau_end = e + 1 < edges.size() ? edges[e + 1] : window.end;
        double peak = x[at];
        for (std::size_t i = at; i < plateau_end; ++i) peak = std::max(peak, x[i]);
        worst_overshoot = std::max(worst_overshoot, (peak - target[at]) / step);
    }
    report.overshoot_pct = std::max(0.0, worst_overshoot);

    // Settling: first time after which |x - target| stays within 5 % of the
    // step height. With no target edge, the step is from x at window start.
    std::size_t step_at = window.begin;
    std::size_t plateau_end = window.end;
    double step_height;
    if (!edges.empty()) {
        step_at = edges.front();
        plateau_end = edges.size() > 1 ? edges[1] : window.end;
        step_height = std::abs(target[step_at] - target[step_at - 1]);
    } else {
        step_height = std::abs(target[window.begin] - x[window.begin]);
    }
    if (step_height == 0.0) {
        report.settling_time = 0.0;
    } else {
        const double band = 0.05 * step_height;
        std::size_t settled = plateau_end;
        for (std::size_t i = plateau_end; i-- > step_at;) {
            if (std::abs(x[i] - target[i]) > band) break;
            settled = i;
        }
        report.settling_time =
            settled == plateau_end ? (plateau_end - step_at) * dt
                                   : (settled - step_at) * dt;
    }
    return report;
}

}  // namespace sehasel
