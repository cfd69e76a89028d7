#include "sehasel/sysid.hpp"

#include <algorithm>
#include <cmath>

#include "sehasel/errors.hpp"

namespace sehasel {

void DecayTrace::validate() const {
    if (!(dt > 0.0)) throw ValidationError("trace: dt must be positive");
    if (values.size() < 10) throw ValidationError("trace: need at least 10 samples");
}

namespace {

struct LineFit {
    double intercept;
    double slope;
};

LineFit weighted_line_fit(const std::vector<double>& t,
                          const std::vector<double>& y,
                          const std::vector<double>& w) {
    double sw = 0, st = 0, sy = 0, stt = 0, sty = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        sw += w[i];
        st += w[i] * t[i];
        sy += w[i] * y[i];
        stt += w[i] * t[i] * t[i];
        sty += w[i] * t[i] * y[i];
    }
    const double det = sw * stt - st * st;
    if (det == 0.0) throw ValidationError("fit: degenerate time axis");
    return {(stt * sy - st * sty) / det, (sw * sty - st * sy) / det};
}

}  // namespace

FitResult fit_exponential(const DecayTrace& trace, double drive_magnitude,
                          bool robust) {
    trace.validate();
    if (trace.kind == DecayTrace::Kind::Displacement)
        throw ValidationError(
            "fit: displacement decay is not exponential; use "
            "calibrate_p_from_displacement_drop");
    if (!(drive_magnitude > 0.0))
        throw ValidationError("fit: drive magnitude must be positive");

    const std::size_t n = trace.values.size();
    std::vector<double> t(n), y(n), w(n, 1.0);
    for (std::size_t i = 0; i < n; ++i) {
        const double v = trace.values[i];
        if (!(v > 0.0))
            throw ValidationError("fit: samples must be strictly positive magnitudes");
        t[i] = i * trace.dt;
        y[i] = std::log(v);
    }
    const double ymin = *std::min_element(y.begin(), y.end());
    const double ymax = *std::max_element(y.begin(), y.end());
    if (ymax - ymin == 0.0)
        throw ValidationError("fit: constant trace has no decay rate (rank error)");

    LineFit line = weighted_line_fit(t, y, w);
    if (robust) {
        // IRLS with absolute-deviation weights.
        for (int it = 0; it < 8; ++it) {
            for (std::size_t i = 0; i < n; ++i) {
                const double r = y[i] - line.intercept - line.slope * t[i];
                w[i] = 1.0 / std::max(std::abs(r), 1e-8);
            }
            line = weighted_line_fit(t, y, w);
        }
    }

    if (!(line.slope < 0.0))
        throw ValidationError("fit: recovered rate is non-negative, not a decay");

    FitResult result;
    result.amplitude = std::exp(line.intercept);
    result.p_hat = line.slope;
    result.k_hat = trace.kind == DecayTrace::Kind::Voltage
                       ? result.amplitude / drive_magnitude
                       : 0.0;
    double ss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = trace.values[i] - result.amplitude * std::exp(line.slope * t[i]);
        ss += r * r;
    }
    result.residual_rms = std::sqrt(ss / n);
    // A single trace of either kind pins down only (amplitude, P); none of
    // C1, C2, R separates out without combining voltage and current data.
    result.identifiable = {false, false, false};
    return result;
}

double c1_from_current_amplitude(double amplitude, double k, double p,
                                 double drive_magnitude) {
    if (!(amplitude > 0.0) || !(k > 0.0) || !(p < 0.0) || !(drive_magnitude > 0.0))
        throw ValidationError("c1_from_current_amplitude: invalid inputs");
    return amplitude / (k * std::abs(p) * drive_magnitude);
}

CircuitParams recover_circuit(double k, double p, double c1) {
    if (!(k > 0.0) || !(k < 1.0) || !(p < 0.0) || !(c1 > 0.0))
        throw ValidationError("recover_circuit: need 0<K<1, P<0, C1>0");
    CircuitParams params;
    params.c1 = c1;
    params.c2 = c1 * (1.0 - k) / k;
    params.r_leak = -1.0 / (p * (params.c1 + params.c2));
    return params;
}

double displacement_drop_ratio(double p, double horizon,
                               const DecayScenario& scenario) {
    const double u0 = scenario.k_gain * scenario.drive_magnitude;
    const double uh = u0 * std::exp(p * horizon);
    const double d0 = stack_displacement(
        scenario.actuator, ea_pressure(scenario.actuator.film, u0),
        scenario.load_force);
    const double dh = stack_displacement(
        scenario.actuator, ea_pressure(scenario.actuator.film, uh),
        scenario.load_force);
    return dh / d0;
}

double calibrate_p_from_displacement_drop(double drop_fraction, double horizon,
                                          const DecayScenario& scenario) {
    if (!(drop_fraction > 0.0) || !(drop_fraction < 1.0))
        throw ValidationError("calibrate_p: drop_fraction must lie in (0, 1)");
    if (!(horizon > 0.0)) throw ValidationError("calibrate_p: horizon must be positive");
    scenario.actuator.validate();
    if (!(scenario.load_force > 0.0))
        throw ValidationError(
            "calibrate_p: zero load makes displacement voltage-independent; "
            "drop is unreachable (attained extremum: 0)");

    const double target = 1.0 - drop_fraction;
    double lo = -100.0, hi = -1e-300;
    const double ratio_lo = displacement_drop_ratio(lo, horizon, scenario);
    if (ratio_lo > target) {
        throw ValidationError("calibrate_p: requested drop unreachable; attained "
                              "extremum ratio " + std::to_string(ratio_lo));
    }
    // ratio is strictly increasing in P on (lo, 0): shallower leak, less drop.
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (displacement_drop_ratio(mid, horizon, scenario) < target) lo = mid;
        else hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace sehasel
