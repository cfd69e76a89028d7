#pragma once

#include <utility>

namespace sehasel {

/// PI gains in SI units: kp V/m, ki V/(m*s). Output is the AC magnitude,
/// clamped to [u_min, u_max] with u_min fixed at 0.
struct PiGains {
    double kp = 0.0;        // V/m
    double ki = 0.0;        // V/(m*s)
    double cycle_dt = 1e-3; // s
    double u_min = 0.0;     // V
    double u_max = 8000.0;  // V

    void validate() const;
    bool operator==(const PiGains&) const = default;
};

struct ControllerState {
    double integral = 0.0;       // m*s
    double last_magnitude = 0.0; // V
    double t = 0.0;              // s
};

/// One control cycle. Conditional anti-windup: integration freezes while the
/// output is saturated and the error pushes further into saturation.
/// Non-finite inputs are a controller fault; the output holds.
std::pair<double, ControllerState> pi_step(const PiGains& gains,
                                           const ControllerState& state,
                                           double target, double measured);

/// Signed square-wave command magnitude * (-1)^floor(2 f t). Phase is global:
/// flip instants are fixed multiples of 1/(2f) regardless of magnitude updates.
double modulate(double magnitude, double t, double frequency);

}  // namespace sehasel
