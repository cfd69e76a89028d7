#include "sehasel/control.hpp"

#include <algorithm>
#include <cmath>

#include "sehasel/errors.hpp"

namespace sehasel {

void PiGains::validate() const {
    if (!(kp >= 0.0)) throw ValidationError("controller: kp must be >= 0");
    if (!(ki >= 0.0)) throw ValidationError("controller: ki must be >= 0");
    if (!(cycle_dt > 0.0)) throw ValidationError("controller: cycle_dt must be positive");
    if (u_min != 0.0) throw ValidationError("controller: u_min must be 0");
    if (!(u_max > u_min)) throw ValidationError("controller: u_max must exceed u_min");
}

std::pair<double, ControllerState> pi_step(const PiGains& gains,
                                           const ControllerState& state,
                                           double target, double measured) {
    gains.validate();
    if (!std::isfinite(target) || !std::isfinite(measured)) {
        // Controller fault: hold the last output, advance time only.
        ControllerState next = state;
        next.t += gains.cycle_dt;
        return {state.last_magnitude, next};
    }

    const double e = target - measured;
    ControllerState next = state;
    const double candidate = state.integral + e * gains.cycle_dt;
    const double unsat = gains.kp * e + gains.ki * candidate;
    const bool windup_hi = unsat > gains.u_max && e > 0.0;
    const bool windup_lo = unsat < gains.u_min && e < 0.0;
    if (!windup_hi && !windup_lo) next.integral = candidate;

    const double magnitude = std::clamp(gains.kp * e + gains.ki * next.integral,
                                        gains.u_min, gains.u_max);
    next.last_magnitude = magnitude;
    next.t += gains.cycle_dt;
    return {magnitude, next};
}

double modulate(double magnitude, double t, double frequency) {
    if (!(magnitude >= 0.0)) throw ValidationError("modulate: magnitude must be >= 0");
    if (!(frequency > 0.0)) throw ValidationError("modulate: frequency must be positive");
    if (magnitude == 0.0) return 0.0;
    const double n = std::floor(2.0 * frequency * t);
    return std::fmod(n, 2.0) == 0.0 ? magnitude : -magnitude;
}

}  // namespace sehasel
