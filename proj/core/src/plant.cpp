#include "sehasel/plant.hpp"

#include <algorithm>
#include <cmath>

#include "sehasel/errors.hpp"

namespace sehasel {

void PlantParams::validate() const {
    if (!(spring_k > 0.0)) throw ValidationError("plant: spring_k must be positive");
    if (!(damping_c >= 0.0)) throw ValidationError("plant: damping_c must be >= 0");
    if (!(mass_a > 0.0)) throw ValidationError("plant: mass_a must be positive");
    if (!(mass_b >= 0.0)) throw ValidationError("plant: mass_b must be >= 0");
    if (!(play_width >= 0.0)) throw ValidationError("plant: play_width must be >= 0");
    if (!(sensor_noise_sd >= 0.0))
        throw ValidationError("plant: sensor_noise_sd must be >= 0");
}

void DisturbanceProfile::validate() const {
    for (std::size_t i = 1; i < steps.size(); ++i)
        if (!(steps[i].first > steps[i - 1].first))
            throw ValidationError("disturbance: step times must be strictly increasing");
    for (std::size_t i = 1; i < resistance.size(); ++i)
        if (!(resistance[i].first > resistance[i - 1].first))
            throw ValidationError("disturbance: resistance knots must be strictly increasing");
}

double DisturbanceProfile::force(double t, double x_a) const {
    double f = 0.0;
    for (const auto& [t_start, level] : steps) {
        if (t >= t_start) f = level;
        else break;
    }
    if (!resistance.empty()) {
        // Piecewise-linear resistance opposing upward displacement.
        double r;
        if (x_a <= resistance.front().first) {
            r = resistance.front().second;
        } else if (x_a >= resistance.back().first) {
            r = resistance.back().second;
        } else {
            r = 0.0;
            for (std::size_t i = 1; i < resistance.size(); ++i) {
                if (x_a <= resistance[i].first) {
                    const auto& [x0, f0] = resistance[i - 1];
                    const auto& [x1, f1] = resistance[i];
                    r = f0 + (f1 - f0) * (x_a - x0) / (x1 - x0);
                    break;
                }
            }
        }
        f -= r;
    }
    return f;
}

std::pair<double, double> play(double input, double width, double state) {
    if (!(width >= 0.0)) throw ValidationError("play: width must be >= 0");
    const double out = std::clamp(state, input - width, input + width);
    return {out, out};
}

namespace {

/// Downward force carried by the stack for a trial x_b. Preload makes the
/// rest state x_a = x_b = 0 an equilibrium at u = 0.
double stack_force(const PlantParams& p, double x_b, double x_a) {
    return std::max(0.0, p.spring_k * (x_b - x_a) + (p.mass_a + p.mass_b) * kGravity);
}

struct StackSolve {
    double x_b;
    double play_state;
    double force;
};

StackSolve solve_stack(const PlantParams& p, const ActuatorConfig& cfg,
                       double pressure, double x_a, double play_state) {
    auto output = [&](double x) {
        const double raw =
            stack_displacement(cfg, pressure, stack_force(p, x, x_a));
        return play(raw, p.play_width, play_state).first;
    };
    // Picard iteration; the map is a strong contraction (stack displacement
    // is weakly load-sensitive), bisection as fallback.
    double x = play_state;
    bool converged = false;
    for (int i = 0; i < 50; ++i) {
        const double next = output(x);
        if (std::abs(next - x) <= 1e-13) {
            x = next;
            converged = true;
            break;
        }
        x = next;
    }
    if (!converged) {
        double lo = 0.0;
        double hi = cfg.stack_count * cfg.h_max() + p.play_width + 1e-6;
        if (output(lo) - lo < 0.0) {
            x = std::max(0.0, output(lo));
        } else if (output(hi) - hi > 0.0) {
            throw NumericError("plant: stack fixed point escapes bracket");
        } else {
            for (int i = 0; i < 200; ++i) {
                const double mid = 0.5 * (lo + hi);
                if (output(mid) - mid >= 0.0) lo = mid;
                else hi = mid;
            }
            x = 0.5 * (lo + hi);
            if (std::abs(output(x) - x) > 1e-9)
                throw NumericError("plant: stack fixed point did not converge");
        }
    }
    x = std::max(0.0, x);
    const double raw = stack_displacement(cfg, pressure, stack_force(p, x, x_a));
    const double new_ps = play(raw, p.play_width, play_state).second;
    return {x, new_ps, stack_force(p, x, x_a)};
}

}  // namespace

PlantState plant_step(const PlantParams& params, const PlantState& state,
                      double applied_voltage, const ActuatorConfig& actuator_cfg,
                      double dt, const DisturbanceProfile& disturbance) {
    params.validate();
    actuator_cfg.validate();
    disturbance.validate();
    if (!(dt > 0.0) || dt > 1e-4 * (1.0 + 1e-9))
        throw ValidationError("plant_step: dt must lie in (0, 1e-4] s");

    const double pressure =
        ea_pressure(actuator_cfg.film, std::abs(applied_voltage));

    PlantState next = state;
    if (params.rigid) {
        // Plate A rides directly on the stack.
        const double f = std::max(
            0.0, (params.mass_a + params.mass_b) * kGravity -
                     disturbance.force(state.t, state.x_a));
        const double raw = stack_displacement(actuator_cfg, pressure, f);
        auto [out, ps] = play(raw, params.play_width, state.play_state);
        next.x_b = std::max(0.0, out);
        next.play_state = ps;
        next.v_a = (next.x_b - state.x_a) / dt;
        next.x_a = next.x_b;
        next.t = state.t + dt;
        return next;
    }

    const StackSolve stack =
        solve_stack(params, actuator_cfg, pressure, state.x_a, state.play_state);
    next.x_b = stack.x_b;
    next.play_state = stack.play_state;

    // Plate A: m_a x'' = k (x_b - x_a) - c x' + disturbance, x_b frozen.
    auto acc = [&](double t, double x, double v) {
        return (params.spring_k * (next.x_b - x) - params.damping_c * v +
                disturbance.force(t, x)) /
               params.mass_a;
    };
    const double x = state.x_a, v = state.v_a, t = state.t;
    const double k1x = v, k1v = acc(t, x, v);
    const double k2x = v + 0.5 * dt * k1v,
                 k2v = acc(t + 0.5 * dt, x + 0.5 * dt * k1x, v + 0.5 * dt * k1v);
    const double k3x = v + 0.5 * dt * k2v,
                 k3v = acc(t + 0.5 * dt, x + 0.5 * dt * k2x, v + 0.5 * dt * k2v);
    const double k4x = v + dt * k3v,
                 k4v = acc(t + dt, x + dt * k3x, v + dt * k3v);
    next.x_a = x + dt / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
    next.v_a = v + dt / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
    next.t = t + dt;
    return next;
}

double sample_sensor(const PlantState& state, const PlantParams& params,
                     std::mt19937_64& rng) {
    if (params.sensor_noise_sd == 0.0) return state.x_a;
    std::normal_distribution<double> noise(0.0, params.sensor_noise_sd);
    return state.x_a + noise(rng);
}

}  // namespace sehasel
