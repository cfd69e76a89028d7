#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "sehasel/actuator.hpp"

namespace sehasel {

/// Series-elastic mechanism: actuator stack (plate B) coupled through a
/// spring to the loaded upper plate (plate A) riding a damped slider.
struct PlantParams {
    double spring_k = 14.0;      // N/m
    double damping_c = 1.0;      // N*s/m
    double mass_a = 0.08;        // kg, upper plate + load
    double mass_b = 0.03;        // kg, lower plate
    double play_width = 0.0;     // m, 0 disables hysteresis emulation
    double sensor_noise_sd = 0.0;// m
    std::uint64_t rng_seed = 0;
    bool rigid = false;          // rigid pole instead of the spring

    void validate() const;
    bool operator==(const PlantParams&) const = default;
};

struct PlantState {
    double x_a = 0.0;        // m, plate A displacement (sensor target)
    double v_a = 0.0;        // m/s
    double x_b = 0.0;        // m, stack displacement, >= 0
    double play_state = 0.0; // m
    double t = 0.0;          // s
};

/// Step disturbances on plate A plus an optional position-dependent
/// resistance table (piecewise-linear, force opposing upward motion).
struct DisturbanceProfile {
    /// (t_start, force level in N); the level holds until the next entry.
    std::vector<std::pair<double, double>> steps;
    /// (x_a, resistance in N) knots, x strictly increasing.
    std::vector<std::pair<double, double>> resistance;

    void validate() const;
    /// Net extra force on plate A (positive = upward).
    double force(double t, double x_a) const;

    bool operator==(const DisturbanceProfile&) const = default;
};

/// Rate-independent play (backlash) operator.
/// output = clamp(state, input - width, input + width); new state = output.
std::pair<double, double> play(double input, double width, double state);

/// Advances one fixed step (dt <= 1e-4 s): quasi-static stack solve for x_b,
/// then RK4 on plate A holding x_b constant over the step.
PlantState plant_step(const PlantParams& params, const PlantState& state,
                      double applied_voltage, const ActuatorConfig& actuator_cfg,
                      double dt, const DisturbanceProfile& disturbance = {});

/// Laser-sensor reading: x_a plus seeded Gaussian noise.
double sample_sensor(const PlantState& state, const PlantParams& params,
                     std::mt19937_64& rng);

}  // namespace sehasel
