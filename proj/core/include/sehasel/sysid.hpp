#pragma once

#include <vector>

#include "sehasel/actuator.hpp"
#include "sehasel/circuit.hpp"

namespace sehasel {

struct DecayTrace {
    enum class Kind { Voltage, Displacement, Current };
    double dt = 0.0;
    std::vector<double> values;
    Kind kind = Kind::Voltage;

    void validate() const;
};

struct Identifiability {
    bool c1 = false;
    bool c2 = false;
    bool r = false;
};

struct FitResult {
    double amplitude = 0.0;     // fitted value at t = 0+, trace units
    double k_hat = 0.0;         // amplitude / drive magnitude (voltage traces)
    double p_hat = 0.0;         // 1/s, < 0
    double residual_rms = 0.0;  // trace units
    Identifiability identifiable;
};

/// Log-linear least squares on ln|v(t)| = ln(amplitude) + P t, for VOLTAGE or
/// CURRENT traces. A voltage trace alone never identifies C1, C2, R
/// individually; combined with a current trace all three follow.
FitResult fit_exponential(const DecayTrace& trace, double drive_magnitude = 1.0,
                          bool robust = false);

/// C1 from the fitted current amplitude i(0+) = C1 * K * |P| * U.
double c1_from_current_amplitude(double amplitude, double k, double p,
                                 double drive_magnitude);

/// Full circuit constants once C1 is known: C2 = C1 (1-K)/K,
/// R = -1/(P (C1+C2)).
CircuitParams recover_circuit(double k, double p, double c1);

/// Actuator-plus-load context for displacement-drop calibration.
struct DecayScenario {
    ActuatorConfig actuator;
    double k_gain = 0.5;        // circuit divider ratio K
    double drive_magnitude = 6000.0;  // V
    double load_force = 0.4905; // N
};

/// Solves for P so that the full voltage->pressure->displacement pipeline
/// drops by drop_fraction over the horizon. Displacement decay is not a pure
/// exponential, so this goes through the forward pipeline, not a log fit.
double calibrate_p_from_displacement_drop(double drop_fraction, double horizon,
                                          const DecayScenario& scenario);

/// Displacement ratio disp(horizon)/disp(0+) for a given P (forward pipeline).
double displacement_drop_ratio(double p, double horizon,
                               const DecayScenario& scenario);

}  // namespace sehasel
