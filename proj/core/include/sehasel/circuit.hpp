#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace sehasel {

/// Leakage network of the electrode drive: series capacitor c1 feeding the
/// electrode pair c2 with leakage resistor r_leak in parallel.
struct CircuitParams {
    double c1 = 1e-9;      // F
    double c2 = 1e-9;      // F
    double r_leak = 1e9;   // ohm

    void validate() const;
    /// Capacitive divider ratio c1/(c1+c2), in (0, 1).
    double k() const;
    /// Decay rate -1/(r_leak*(c1+c2)), always negative, 1/s.
    double p() const;

    bool operator==(const CircuitParams&) const = default;
};

struct CircuitConstants {
    double k;
    double p;
};

/// Validates and returns (K, P).
CircuitConstants derive_constants(const CircuitParams& params);

struct DriveWaveform {
    enum class Kind { DcStep, AcSquare };
    Kind kind = Kind::DcStep;
    double magnitude = 0.0;   // V
    double frequency = 0.0;   // Hz, AC only

    void validate() const;
    /// Half period a = 1/(2f). AC only.
    double half_period() const;
    /// Input voltage at time t >= 0: magnitude for DC, signed square wave for AC.
    double value(double t) const;

    bool operator==(const DriveWaveform&) const = default;
};

/// Electrode voltage under a DC step: magnitude * K * e^{P t}.
double dc_output(const CircuitParams& params, double magnitude, double t);

/// Electrode voltage under an AC square wave, finite-n transient closed form.
double ac_square_output(const CircuitParams& params, double magnitude,
                        double frequency, double t);

enum class HalfCycleParity { Even, Odd };

/// Steady-state electrode voltage at offset delta_t into a half period of the
/// given parity: (-1)^n * 2K e^{P delta_t} / (1 + e^{P a}) * magnitude.
double steady_state_output(const CircuitParams& params, double magnitude,
                           double frequency, double delta_t,
                           HalfCycleParity parity);

struct Envelope {
    double k1;  // upper bound of steady |u_o| / magnitude
    double k2;  // lower bound
};

/// Steady-state oscillation bounds; k1 + k2 == 2K identically.
Envelope envelope(const CircuitParams& params, double frequency);

/// |T(j omega)| of the leakage network (first-order high pass).
double transfer_magnitude(const CircuitParams& params, double omega);

struct VoltageSample {
    double u_i;   // input voltage, V
    double u_o;   // electrode voltage, V
    double i_in;  // supply current, A
};

struct VoltageTrace {
    double dt = 0.0;
    std::vector<VoltageSample> samples;
};

enum class OdeMethod { ExponentialExact, Rk4 };

/// Integrates the leakage ODE for a piecewise-constant sampled input.
/// Input discontinuities get the exact divider jump du_o = K * du_i; between
/// jumps u_o decays at rate P. dt must satisfy dt <= 0.01/|P|.
VoltageTrace simulate_ode(const CircuitParams& params,
                          std::span<const double> input, double dt,
                          OdeMethod method = OdeMethod::ExponentialExact);

/// Samples a waveform at count points t = 0, dt, 2 dt, ...
std::vector<double> sample_waveform(const DriveWaveform& wave, double dt,
                                    std::size_t count);

}  // namespace sehasel
