#include "sehasel/circuit.hpp"

#include <cmath>
#include <string>

#include "sehasel/errors.hpp"

namespace sehasel {

void CircuitParams::validate() const {
    if (!(c1 > 0.0)) throw ValidationError("circuit: c1 must be positive");
    if (!(c2 > 0.0)) throw ValidationError("circuit: c2 must be positive");
    if (!(r_leak > 0.0)) throw ValidationError("circuit: r_leak must be positive");
}

double CircuitParams::k() const { return c1 / (c1 + c2); }

double CircuitParams::p() const { return -1.0 / (r_leak * (c1 + c2)); }

CircuitConstants derive_constants(const CircuitParams& params) {
    params.validate();
    return {params.k(), params.p()};
}

void DriveWaveform::validate() const {
    if (!(magnitude >= 0.0)) throw ValidationError("waveform: magnitude must be >= 0");
    if (kind == Kind::AcSquare && !(frequency > 0.0))
        throw ValidationError("waveform: frequency must be positive for AC square");
}

double DriveWaveform::half_period() const {
    validate();
    if (kind != Kind::AcSquare)
        throw ValidationError("waveform: half_period is defined for AC square only");
    return 1.0 / (2.0 * frequency);
}

double DriveWaveform::value(double t) const {
    validate();
    if (t < 0.0) throw ValidationError("waveform: t must be >= 0");
    if (kind == Kind::DcStep) return magnitude;
    const double a = 1.0 / (2.0 * frequency);
    const double n = std::floor(t / a);
    const bool even = std::fmod(n, 2.0) == 0.0;
    return even ? magnitude : -magnitude;
}

double dc_output(const CircuitParams& params, double magnitude, double t) {
    const auto [k, p] = derive_constants(params);
    if (t < 0.0) throw ValidationError("dc_output: t must be >= 0");
    return magnitude * k * std::exp(p * t);
}

double ac_square_output(const CircuitParams& params, double magnitude,
                        double frequency, double t) {
    const auto [k, p] = derive_constants(params);
    if (t < 0.0) throw ValidationError("ac_square_output: t must be >= 0");
    if (!(frequency > 0.0))
        throw ValidationError("ac_square_output: frequency must be positive");
    const double a = 1.0 / (2.0 * frequency);
    const double n = std::floor(t / a);
    const double delta_t = t - n * a;
    const double sign = std::fmod(n, 2.0) == 0.0 ? 1.0 : -1.0;
    const double den = 1.0 + std::exp(p * a);
    // Collapsed finite-n transient: the first two terms vanish at large t.
    const double u = k * std::exp(p * t) * (1.0 - 2.0 / den) +
                     sign * 2.0 * k * std::exp(p * delta_t) / den;
    return magnitude * u;
}

double steady_state_output(const CircuitParams& params, double magnitude,
                           double frequency, double delta_t,
                           HalfCycleParity parity) {
    const auto [k, p] = derive_constants(params);
    if (!(frequency > 0.0))
        throw ValidationError("steady_state_output: frequency must be positive");
    const double a = 1.0 / (2.0 * frequency);
    if (!(delta_t >= 0.0) || !(delta_t < a))
        throw ValidationError("steady_state_output: delta_t must lie in [0, a)");
    const double sign = parity == HalfCycleParity::Even ? 1.0 : -1.0;
    return sign * 2.0 * k * std::exp(p * delta_t) / (1.0 + std::exp(p * a)) *
           magnitude;
}

Envelope envelope(const CircuitParams& params, double frequency) {
    const auto [k, p] = derive_constants(params);
    if (!(frequency > 0.0))
        throw ValidationError("envelope: frequency must be positive");
    const double a = 1.0 / (2.0 * frequency);
    const double epa = std::exp(p * a);
    return {2.0 * k / (1.0 + epa), 2.0 * k * epa / (1.0 + epa)};
}

double transfer_magnitude(const CircuitParams& params, double omega) {
    params.validate();
    if (!(omega >= 0.0))
        throw ValidationError("transfer_magnitude: omega must be >= 0");
    const double num = params.r_leak * params.c1 * omega;
    const double tau = params.r_leak * (params.c1 + params.c2) * omega;
    return num / std::sqrt(tau * tau + 1.0);
}

VoltageTrace simulate_ode(const CircuitParams& params,
                          std::span<const double> input, double dt,
                          OdeMethod method) {
    const auto [k, p] = derive_constants(params);
    if (!(dt > 0.0)) throw ValidationError("simulate_ode: dt must be positive");
    if (input.empty()) throw ValidationError("simulate_ode: input is empty");
    if (dt > 0.01 / std::abs(p))
        throw ValidationError("simulate_ode: dt exceeds 0.01/|P| resolution guard");

    VoltageTrace trace;
    trace.dt = dt;
    trace.samples.reserve(input.size());

    const double decay = std::exp(p * dt);
    double u_o = 0.0;
    double prev_u_i = 0.0;
    for (std::size_t i = 0; i < input.size(); ++i) {
        const double u_i = input[i];
        // Divider jump at the input discontinuity, then free decay to the
        // next sample. Between jumps du_o/dt = P u_o, so the supply current
        // is i_in = C1 d(u_i - u_o)/dt = -C1 P u_o.
        u_o += k * (u_i - prev_u_i);
        prev_u_i = u_i;
        trace.samples.push_back({u_i, u_o, -params.c1 * p * u_o});
        if (method == OdeMethod::ExponentialExact) {
            u_o *= decay;
        } else {
            const double h = p * dt;
            u_o *= 1.0 + h + h * h / 2.0 + h * h * h / 6.0 + h * h * h * h / 24.0;
        }
    }
    return trace;
}

std::vector<double> sample_waveform(const DriveWaveform& wave, double dt,
                                    std::size_t count) {
    wave.validate();
    if (!(dt > 0.0)) throw ValidationError("sample_waveform: dt must be positive");
    std::vector<double> out(count);
    for (std::size_t i = 0; i < count; ++i) out[i] = wave.value(i * dt);
    return out;
}

}  // namespace sehasel
