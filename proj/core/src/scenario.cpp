#include "sehasel/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <numbers>
#include <ostream>
#include <sstream>

#include "sehasel/control.hpp"
#include "sehasel/errors.hpp"
#include "sehasel/plant.hpp"

namespace sehasel {

namespace {

bool is_open_loop(ScenarioKind kind) {
    return kind == ScenarioKind::DcDecay || kind == ScenarioKind::AcHold ||
           kind == ScenarioKind::Isolation;
}

bool is_closed_loop(ScenarioKind kind) {
    return kind == ScenarioKind::Track || kind == ScenarioKind::Impact ||
           kind == ScenarioKind::Rotary || kind == ScenarioKind::Biopsy;
}

struct LoopResult {
    SimTrace trace;
};

/// Shared fixed-step loop: circuit state advanced with the exact exponential
/// update and divider jumps, plant advanced at plant_dt, controller (when
/// closed loop) at its own cycle. Signals recorded every record_dt.
LoopResult run_time_loop(const ScenarioConfig& cfg) {
    const auto [k_gain, p_rate] = derive_constants(cfg.circuit);
    const double dt = cfg.plant_dt;
    if (dt > 0.01 / std::abs(p_rate))
        throw ValidationError("scenario: plant_dt exceeds the circuit resolution guard");

    const bool closed = is_closed_loop(cfg.kind);
    const long total_steps = std::lround(cfg.duration / dt);
    const long record_every = std::max(1L, std::lround(cfg.record_dt / dt));
    const long cycle_every =
        closed ? std::max(1L, std::lround(cfg.controller.gains.cycle_dt / dt)) : 1;

    std::mt19937_64 rng(cfg.plant.rng_seed);
    PlantState state;
    ControllerState ctrl;
    double magnitude = 0.0;
    double u_i_prev = 0.0;
    double u_o = 0.0;
    const double decay = std::exp(p_rate * dt);

    SimTrace trace;
    trace.record_dt = cfg.record_dt;
    trace.rows.reserve(total_steps / record_every + 2);

    auto stack_load = [&](const PlantState& s) {
        if (cfg.plant.rigid)
            return std::max(0.0, (cfg.plant.mass_a + cfg.plant.mass_b) * kGravity -
                                     cfg.disturbance.force(s.t, s.x_a));
        return std::max(0.0, cfg.plant.spring_k * (s.x_b - s.x_a) +
                                 (cfg.plant.mass_a + cfg.plant.mass_b) * kGravity);
    };

    auto record = [&](double target_now) {
        trace.rows.push_back({state.t, u_i_prev, u_o, magnitude, state.x_b, state.x_a,
                              target_now, stack_load(state),
                              cfg.disturbance.force(state.t, state.x_a)});
    };

    double target_now = closed ? cfg.target.value(0.0) : 0.0;
    record(target_now);

    for (long step = 0; step < total_steps; ++step) {
        const double t = step * dt;
        if (closed && step % cycle_every == 0) {
            target_now = cfg.target.value(t);
            const double measured = sample_sensor(state, cfg.plant, rng);
            auto [mag, next_ctrl] =
                pi_step(cfg.controller.gains, ctrl, target_now, measured);
            magnitude = mag;
            ctrl = next_ctrl;
        }

        double u_i;
        if (closed) {
            u_i = modulate(magnitude, t, cfg.controller.mod_frequency);
        } else {
            u_i = cfg.drive.value(t);
            magnitude = cfg.drive.magnitude;
        }
        u_o += k_gain * (u_i - u_i_prev);
        u_i_prev = u_i;

        state = plant_step(cfg.plant, state, u_o, cfg.actuator, dt, cfg.disturbance);
        u_o *= decay;

        if ((step + 1) % record_every == 0) record(target_now);
    }
    return {std::move(trace)};
}

SampleWindow stable_window(const SimTrace& trace, double duration) {
    // Peak-to-peak and decay metrics use a window starting 60 s after the
    // voltage is applied, when the run is long enough; transients have died
    // out by then at the decay rates of interest.
    const double start_t = duration > 60.0 ? 60.0 : duration * 0.5;
    std::size_t begin = 0;
    while (begin < trace.rows.size() && trace.rows[begin].t < start_t) ++begin;
    if (begin >= trace.rows.size()) begin = trace.rows.size() - 1;
    return {begin, trace.rows.size()};
}

std::vector<double> column_x_a(const SimTrace& t) {
    std::vector<double> v(t.rows.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = t.rows[i].x_a;
    return v;
}

std::vector<double> column_x_b(const SimTrace& t) {
    std::vector<double> v(t.rows.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = t.rows[i].x_b;
    return v;
}

std::vector<double> column_target(const SimTrace& t) {
    std::vector<double> v(t.rows.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = t.rows[i].target;
    return v;
}

double peak_to_peak(std::span<const double> x, SampleWindow w) {
    double lo = x[w.begin], hi = x[w.begin];
    for (std::size_t i = w.begin; i < w.end; ++i) {
        lo = std::min(lo, x[i]);
        hi = std::max(hi, x[i]);
    }
    return hi - lo;
}

}  // namespace

ScenarioResult run_scenario(const ScenarioConfig& config) {
    config.validate();
    ScenarioResult result;

    if (config.kind == ScenarioKind::FreqSweep) {
        const auto points = frequency_sweep(config);
        for (const auto& p : points) {
            char key[64];
            std::snprintf(key, sizeof(key), "pp_f%g_m%g", p.frequency, p.load);
            result.extra[key] = p.peak_to_peak;
        }
        return result;
    }
    if (config.kind == ScenarioKind::HysteresisSweep) {
        const auto hyst =
            hysteresis_sweep(config, config.sweep.v_max, config.sweep.steps);
        result.report.max_hysteresis_strain = hyst.mhs;
        result.report.max_output_strain = hyst.mos;
        result.extra["mhs"] = hyst.mhs;
        result.extra["mos"] = hyst.mos;
        result.extra["mhs_over_mos"] = hyst.mos > 0.0 ? hyst.mhs / hyst.mos : 0.0;
        return result;
    }

    LoopResult loop = run_time_loop(config);
    result.trace = std::move(loop.trace);

    const auto x_a = column_x_a(result.trace);
    const auto x_b = column_x_b(result.trace);
    const auto target = column_target(result.trace);
    const SampleWindow full{0, result.trace.rows.size()};

    switch (config.kind) {
        case ScenarioKind::DcDecay: {
            result.report = compute_metrics(x_b, target, config.record_dt, full);
            const double peak = *std::max_element(x_b.begin(), x_b.end());
            const double final = x_b.back();
            result.extra["displacement_peak"] = peak;
            result.extra["displacement_final"] = final;
            result.extra["drop_fraction"] = peak > 0.0 ? 1.0 - final / peak : 0.0;
            break;
        }
        case ScenarioKind::AcHold: {
            const SampleWindow w = stable_window(result.trace, config.duration);
            result.report = compute_metrics(x_b, target, config.record_dt, w);
            result.extra["peak_to_peak_x_b"] = peak_to_peak(x_b, w);
            result.extra["peak_to_peak_x_a"] = peak_to_peak(x_a, w);
            break;
        }
        case ScenarioKind::Isolation: {
            const SampleWindow w = stable_window(result.trace, config.duration);
            result.report = compute_metrics(x_a, target, config.record_dt, w);
            const double ra = peak_to_peak(x_a, w);
            const double rb = peak_to_peak(x_b, w);
            result.extra["ripple_x_a"] = ra;
            result.extra["ripple_x_b"] = rb;
            result.extra["ripple_ratio"] = rb > 0.0 ? ra / rb : 0.0;
            break;
        }
        case ScenarioKind::Rotary: {
            result.report = compute_metrics(x_a, target, config.record_dt, full);
            const double x_max = *std::max_element(x_a.begin(), x_a.end());
            const double reach = config.crank.displacement(
                std::numbers::pi_v<double> * 0.999);
            const double stroke = std::min(std::max(x_max, 0.0), reach);
            result.extra["angle_range_deg"] =
                (crank_angle(config.crank, stroke) - config.crank.zero_angle) *
                180.0 / std::numbers::pi_v<double>;
            break;
        }
        case ScenarioKind::Track:
        case ScenarioKind::Impact:
        case ScenarioKind::Biopsy:
            result.report = compute_metrics(x_a, target, config.record_dt, full);
            break;
        default:
            throw ValidationError("run_scenario: unhandled scenario kind");
    }
    return result;
}

std::vector<SweepPoint> frequency_sweep(const ScenarioConfig& config) {
    config.validate();
    if (config.kind != ScenarioKind::FreqSweep)
        throw ValidationError("frequency_sweep: config kind must be FREQ_SWEEP");

    std::vector<std::pair<double, double>> grid;
    for (double f : config.sweep.frequencies)
        for (double m : config.sweep.loads) grid.emplace_back(f, m);

    auto eval = [&config](double f, double load) {
        ScenarioConfig point = config;
        point.kind = ScenarioKind::AcHold;
        point.drive.kind = DriveWaveform::Kind::AcSquare;
        point.drive.frequency = f;
        // Sweep loads are added weights on plate A; the configured mass_a is
        // the bare plate/slider mass.
        point.plant.mass_a = config.plant.mass_a + load;
        const ScenarioResult r = run_scenario(point);
        return r.extra.at("peak_to_peak_x_b");
    };

    std::vector<std::future<double>> jobs;
    jobs.reserve(grid.size());
    for (const auto& [f, m] : grid)
        jobs.push_back(std::async(std::launch::async, eval, f, m));

    std::vector<SweepPoint> points;
    points.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
        points.push_back({grid[i].first, grid[i].second, jobs[i].get()});
    return points;
}

HysteresisResult hysteresis_sweep(const ScenarioConfig& config, double v_max,
                                  int steps) {
    config.actuator.validate();
    config.plant.validate();
    config.circuit.validate();
    if (!(v_max > 0.0)) throw ValidationError("hysteresis_sweep: v_max must be positive");
    if (steps < 2) throw ValidationError("hysteresis_sweep: steps must be >= 2");

    const double k_gain = config.circuit.k();
    const double total_height =
        config.actuator.stack_count * config.actuator.cell_height;
    const double load =
        (config.plant.mass_a + config.plant.mass_b) * kGravity;

    // Quasi-static: the spring is relaxed (x_a tracks x_b), the steady AC
    // electrode voltage is taken at the envelope midpoint K * magnitude.
    auto raw_displacement = [&](double magnitude) {
        const double u_eff = k_gain * magnitude;
        return stack_displacement(config.actuator,
                                  ea_pressure(config.actuator.film, u_eff), load);
    };

    std::vector<double> magnitudes;
    for (int i = 0; i <= steps; ++i) magnitudes.push_back(v_max * i / steps);

    HysteresisResult result;
    double play_state = 0.0;
    std::vector<double> up(magnitudes.size()), down(magnitudes.size());
    for (std::size_t i = 0; i < magnitudes.size(); ++i) {
        auto [out, ps] = play(raw_displacement(magnitudes[i]),
                              config.plant.play_width, play_state);
        play_state = ps;
        up[i] = std::max(0.0, out) / total_height;
    }
    for (std::size_t i = magnitudes.size(); i-- > 0;) {
        auto [out, ps] = play(raw_displacement(magnitudes[i]),
                              config.plant.play_width, play_state);
        play_state = ps;
        down[i] = std::max(0.0, out) / total_height;
    }

    for (std::size_t i = 0; i < magnitudes.size(); ++i) {
        result.loop.push_back({magnitudes[i], up[i], down[i]});
        result.mhs = std::max(result.mhs, std::abs(down[i] - up[i]));
        result.mos = std::max({result.mos, up[i], down[i]});
    }
    return result;
}

double calibrate_play_width(const ScenarioConfig& config, double v_max,
                            double target_ratio) {
    if (!(target_ratio > 0.0) || !(target_ratio < 1.0))
        throw ValidationError("calibrate_play_width: target_ratio must lie in (0, 1)");
    ScenarioConfig probe = config;
    auto ratio_for = [&](double width) {
        probe.plant.play_width = width;
        const HysteresisResult h = hysteresis_sweep(probe, v_max, 200);
        return h.mos > 0.0 ? h.mhs / h.mos : 0.0;
    };
    probe.plant.play_width = 0.0;
    const HysteresisResult base = hysteresis_sweep(probe, v_max, 200);
    const double h_top = base.mos * config.actuator.stack_count *
                         config.actuator.cell_height;
    if (!(h_top > 0.0))
        throw ValidationError("calibrate_play_width: sweep produces no displacement");

    double lo = 0.0, hi = 0.49 * h_top;
    if (ratio_for(hi) < target_ratio)
        throw ValidationError("calibrate_play_width: target ratio unreachable");
    for (int i = 0; i < 80; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (ratio_for(mid) < target_ratio) lo = mid;
        else hi = mid;
    }
    return 0.5 * (lo + hi);
}

void write_report(std::ostream& out, const ScenarioConfig& config,
                  const ScenarioResult& result) {
    char buf[128];
    auto line = [&](const char* key, double value) {
        std::snprintf(buf, sizeof(buf), "%s: %.9g\n", key, value);
        out << buf;
    };
    out << "scenario: " << to_string(config.kind) << "\n";
    line("duration_s", config.duration);
    line("rmse_m", result.report.rmse);
    line("overshoot_pct", result.report.overshoot_pct);
    line("peak_to_peak_m", result.report.peak_to_peak);
    line("settling_time_s", result.report.settling_time);
    if (config.kind == ScenarioKind::HysteresisSweep) {
        line("max_hysteresis_strain", result.report.max_hysteresis_strain);
        line("max_output_strain", result.report.max_output_strain);
    }
    for (const auto& [key, value] : result.extra) line(key.c_str(), value);
}

std::string sweep_table_csv(const std::vector<SweepPoint>& points) {
    std::ostringstream out;
    out << "frequency,load,peak_to_peak\n";
    char buf[128];
    for (const auto& p : points) {
        std::snprintf(buf, sizeof(buf), "%.9g,%.9g,%.9g\n", p.frequency, p.load,
                      p.peak_to_peak);
        out << buf;
    }
    return out.str();
}

std::string hysteresis_table_csv(const HysteresisResult& result) {
    std::ostringstream out;
    out << "magnitude,strain_up,strain_down\n";
    char buf[128];
    for (const auto& p : result.loop) {
        std::snprintf(buf, sizeof(buf), "%.9g,%.9g,%.9g\n", p.magnitude, p.strain_up,
                      p.strain_down);
        out << buf;
    }
    return out.str();
}

}  // namespace sehasel
