#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "sehasel/errors.hpp"
#include "sehasel/scenario.hpp"
#include "sehasel/sysid.hpp"

namespace fs = std::filesystem;
using namespace sehasel;

namespace {

fs::path resolve(const std::string& out_dir, const std::string& path) {
    fs::path p(path);
    if (p.is_absolute() || out_dir.empty()) return p;
    return fs::path(out_dir) / p;
}

void write_text(const fs::path& path, const std::string& text) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot open '" + path.string() + "' for writing");
    out << text;
}

int run_simulate(const std::string& config_path, std::optional<std::uint64_t> seed,
                 const std::string& out_dir) {
    ScenarioConfig cfg = load_scenario_config(config_path);
    if (seed) {
        cfg.seed = *seed;
        cfg.plant.rng_seed = *seed;
    }
    const ScenarioResult result = run_scenario(cfg);

    std::ostringstream report;
    write_report(report, cfg, result);
    write_text(resolve(out_dir, cfg.output.report_path), report.str());
    if (!result.trace.rows.empty())
        write_text(resolve(out_dir, cfg.output.trace_path), trace_to_csv(result.trace));
    std::cout << report.str();
    return 0;
}

int run_sweep(const std::string& config_path, std::optional<std::uint64_t> seed,
              const std::string& out_dir) {
    ScenarioConfig cfg = load_scenario_config(config_path);
    if (seed) {
        cfg.seed = *seed;
        cfg.plant.rng_seed = *seed;
    }
    std::string table;
    ScenarioResult result;
    if (cfg.kind == ScenarioKind::FreqSweep) {
        const auto points = frequency_sweep(cfg);
        table = sweep_table_csv(points);
    } else if (cfg.kind == ScenarioKind::HysteresisSweep) {
        const auto hyst = hysteresis_sweep(cfg, cfg.sweep.v_max, cfg.sweep.steps);
        table = hysteresis_table_csv(hyst);
        result.report.max_hysteresis_strain = hyst.mhs;
        result.report.max_output_strain = hyst.mos;
        result.extra["mhs"] = hyst.mhs;
        result.extra["mos"] = hyst.mos;
        result.extra["mhs_over_mos"] = hyst.mos > 0.0 ? hyst.mhs / hyst.mos : 0.0;
    } else {
        throw ValidationError("sweep: config kind must be FREQ_SWEEP or HYSTERESIS_SWEEP");
    }
    write_text(resolve(out_dir, cfg.output.trace_path), table);
    std::ostringstream report;
    write_report(report, cfg, result);
    write_text(resolve(out_dir, cfg.output.report_path), report.str());
    std::cout << report.str();
    return 0;
}

int run_fit(const std::string& trace_path, const std::string& column,
            const std::string& kind_name, double magnitude, bool robust) {
    const CsvColumn data = read_csv_column(trace_path, column);
    DecayTrace trace;
    trace.dt = data.dt;
    trace.values = data.values;
    // Recordings often start before the drive step; drop the idle lead-in.
    while (!trace.values.empty() && trace.values.front() <= 0.0)
        trace.values.erase(trace.values.begin());
    if (kind_name == "VOLTAGE") trace.kind = DecayTrace::Kind::Voltage;
    else if (kind_name == "CURRENT") trace.kind = DecayTrace::Kind::Current;
    else throw ValidationError("fit: --kind must be VOLTAGE or CURRENT");

    const FitResult fit = fit_exponential(trace, magnitude, robust);
    std::printf("kind: %s\n", kind_name.c_str());
    std::printf("amplitude: %.9g\n", fit.amplitude);
    if (trace.kind == DecayTrace::Kind::Voltage)
        std::printf("k_hat: %.9g\n", fit.k_hat);
    std::printf("p_hat: %.9g\n", fit.p_hat);
    std::printf("residual_rms: %.9g\n", fit.residual_rms);
    std::printf("identifiable_c1: %s\n", fit.identifiable.c1 ? "true" : "false");
    std::printf("identifiable_c2: %s\n", fit.identifiable.c2 ? "true" : "false");
    std::printf("identifiable_r: %s\n", fit.identifiable.r ? "true" : "false");
    return 0;
}

// Accepts either a scenario config file or an inline "c1=..,c2=..,r=.."
// parameter string.
CircuitParams envelope_circuit(const std::string& params) {
    if (std::filesystem::exists(params))
        return load_scenario_config(params).circuit;
    if (params.find('=') == std::string::npos)
        throw ValidationError("no such config file: " + params);
    CircuitParams circuit;
    std::stringstream ss(params);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw ValidationError("bad circuit parameter: " + item);
        const std::string key = item.substr(0, eq);
        const double value = std::stod(item.substr(eq + 1));
        if (key == "c1") circuit.c1 = value;
        else if (key == "c2") circuit.c2 = value;
        else if (key == "r") circuit.r_leak = value;
        else throw ValidationError("unknown circuit parameter '" + key + "'");
    }
    circuit.validate();
    return circuit;
}

int run_envelope(const std::string& config_path, double frequency) {
    const CircuitParams circuit = envelope_circuit(config_path);
    const auto [k, p] = derive_constants(circuit);
    const Envelope env = envelope(circuit, frequency);
    std::printf("k: %.9g\n", k);
    std::printf("p: %.9g\n", p);
    std::printf("frequency: %.9g\n", frequency);
    std::printf("k1: %.9g\n", env.k1);
    std::printf("k2: %.9g\n", env.k2);
    return 0;
}

int run_calibrate_p(double drop, double horizon, const std::string& config_path) {
    const ScenarioConfig cfg = load_scenario_config(config_path);
    DecayScenario scenario;
    scenario.actuator = cfg.actuator;
    scenario.k_gain = cfg.circuit.k();
    scenario.drive_magnitude = cfg.drive.magnitude > 0.0 ? cfg.drive.magnitude : 6000.0;
    scenario.load_force = (cfg.plant.mass_a + cfg.plant.mass_b) * kGravity;
    const double p = calibrate_p_from_displacement_drop(drop, horizon, scenario);
    std::printf("p: %.9g\n", p);
    std::printf("achieved_drop: %.9g\n",
                1.0 - displacement_drop_ratio(p, horizon, scenario));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"SE-HASEL actuator simulation workbench"};
    app.require_subcommand(1);

    std::string config_path, trace_path, out_dir, format = "csv";
    std::string column, fit_kind = "VOLTAGE";
    double magnitude = 1.0, frequency = 2.0, drop = 0.0, horizon = 0.0;
    bool robust = false;
    std::optional<std::uint64_t> seed;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--seed", seed, "Override the scenario RNG seed");
        cmd->add_option("--out-dir", out_dir, "Directory for output files");
        cmd->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"csv"}));
    };

    auto* simulate = app.add_subcommand("simulate", "Run one scenario");
    simulate->add_option("config", config_path, "Scenario config file")->required();
    add_common(simulate);

    auto* sweep = app.add_subcommand("sweep", "Run a frequency or hysteresis sweep");
    sweep->add_option("config", config_path, "Sweep config file")->required();
    add_common(sweep);

    auto* fit = app.add_subcommand("fit", "Fit leakage constants from a decay trace");
    fit->add_option("trace", trace_path, "Trace CSV")->required();
    fit->add_option("--column", column, "Trace column to fit (default: u_o)");
    fit->add_option("--kind", fit_kind, "VOLTAGE or CURRENT");
    fit->add_option("--magnitude", magnitude, "Drive magnitude in volts");
    fit->add_flag("--robust", robust, "Absolute-deviation robust weighting");
    add_common(fit);

    auto* env = app.add_subcommand("envelope", "Steady-state envelope constants");
    env->add_option("config", config_path, "Config with a [circuit] section")->required();
    env->add_option("--frequency", frequency, "AC frequency in Hz");
    add_common(env);

    auto* calibrate = app.add_subcommand("calibrate-p",
                                         "Solve P from a displacement drop");
    calibrate->add_option("drop", drop, "Drop fraction in (0,1)")->required();
    calibrate->add_option("horizon", horizon, "Horizon in seconds")->required();
    calibrate->add_option("config", config_path, "Scenario config")->required();
    add_common(calibrate);

    CLI11_PARSE(app, argc, argv);

    try {
        if (simulate->parsed()) return run_simulate(config_path, seed, out_dir);
        if (sweep->parsed()) return run_sweep(config_path, seed, out_dir);
        if (fit->parsed())
            return run_fit(trace_path, column.empty() ? "u_o" : column, fit_kind,
                           magnitude, robust);
        if (env->parsed()) return run_envelope(config_path, frequency);
        if (calibrate->parsed()) return run_calibrate_p(drop, horizon, config_path);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const NumericError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
