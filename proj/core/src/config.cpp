#include "sehasel/config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

#include "sehasel/errors.hpp"

namespace sehasel {

std::string to_string(ScenarioKind kind) {
    switch (kind) {
        case ScenarioKind::DcDecay: return "DC_DECAY";
        case ScenarioKind::AcHold: return "AC_HOLD";
        case ScenarioKind::FreqSweep: return "FREQ_SWEEP";
        case ScenarioKind::HysteresisSweep: return "HYSTERESIS_SWEEP";
        case ScenarioKind::Track: return "TRACK";
        case ScenarioKind::Impact: return "IMPACT";
        case ScenarioKind::Isolation: return "ISOLATION";
        case ScenarioKind::Rotary: return "ROTARY";
        case ScenarioKind::Biopsy: return "BIOPSY";
    }
    throw ValidationError("unknown scenario kind");
}

ScenarioKind scenario_kind_from_string(const std::string& name) {
    static const std::map<std::string, ScenarioKind> kinds = {
        {"DC_DECAY", ScenarioKind::DcDecay},
        {"AC_HOLD", ScenarioKind::AcHold},
        {"FREQ_SWEEP", ScenarioKind::FreqSweep},
        {"HYSTERESIS_SWEEP", ScenarioKind::HysteresisSweep},
        {"TRACK", ScenarioKind::Track},
        {"IMPACT", ScenarioKind::Impact},
        {"ISOLATION", ScenarioKind::Isolation},
        {"ROTARY", ScenarioKind::Rotary},
        {"BIOPSY", ScenarioKind::Biopsy},
    };
    const auto it = kinds.find(name);
    if (it == kinds.end())
        throw ValidationError("scenario: unknown kind '" + name + "'");
    return it->second;
}

void TargetSpec::validate() const {
    if (kind == Kind::Square || kind == Kind::Sine) {
        if (!(frequency > 0.0))
            throw ValidationError("target: frequency must be positive");
        if (!(amplitude >= 0.0))
            throw ValidationError("target: amplitude must be >= 0");
    }
    if (kind == Kind::Steps) {
        if (steps.empty()) throw ValidationError("target: steps list is empty");
        for (std::size_t i = 1; i < steps.size(); ++i)
            if (!(steps[i].first > steps[i - 1].first))
                throw ValidationError("target: step times must be strictly increasing");
    }
}

double TargetSpec::value(double t) const {
    switch (kind) {
        case Kind::Const:
            return offset;
        case Kind::Square: {
            const double phase = std::fmod(t * frequency, 1.0);
            return offset + (phase < 0.5 ? amplitude : -amplitude);
        }
        case Kind::Sine:
            return offset + amplitude * std::sin(2.0 * std::numbers::pi * frequency * t);
        case Kind::Steps: {
            double v = offset;
            for (const auto& [ts, val] : steps) {
                if (t >= ts) v = val;
                else break;
            }
            return v;
        }
    }
    throw ValidationError("target: unknown kind");
}

double damping_for_ratio(double zeta, double spring_k, double mass) {
    if (!(zeta >= 0.0) || !(spring_k > 0.0) || !(mass > 0.0))
        throw ValidationError("damping_for_ratio: invalid arguments");
    return 2.0 * zeta * std::sqrt(spring_k * mass);
}

void ScenarioConfig::validate() const {
    std::vector<std::string> errors;
    auto check = [&](auto&& fn) {
        try {
            fn();
        } catch (const ValidationError& e) {
            errors.emplace_back(e.what());
        }
    };
    check([&] { circuit.validate(); });
    check([&] { actuator.validate(); });
    check([&] { plant.validate(); });
    check([&] { disturbance.validate(); });
    check([&] {
        if (!(duration > 0.0)) throw ValidationError("scenario: duration must be positive");
    });
    check([&] {
        if (!(record_dt > 0.0))
            throw ValidationError("scenario: record_dt must be positive");
    });
    check([&] {
        if (!(plant_dt > 0.0) || plant_dt > 1e-4 * (1.0 + 1e-9))
            throw ValidationError("scenario: plant_dt must lie in (0, 1e-4]");
    });

    const bool open_loop = kind == ScenarioKind::DcDecay || kind == ScenarioKind::AcHold ||
                           kind == ScenarioKind::Isolation || kind == ScenarioKind::FreqSweep;
    const bool closed_loop = kind == ScenarioKind::Track || kind == ScenarioKind::Impact ||
                             kind == ScenarioKind::Rotary || kind == ScenarioKind::Biopsy;
    if (open_loop && kind != ScenarioKind::FreqSweep) check([&] { drive.validate(); });
    if (closed_loop) {
        check([&] { controller.gains.validate(); });
        check([&] {
            if (!(controller.mod_frequency > 0.0))
                throw ValidationError("controller: mod_frequency must be positive");
        });
        check([&] { target.validate(); });
    }
    if (kind == ScenarioKind::FreqSweep) {
        check([&] {
            if (sweep.frequencies.empty())
                throw ValidationError("sweep: frequencies list is empty");
            for (double f : sweep.frequencies)
                if (!(f >= 0.1) || !(f <= 10.0))
                    throw ValidationError("sweep: frequencies must lie in [0.1, 10] Hz");
        });
        check([&] {
            if (sweep.loads.empty()) throw ValidationError("sweep: loads list is empty");
            for (double m : sweep.loads)
                if (!(m >= 0.0)) throw ValidationError("sweep: loads must be >= 0");
        });
    }
    if (kind == ScenarioKind::HysteresisSweep) {
        check([&] {
            if (!(sweep.v_max > 0.0)) throw ValidationError("sweep: v_max must be positive");
            if (sweep.steps < 2) throw ValidationError("sweep: steps must be >= 2");
        });
    }
    if (kind == ScenarioKind::Rotary) check([&] { crank.validate(); });

    if (!errors.empty()) {
        std::string msg = "config validation failed:";
        for (const auto& e : errors) msg += "\n  - " + e;
        throw ValidationError(msg);
    }
}

bool operator==(const ScenarioConfig& a, const ScenarioConfig& b) {
    return a.kind == b.kind && a.duration == b.duration && a.record_dt == b.record_dt &&
           a.plant_dt == b.plant_dt && a.seed == b.seed && a.circuit == b.circuit &&
           a.actuator == b.actuator && a.plant == b.plant &&
           a.controller == b.controller && a.drive == b.drive && a.target == b.target &&
           a.sweep == b.sweep && a.disturbance == b.disturbance && a.crank == b.crank &&
           a.output == b.output;
}

namespace {

using Section = std::map<std::string, std::string>;
using Ini = std::map<std::string, Section>;

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

Ini parse_ini(const std::string& text) {
    Ini ini;
    std::istringstream in(text);
    std::string line;
    std::string section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ValidationError("config line " + std::to_string(lineno) +
                                      ": malformed section header");
            section = trim(line.substr(1, line.size() - 2));
            if (section.empty())
                throw ValidationError("config line " + std::to_string(lineno) +
                                      ": empty section name");
            ini[section];
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ValidationError("config line " + std::to_string(lineno) +
                                  ": expected 'key = value'");
        if (section.empty())
            throw ValidationError("config line " + std::to_string(lineno) +
                                  ": key outside any [section]");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw ValidationError("config line " + std::to_string(lineno) + ": empty key");
        if (ini[section].count(key))
            throw ValidationError("config: duplicate key '" + section + "." + key + "'");
        ini[section][key] = value;
    }
    return ini;
}

double parse_double(const std::string& section, const std::string& key,
                    const std::string& value) {
    const char* begin = value.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0' || !std::isfinite(v))
        throw ValidationError("config: " + section + "." + key +
                              ": expected a finite number, got '" + value + "'");
    return v;
}

long parse_int(const std::string& section, const std::string& key,
               const std::string& value) {
    const char* begin = value.c_str();
    char* end = nullptr;
    const long v = std::strtol(begin, &end, 10);
    if (end == begin || *end != '\0')
        throw ValidationError("config: " + section + "." + key +
                              ": expected an integer, got '" + value + "'");
    return v;
}

bool parse_bool(const std::string& section, const std::string& key,
                const std::string& value) {
    if (value == "true") return true;
    if (value == "false") return false;
    throw ValidationError("config: " + section + "." + key +
                          ": expected true/false, got '" + value + "'");
}

std::vector<double> parse_list(const std::string& section, const std::string& key,
                               const std::string& value) {
    std::vector<double> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty())
            throw ValidationError("config: " + section + "." + key + ": empty list item");
        out.push_back(parse_double(section, key, item));
    }
    if (out.empty())
        throw ValidationError("config: " + section + "." + key + ": empty list");
    return out;
}

std::vector<std::pair<double, double>> parse_pairs(const std::string& section,
                                                   const std::string& key,
                                                   const std::string& value) {
    std::vector<std::pair<double, double>> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        const auto colon = item.find(':');
        if (colon == std::string::npos)
            throw ValidationError("config: " + section + "." + key +
                                  ": expected 't:value' pairs");
        out.emplace_back(parse_double(section, key, trim(item.substr(0, colon))),
                         parse_double(section, key, trim(item.substr(colon + 1))));
    }
    return out;
}

/// Tracks consumed keys so unknown ones fail closed.
class SectionReader {
public:
    SectionReader(const Ini& ini, std::string name)
        : name_(std::move(name)) {
        const auto it = ini.find(name_);
        if (it != ini.end()) {
            section_ = &it->second;
            present_ = true;
        }
    }

    bool present() const { return present_; }

    bool has(const std::string& key) {
        if (!section_) return false;
        return section_->count(key) > 0;
    }

    std::string raw(const std::string& key) {
        used_.insert(key);
        return section_->at(key);
    }

    double number(const std::string& key, double fallback) {
        if (!has(key)) return fallback;
        return parse_double(name_, key, raw(key));
    }
    long integer(const std::string& key, long fallback) {
        if (!has(key)) return fallback;
        return parse_int(name_, key, raw(key));
    }
    bool boolean(const std::string& key, bool fallback) {
        if (!has(key)) return fallback;
        return parse_bool(name_, key, raw(key));
    }
    std::string text(const std::string& key, const std::string& fallback) {
        if (!has(key)) return fallback;
        return raw(key);
    }
    std::vector<double> list(const std::string& key) {
        return parse_list(name_, key, raw(key));
    }
    std::vector<std::pair<double, double>> pairs(const std::string& key) {
        return parse_pairs(name_, key, raw(key));
    }

    void finish() const {
        if (!section_) return;
        for (const auto& [key, value] : *section_)
            if (!used_.count(key))
                throw ValidationError("config: unknown key '" + name_ + "." + key + "'");
    }

private:
    std::string name_;
    const Section* section_ = nullptr;
    bool present_ = false;
    std::set<std::string> used_;
};

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

ScenarioConfig parse_scenario_config(const std::string& text) {
    const Ini ini = parse_ini(text);
    static const std::set<std::string> known_sections = {
        "scenario", "circuit", "actuator", "plant", "controller",
        "drive", "target", "sweep", "disturbance", "crank", "output"};
    for (const auto& [name, _] : ini)
        if (!known_sections.count(name))
            throw ValidationError("config: unknown section '[" + name + "]'");

    ScenarioConfig cfg;

    SectionReader scenario(ini, "scenario");
    if (!scenario.present())
        throw ValidationError("config: missing required [scenario] section");
    if (!scenario.has("kind"))
        throw ValidationError("config: scenario.kind is required");
    cfg.kind = scenario_kind_from_string(scenario.raw("kind"));
    cfg.duration = scenario.number("duration", cfg.duration);
    cfg.record_dt = scenario.number("record_dt", cfg.record_dt);
    cfg.plant_dt = scenario.number("plant_dt", cfg.plant_dt);
    cfg.seed = static_cast<std::uint64_t>(scenario.integer("seed", 0));
    scenario.finish();

    SectionReader circuit(ini, "circuit");
    cfg.circuit.c1 = circuit.number("c1", cfg.circuit.c1);
    cfg.circuit.c2 = circuit.number("c2", cfg.circuit.c2);
    cfg.circuit.r_leak = circuit.number("r_leak", cfg.circuit.r_leak);
    circuit.finish();

    SectionReader actuator(ini, "actuator");
    cfg.actuator.film.eps_rel = actuator.number("film_eps_rel", cfg.actuator.film.eps_rel);
    // Configs give the single-film thickness; the zipped interface is double-fold.
    cfg.actuator.film.thickness =
        2.0 * actuator.number("film_thickness", cfg.actuator.film.thickness / 2.0);
    cfg.actuator.width_l0 = actuator.number("width_l0", cfg.actuator.width_l0);
    cfg.actuator.oil_volume_v0 =
        actuator.number("oil_volume_v0", cfg.actuator.oil_volume_v0);
    cfg.actuator.stack_count =
        static_cast<int>(actuator.integer("stack_count", cfg.actuator.stack_count));
    cfg.actuator.cell_height = actuator.number("cell_height", cfg.actuator.cell_height);
    cfg.actuator.s_max = actuator.number("s_max", cfg.actuator.s_max);
    actuator.finish();

    SectionReader plant(ini, "plant");
    cfg.plant.spring_k = plant.number("spring_k", cfg.plant.spring_k);
    cfg.plant.mass_a = plant.number("mass_a", cfg.plant.mass_a);
    cfg.plant.mass_b = plant.number("mass_b", cfg.plant.mass_b);
    if (plant.has("damping_c") && plant.has("damping_zeta"))
        throw ValidationError("config: give plant.damping_c or plant.damping_zeta, not both");
    if (plant.has("damping_zeta")) {
        cfg.plant.damping_c = damping_for_ratio(plant.number("damping_zeta", 0.5),
                                                cfg.plant.spring_k, cfg.plant.mass_a);
    } else {
        cfg.plant.damping_c = plant.number(
            "damping_c", damping_for_ratio(0.5, cfg.plant.spring_k, cfg.plant.mass_a));
    }
    cfg.plant.play_width = plant.number("play_width", cfg.plant.play_width);
    cfg.plant.sensor_noise_sd =
        plant.number("sensor_noise_sd", cfg.plant.sensor_noise_sd);
    cfg.plant.rigid = plant.boolean("rigid", cfg.plant.rigid);
    plant.finish();
    cfg.plant.rng_seed = cfg.seed;

    SectionReader controller(ini, "controller");
    if (controller.present()) {
        const std::string units = controller.text("gain_units", "si");
        double kp = controller.number("kp", 0.0);
        double ki = controller.number("ki", 0.0);
        cfg.controller.gains.cycle_dt =
            controller.number("cycle_dt", cfg.controller.gains.cycle_dt);
        if (units == "si") {
            // kp in V/m, ki in V/(m*s)
        } else if (units == "kv_mm_per_cycle") {
            // kp in kV/mm, ki in kV/(mm*cycle)
            kp *= 1e6;
            ki = ki * 1e6 / cfg.controller.gains.cycle_dt;
        } else if (units == "kv_mm_per_second") {
            kp *= 1e6;
            ki *= 1e6;
        } else {
            throw ValidationError("config: controller.gain_units must be one of "
                                  "si, kv_mm_per_cycle, kv_mm_per_second");
        }
        cfg.controller.gains.kp = kp;
        cfg.controller.gains.ki = ki;
        cfg.controller.gains.u_max =
            controller.number("u_max", cfg.controller.gains.u_max);
        cfg.controller.mod_frequency =
            controller.number("mod_frequency", cfg.controller.mod_frequency);
    }
    controller.finish();

    SectionReader drive(ini, "drive");
    if (drive.present()) {
        const std::string kind = drive.text("kind", "DC_STEP");
        if (kind == "DC_STEP") cfg.drive.kind = DriveWaveform::Kind::DcStep;
        else if (kind == "AC_SQUARE") cfg.drive.kind = DriveWaveform::Kind::AcSquare;
        else throw ValidationError("config: drive.kind must be DC_STEP or AC_SQUARE");
        cfg.drive.magnitude = drive.number("magnitude", cfg.drive.magnitude);
        cfg.drive.frequency = drive.number("frequency", cfg.drive.frequency);
    }
    drive.finish();

    SectionReader target(ini, "target");
    if (target.present()) {
        const std::string kind = target.text("kind", "CONST");
        if (kind == "CONST") cfg.target.kind = TargetSpec::Kind::Const;
        else if (kind == "SQUARE") cfg.target.kind = TargetSpec::Kind::Square;
        else if (kind == "SINE") cfg.target.kind = TargetSpec::Kind::Sine;
        else if (kind == "STEPS") cfg.target.kind = TargetSpec::Kind::Steps;
        else
            throw ValidationError(
                "config: target.kind must be CONST, SQUARE, SINE or STEPS");
        cfg.target.amplitude = target.number("amplitude", cfg.target.amplitude);
        cfg.target.offset = target.number("offset", cfg.target.offset);
        cfg.target.frequency = target.number("frequency", cfg.target.frequency);
        if (target.has("steps")) cfg.target.steps = target.pairs("steps");
    }
    target.finish();

    SectionReader sweep(ini, "sweep");
    if (sweep.present()) {
        if (sweep.has("frequencies")) cfg.sweep.frequencies = sweep.list("frequencies");
        if (sweep.has("loads")) cfg.sweep.loads = sweep.list("loads");
        cfg.sweep.v_max = sweep.number("v_max", cfg.sweep.v_max);
        cfg.sweep.steps = static_cast<int>(sweep.integer("steps", cfg.sweep.steps));
    }
    sweep.finish();

    SectionReader disturbance(ini, "disturbance");
    if (disturbance.present()) {
        std::vector<double> times, forces;
        if (disturbance.has("step_times")) times = disturbance.list("step_times");
        if (disturbance.has("step_forces")) forces = disturbance.list("step_forces");
        if (times.size() != forces.size())
            throw ValidationError(
                "config: disturbance.step_times and step_forces lengths differ");
        for (std::size_t i = 0; i < times.size(); ++i)
            cfg.disturbance.steps.emplace_back(times[i], forces[i]);
        std::vector<double> rx, rf;
        if (disturbance.has("resistance_x")) rx = disturbance.list("resistance_x");
        if (disturbance.has("resistance_f")) rf = disturbance.list("resistance_f");
        if (rx.size() != rf.size())
            throw ValidationError(
                "config: disturbance.resistance_x and resistance_f lengths differ");
        for (std::size_t i = 0; i < rx.size(); ++i)
            cfg.disturbance.resistance.emplace_back(rx[i], rf[i]);
    }
    disturbance.finish();

    SectionReader crank(ini, "crank");
    cfg.crank = default_crank_slider();
    if (crank.present()) {
        cfg.crank.rod_length = crank.number("rod_length", cfg.crank.rod_length);
        cfg.crank.zero_angle = crank.number("zero_angle", cfg.crank.zero_angle);
        if (crank.has("crank_radius") && crank.raw("crank_radius") != "auto") {
            cfg.crank.crank_radius =
                parse_double("crank", "crank_radius", crank.raw("crank_radius"));
        } else {
            cfg.crank.crank_radius = solve_crank_radius(
                cfg.crank.rod_length, cfg.crank.zero_angle, 0.008,
                48.1 * std::numbers::pi / 180.0);
        }
    }
    crank.finish();

    SectionReader output(ini, "output");
    cfg.output.trace_path = output.text("trace", cfg.output.trace_path);
    cfg.output.report_path = output.text("report", cfg.output.report_path);
    output.finish();

    cfg.validate();
    return cfg;
}

ScenarioConfig load_scenario_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("config: cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_scenario_config(ss.str());
}

std::string serialize_scenario_config(const ScenarioConfig& cfg) {
    std::ostringstream out;
    out << "[scenario]\n";
    out << "kind = " << to_string(cfg.kind) << "\n";
    out << "duration = " << fmt(cfg.duration) << "\n";
    out << "record_dt = " << fmt(cfg.record_dt) << "\n";
    out << "plant_dt = " << fmt(cfg.plant_dt) << "\n";
    out << "seed = " << cfg.seed << "\n";

    out << "\n[circuit]\n";
    out << "c1 = " << fmt(cfg.circuit.c1) << "\n";
    out << "c2 = " << fmt(cfg.circuit.c2) << "\n";
    out << "r_leak = " << fmt(cfg.circuit.r_leak) << "\n";

    out << "\n[actuator]\n";
    out << "film_eps_rel = " << fmt(cfg.actuator.film.eps_rel) << "\n";
    out << "film_thickness = " << fmt(cfg.actuator.film.thickness / 2.0) << "\n";
    out << "width_l0 = " << fmt(cfg.actuator.width_l0) << "\n";
    out << "oil_volume_v0 = " << fmt(cfg.actuator.oil_volume_v0) << "\n";
    out << "stack_count = " << cfg.actuator.stack_count << "\n";
    out << "cell_height = " << fmt(cfg.actuator.cell_height) << "\n";
    out << "s_max = " << fmt(cfg.actuator.s_max) << "\n";

    out << "\n[plant]\n";
    out << "spring_k = " << fmt(cfg.plant.spring_k) << "\n";
    out << "damping_c = " << fmt(cfg.plant.damping_c) << "\n";
    out << "mass_a = " << fmt(cfg.plant.mass_a) << "\n";
    out << "mass_b = " << fmt(cfg.plant.mass_b) << "\n";
    out << "play_width = " << fmt(cfg.plant.play_width) << "\n";
    out << "sensor_noise_sd = " << fmt(cfg.plant.sensor_noise_sd) << "\n";
    out << "rigid = " << (cfg.plant.rigid ? "true" : "false") << "\n";

    out << "\n[controller]\n";
    out << "gain_units = si\n";
    out << "kp = " << fmt(cfg.controller.gains.kp) << "\n";
    out << "ki = " << fmt(cfg.controller.gains.ki) << "\n";
    out << "cycle_dt = " << fmt(cfg.controller.gains.cycle_dt) << "\n";
    out << "u_max = " << fmt(cfg.controller.gains.u_max) << "\n";
    out << "mod_frequency = " << fmt(cfg.controller.mod_frequency) << "\n";

    out << "\n[drive]\n";
    out << "kind = "
        << (cfg.drive.kind == DriveWaveform::Kind::DcStep ? "DC_STEP" : "AC_SQUARE")
        << "\n";
    out << "magnitude = " << fmt(cfg.drive.magnitude) << "\n";
    out << "frequency = " << fmt(cfg.drive.frequency) << "\n";

    out << "\n[target]\n";
    switch (cfg.target.kind) {
        case TargetSpec::Kind::Const: out << "kind = CONST\n"; break;
        case TargetSpec::Kind::Square: out << "kind = SQUARE\n"; break;
        case TargetSpec::Kind::Sine: out << "kind = SINE\n"; break;
        case TargetSpec::Kind::Steps: out << "kind = STEPS\n"; break;
    }
    out << "amplitude = " << fmt(cfg.target.amplitude) << "\n";
    out << "offset = " << fmt(cfg.target.offset) << "\n";
    out << "frequency = " << fmt(cfg.target.frequency) << "\n";
    if (!cfg.target.steps.empty()) {
        out << "steps = ";
        for (std::size_t i = 0; i < cfg.target.steps.size(); ++i) {
            if (i) out << ", ";
            out << fmt(cfg.target.steps[i].first) << ":"
                << fmt(cfg.target.steps[i].second);
        }
        out << "\n";
    }

    out << "\n[sweep]\n";
    if (!cfg.sweep.frequencies.empty()) {
        out << "frequencies = ";
        for (std::size_t i = 0; i < cfg.sweep.frequencies.size(); ++i)
            out << (i ? ", " : "") << fmt(cfg.sweep.frequencies[i]);
        out << "\n";
    }
    if (!cfg.sweep.loads.empty()) {
        out << "loads = ";
        for (std::size_t i = 0; i < cfg.sweep.loads.size(); ++i)
            out << (i ? ", " : "") << fmt(cfg.sweep.loads[i]);
        out << "\n";
    }
    out << "v_max = " << fmt(cfg.sweep.v_max) << "\n";
    out << "steps = " << cfg.sweep.steps << "\n";

    if (!cfg.disturbance.steps.empty() || !cfg.disturbance.resistance.empty()) {
        out << "\n[disturbance]\n";
        if (!cfg.disturbance.steps.empty()) {
            out << "step_times = ";
            for (std::size_t i = 0; i < cfg.disturbance.steps.size(); ++i)
                out << (i ? ", " : "") << fmt(cfg.disturbance.steps[i].first);
            out << "\nstep_forces = ";
            for (std::size_t i = 0; i < cfg.disturbance.steps.size(); ++i)
                out << (i ? ", " : "") << fmt(cfg.disturbance.steps[i].second);
            out << "\n";
        }
        if (!cfg.disturbance.resistance.empty()) {
            out << "resistance_x = ";
            for (std::size_t i = 0; i < cfg.disturbance.resistance.size(); ++i)
                out << (i ? ", " : "") << fmt(cfg.disturbance.resistance[i].first);
            out << "\nresistance_f = ";
            for (std::size_t i = 0; i < cfg.disturbance.resistance.size(); ++i)
                out << (i ? ", " : "") << fmt(cfg.disturbance.resistance[i].second);
            out << "\n";
        }
    }

    out << "\n[crank]\n";
    out << "rod_length = " << fmt(cfg.crank.rod_length) << "\n";
    out << "zero_angle = " << fmt(cfg.crank.zero_angle) << "\n";
    out << "crank_radius = " << fmt(cfg.crank.crank_radius) << "\n";

    out << "\n[output]\n";
    out << "trace = " << cfg.output.trace_path << "\n";
    out << "report = " << cfg.output.report_path << "\n";
    return out.str();
}

}  // namespace sehasel
