#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sehasel/actuator.hpp"
#include "sehasel/circuit.hpp"
#include "sehasel/control.hpp"
#include "sehasel/crank.hpp"
#include "sehasel/plant.hpp"

namespace sehasel {

enum class ScenarioKind {
    DcDecay,
    AcHold,
    FreqSweep,
    HysteresisSweep,
    Track,
    Impact,
    Isolation,
    Rotary,
    Biopsy,
};

std::string to_string(ScenarioKind kind);
ScenarioKind scenario_kind_from_string(const std::string& name);

/// Reference trajectory for closed-loop scenarios.
struct TargetSpec {
    enum class Kind { Const, Square, Sine, Steps };
    Kind kind = Kind::Const;
    double amplitude = 0.0;  // m
    double offset = 0.0;     // m
    double frequency = 0.0;  // Hz
    std::vector<std::pair<double, double>> steps;  // (t, value)

    void validate() const;
    double value(double t) const;
    bool operator==(const TargetSpec&) const = default;
};

struct SweepSpec {
    std::vector<double> frequencies;  // Hz
    std::vector<double> loads;        // kg added on plate A
    double v_max = 8000.0;            // V, hysteresis sweep top
    int steps = 80;                   // points per sweep direction

    bool operator==(const SweepSpec&) const = default;
};

struct ControllerSpec {
    PiGains gains;               // canonical SI units
    double mod_frequency = 2.0;  // Hz

    bool operator==(const ControllerSpec&) const = default;
};

struct OutputSpec {
    std::string trace_path = "trace.csv";
    std::string report_path = "report.txt";

    bool operator==(const OutputSpec&) const = default;
};

struct ScenarioConfig {
    ScenarioKind kind = ScenarioKind::Track;
    double duration = 10.0;    // s
    double record_dt = 1e-3;   // s
    double plant_dt = 1e-4;    // s
    std::uint64_t seed = 0;

    CircuitParams circuit;
    ActuatorConfig actuator;
    PlantParams plant;
    ControllerSpec controller;
    DriveWaveform drive;
    TargetSpec target;
    SweepSpec sweep;
    DisturbanceProfile disturbance;
    CrankSlider crank;
    OutputSpec output;

    void validate() const;
};

bool operator==(const ScenarioConfig& a, const ScenarioConfig& b);

/// Parses the `[section]` / `key = value` config text. Unknown sections or
/// keys are errors; validation failures list every violated field.
ScenarioConfig parse_scenario_config(const std::string& text);
ScenarioConfig load_scenario_config(const std::string& path);

/// Canonical serialization; parse(serialize(cfg)) == cfg.
std::string serialize_scenario_config(const ScenarioConfig& cfg);

/// Critically damped-ish default: c = 2 zeta sqrt(k m).
double damping_for_ratio(double zeta, double spring_k, double mass);

}  // namespace sehasel
