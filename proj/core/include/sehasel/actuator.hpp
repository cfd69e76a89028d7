#pragma once

#include <cstdint>

namespace sehasel {

inline constexpr double kVacuumPermittivity = 8.854e-12;  // F/m
inline constexpr double kGravity = 9.81;                  // m/s^2

/// Zipped dielectric interface between electrode and liquid. `thickness` is
/// the total double-fold film thickness (2x a single film).
struct FilmInterface {
    double eps_rel = 3.4;
    double thickness = 100e-6;  // m, total zipped thickness

    void validate() const;
    bool operator==(const FilmInterface&) const = default;
};

/// Parallel-plate electrode pair, for the adhesion-force model.
struct EaPad {
    double eps_rel = 3.4;
    double gap = 100e-6;    // m
    double area = 36e-4;    // m^2

    void validate() const;
};

struct ActuatorConfig {
    double width_l0 = 0.06;        // m, pouch width L0
    double oil_volume_v0 = 3.2e-6; // m^3 per cell
    FilmInterface film;
    int stack_count = 1;           // cells in series
    double cell_height = 16.5e-3;  // m, undeformed cell height (strain basis)
    double s_max = 0.06;           // m, electrode overlap length (reported only)

    void validate() const;
    /// Zero-load per-cell displacement bound 2*sqrt(V0/(pi*L0)).
    double h_max() const;

    bool operator==(const ActuatorConfig&) const = default;
};

/// Electrostatic adhesion force 0.5 * eps_r * eps0 * A * u^2 / d^2.
double ea_force(const EaPad& pad, double voltage);

/// Liquid pressure sustained by the zipped interface,
/// 0.5 * eps_film * eps0 * u^2 / d_film^2.
double ea_pressure(const FilmInterface& film, double voltage);

/// Per-cell quasi-static displacement at liquid pressure `pressure` under a
/// compressive load `load_force`. Returns 0 at zero pressure.
double cell_displacement(const ActuatorConfig& config, double pressure,
                         double load_force);

/// Flat contact length from the volume balance: S = V0/(L0 h) - pi h / 4.
double contact_length(const ActuatorConfig& config, double h);

/// Series stack: stack_count identical cells carrying the same force.
double stack_displacement(const ActuatorConfig& config, double pressure,
                          double load_force);

struct VoltageSolution {
    double voltage;                   // V
    bool degenerate_zero_load = false; // F = 0 makes H voltage-independent
};

/// Inverts the displacement map: the voltage whose pressure holds the stack
/// at h_target under load_force. Returns 0 with the degenerate flag when the
/// load is zero.
VoltageSolution voltage_for_displacement(const ActuatorConfig& config,
                                         double h_target, double load_force);

}  // namespace sehasel
