#include "sehasel/actuator.hpp"

#include <cmath>
#include <numbers>

#include "sehasel/errors.hpp"

namespace sehasel {

namespace {
constexpr double kPi = std::numbers::pi;
}

void FilmInterface::validate() const {
    if (!(eps_rel >= 1.0)) throw ValidationError("film: eps_rel must be >= 1");
    if (!(thickness > 0.0)) throw ValidationError("film: thickness must be positive");
}

void EaPad::validate() const {
    if (!(eps_rel >= 1.0)) throw ValidationError("pad: eps_rel must be >= 1");
    if (!(gap > 0.0)) throw ValidationError("pad: gap must be positive");
    if (!(area > 0.0)) throw ValidationError("pad: area must be positive");
}

void ActuatorConfig::validate() const {
    if (!(width_l0 > 0.0)) throw ValidationError("actuator: width_l0 must be positive");
    if (!(oil_volume_v0 > 0.0))
        throw ValidationError("actuator: oil_volume_v0 must be positive");
    if (stack_count < 1) throw ValidationError("actuator: stack_count must be >= 1");
    if (!(cell_height > 0.0))
        throw ValidationError("actuator: cell_height must be positive");
    if (!(s_max > 0.0)) throw ValidationError("actuator: s_max must be positive");
    film.validate();
}

double ActuatorConfig::h_max() const {
    return 2.0 * std::sqrt(oil_volume_v0 / (kPi * width_l0));
}

double ea_force(const EaPad& pad, double voltage) {
    pad.validate();
    return 0.5 * pad.eps_rel * kVacuumPermittivity * pad.area * voltage * voltage /
           (pad.gap * pad.gap);
}

double ea_pressure(const FilmInterface& film, double voltage) {
    film.validate();
    return 0.5 * film.eps_rel * kVacuumPermittivity * voltage * voltage /
           (film.thickness * film.thickness);
}

double cell_displacement(const ActuatorConfig& config, double pressure,
                         double load_force) {
    config.validate();
    if (load_force < 0.0)
        throw ValidationError("cell_displacement: load_force must be >= 0 "
                              "(actuator force is unidirectional)");
    if (pressure < 0.0)
        throw ValidationError("cell_displacement: pressure must be >= 0");
    if (pressure == 0.0) return 0.0;

    // Positive root of pi H^2/4 + q H - V0/L0 = 0 with q = F/(L0 Pe),
    // written to stay stable when q dominates the volume term.
    const double q = load_force / (config.width_l0 * pressure);
    const double c = kPi * config.oil_volume_v0 / config.width_l0;
    const double h = (2.0 / kPi) * c / (std::sqrt(q * q + c) + q);
    return std::min(h, config.h_max());
}

double contact_length(const ActuatorConfig& config, double h) {
    config.validate();
    const double hmax = config.h_max();
    if (!(h > 0.0) || h > hmax * (1.0 + 1e-12))
        throw ValidationError("contact_length: h must lie in (0, h_max]");
    const double s = config.oil_volume_v0 / (config.width_l0 * h) - kPi * h / 4.0;
    return std::max(s, 0.0);
}

double stack_displacement(const ActuatorConfig& config, double pressure,
                          double load_force) {
    return config.stack_count * cell_displacement(config, pressure, load_force);
}

VoltageSolution voltage_for_displacement(const ActuatorConfig& config,
                                         double h_target, double load_force) {
    config.validate();
    if (load_force < 0.0)
        throw ValidationError("voltage_for_displacement: load_force must be >= 0");
    const double h_cell = h_target / config.stack_count;
    if (!(h_cell > 0.0) || !(h_cell < config.h_max()))
        throw ValidationError(
            "voltage_for_displacement: h_target outside (0, stack_count*h_max)");
    if (load_force == 0.0) return {0.0, true};

    const double s = contact_length(config, h_cell);
    if (!(s > 0.0))
        throw ValidationError("voltage_for_displacement: h_target unreachable");
    const double pressure = load_force / (config.width_l0 * s);
    const double u = config.film.thickness *
                     std::sqrt(2.0 * pressure /
                               (config.film.eps_rel * kVacuumPermittivity));
    return {u, false};
}

}  // namespace sehasel
