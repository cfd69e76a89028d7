#include "sehasel/crank.hpp"

#include <cmath>
#include <numbers>

#include "sehasel/errors.hpp"

namespace sehasel {

namespace {
constexpr double kPi = std::numbers::pi;
}

void CrankSlider::validate() const {
    if (!(crank_radius > 0.0))
        throw ValidationError("crank: crank_radius must be positive");
    if (!(rod_length > crank_radius))
        throw ValidationError("crank: rod_length must exceed crank_radius");
    if (!(zero_angle >= 0.0) || !(zero_angle < kPi))
        throw ValidationError("crank: zero_angle must lie in [0, pi)");
}

double CrankSlider::slider_position(double theta) const {
    const double s = crank_radius * std::sin(theta);
    return crank_radius * std::cos(theta) +
           std::sqrt(rod_length * rod_length - s * s);
}

double CrankSlider::displacement(double theta) const {
    return slider_position(zero_angle) - slider_position(theta);
}

double crank_angle(const CrankSlider& geom, double h) {
    geom.validate();
    if (h < 0.0) throw ValidationError("crank_angle: h must be >= 0");
    const double h_limit = geom.displacement(kPi);
    if (h > h_limit * (1.0 + 1e-12))
        throw ValidationError("crank_angle: h exceeds the slider's reachable range");
    double lo = geom.zero_angle, hi = kPi;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (geom.displacement(mid) < h) lo = mid;
        else hi = mid;
    }
    return 0.5 * (lo + hi);
}

double solve_crank_radius(double rod_length, double zero_angle, double stroke,
                          double angle_range) {
    if (!(rod_length > 0.0) || !(stroke > 0.0) || !(angle_range > 0.0) ||
        !(zero_angle >= 0.0) || zero_angle + angle_range >= kPi)
        throw ValidationError("solve_crank_radius: invalid geometry request");
    auto stroke_for = [&](double r) {
        CrankSlider g{r, rod_length, zero_angle};
        return g.displacement(zero_angle + angle_range);
    };
    double lo = 1e-9, hi = rod_length * (1.0 - 1e-9);
    if (stroke_for(hi) < stroke)
        throw ValidationError("solve_crank_radius: stroke unreachable with this rod");
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (stroke_for(mid) < stroke) lo = mid;
        else hi = mid;
    }
    return 0.5 * (lo + hi);
}

CrankSlider default_crank_slider() {
    const double range = 48.1 * kPi / 180.0;
    const double zero = 0.5 * (kPi - range);
    const double rod = 0.04;
    return {solve_crank_radius(rod, zero, 0.008, range), rod, zero};
}

}  // namespace sehasel
