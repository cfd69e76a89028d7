#pragma once

namespace sehasel {

/// Offset-free crank-slider converting the actuator stroke to joint rotation.
/// Slider position along the line of motion: x(theta) = r cos(theta) +
/// sqrt(l^2 - r^2 sin^2(theta)); displacement h is measured from zero_angle.
struct CrankSlider {
    double crank_radius = 0.0;  // m
    double rod_length = 0.04;   // m
    double zero_angle = 0.0;    // rad

    void validate() const;
    double slider_position(double theta) const;
    /// Stroke between zero_angle and theta (increases with theta on (0, pi)).
    double displacement(double theta) const;

    bool operator==(const CrankSlider&) const = default;
};

/// Crank angle whose slider displacement from zero_angle equals h.
double crank_angle(const CrankSlider& geom, double h);

/// Crank radius so that the given stroke spans angle_range starting at
/// zero_angle (one-dimensional bisection).
double solve_crank_radius(double rod_length, double zero_angle, double stroke,
                          double angle_range);

/// Default geometry: 40 mm rod, window centered on 90 deg, radius solved so
/// an 8 mm stroke spans 48.1 deg.
CrankSlider default_crank_slider();

}  // namespace sehasel
