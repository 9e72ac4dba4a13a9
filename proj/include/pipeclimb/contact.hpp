#pragma once

#include <span>
#include <stdexcept>
#include <string>

// Contact-angle, holding-force and spring-stiffness relations, plus the
// linear spring suspension and traction margin used for no-slip checks.
// Forces in newtons, lengths in millimeters, angles in radians.

namespace pipeclimb {

inline constexpr double kGravity = 9.81;  // m/s^2

struct SpringConfig {
    double stiffness = 1.0;            // N/mm, > 0
    double preload_compression = 0.0;  // mm, in [0, max_travel]
    double max_travel = 16.0;          // mm

    void validate() const;

    bool operator==(const SpringConfig&) const = default;
};

struct ContactState {
    double normal_force = 0.0;   // N, >= 0
    double friction_mu = 0.0;    // >= 0
    double contact_angle = 0.0;  // rad, in [0, pi/2]
};

/// Spring compressed or extended past its hard stops. Identifies the module
/// and arc position where known.
class TravelLimitError : public std::domain_error {
  public:
    TravelLimitError(std::string module, double compression, double max_travel,
                     double arc_position = -1.0);

    const std::string& module() const { return module_; }
    double compression() const { return compression_; }

  private:
    std::string module_;
    double compression_;
};

/// Contact inclination angle arctan(AO / OC), in [0, pi/2).
/// Requires OC > 0 and AO >= 0.
double contact_angle(double AO, double OC);

/// Holding force H = (N + mu*N) * sin(angle).
/// Requires N >= 0, mu >= 0 and angle in [0, pi/2].
double holding_force(double N, double mu, double angle);

/// Spring stiffness sizing rule K_s = mu*N / 9 (N/mm per mm of compression).
/// A design recommendation taken verbatim; the divisor is not derived here.
double spring_stiffness_rule(double mu, double N);

/// Linear spring force K_s * compression. Compression outside
/// [0, max_travel] throws TravelLimitError.
double normal_force(const SpringConfig& spring, double compression);

/// Traction reserve for a steady climb: sum(mu_i * N_i) - m*g*|axial|,
/// where gravity_axis_component in [-1, 1] is the pipe-axis component of the
/// gravity direction. Positive means the contacts can hold the robot.
double no_slip_margin(double mass_kg, double gravity_axis_component,
                      std::span<const ContactState> contacts);

}  // namespace pipeclimb
