#include "pipeclimb/contact.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace pipeclimb {

void SpringConfig::validate() const {
    if (!(stiffness > 0.0)) {
        throw std::invalid_argument("spring stiffness must be > 0");
    }
    if (!(max_travel > 0.0)) {
        throw std::invalid_argument("spring max_travel must be > 0");
    }
    if (preload_compression < 0.0 || preload_compression > max_travel) {
        throw std::invalid_argument("spring preload must be within [0, max_travel]");
    }
}

namespace {

std::string travel_message(const std::string& module, double compression, double max_travel,
                           double arc_position) {
    std::ostringstream msg;
    msg << "spring travel limit";
    if (!module.empty()) msg << " on module " << module;
    msg << ": compression " << compression << " mm outside [0, " << max_travel << "] mm";
    if (arc_position >= 0.0) msg << " at s = " << arc_position << " mm";
    return msg.str();
}

}  // namespace

TravelLimitError::TravelLimitError(std::string module, double compression, double max_travel,
                                   double arc_position)
    : std::domain_error(travel_message(module, compression, max_travel, arc_position)),
      module_(std::move(module)),
      compression_(compression) {}

double contact_angle(double AO, double OC) {
    if (!(OC > 0.0)) {
        throw std::domain_error("contact_angle: OC must be > 0");
    }
    if (AO < 0.0) {
        throw std::domain_error("contact_angle: AO must be >= 0");
    }
    return std::atan(AO / OC);
}

double holding_force(double N, double mu, double angle) {
    if (N < 0.0 || mu < 0.0) {
        throw std::domain_error("holding_force: N and mu must be >= 0");
    }
    if (angle < 0.0 || angle > std::numbers::pi / 2.0) {
        throw std::domain_error("holding_force: angle must be in [0, pi/2]");
    }
    return (N + mu * N) * std::sin(angle);
}

double spring_stiffness_rule(double mu, double N) {
    if (mu < 0.0 || N < 0.0) {
        throw std::domain_error("spring_stiffness_rule: mu and N must be >= 0");
    }
    return mu * N / 9.0;
}

double normal_force(const SpringConfig& spring, double compression) {
    spring.validate();
    if (compression < 0.0 || compression > spring.max_travel) {
        throw TravelLimitError("", compression, spring.max_travel);
    }
    return spring.stiffness * compression;
}

double no_slip_margin(double mass_kg, double gravity_axis_component,
                      std::span<const ContactState> contacts) {
    if (contacts.empty()) {
        throw std::domain_error("no_slip_margin: needs at least one contact");
    }
    if (mass_kg < 0.0) {
        throw std::domain_error("no_slip_margin: mass must be >= 0");
    }
    if (gravity_axis_component < -1.0 || gravity_axis_component > 1.0) {
        throw std::domain_error("no_slip_margin: axis component must be in [-1, 1]");
    }
    double traction = 0.0;
    for (const auto& c : contacts) {
        if (c.normal_force < 0.0 || c.friction_mu < 0.0) {
            throw std::domain_error("no_slip_margin: contact N and mu must be >= 0");
        }
        traction += c.friction_mu * c.normal_force;
    }
    return traction - mass_kg * kGravity * std::abs(gravity_axis_component);
}

}  // namespace pipeclimb
