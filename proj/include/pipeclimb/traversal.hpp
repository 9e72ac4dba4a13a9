#pragma once

#include "pipeclimb/contact.hpp"
#include "pipeclimb/differential.hpp"
#include "pipeclimb/pipe_geometry.hpp"

#include <array>
#include <cstddef>
#include <vector>

// Quasi-static traversal: the robot is a point on the centerline with three
// track contacts in one cross-sectional plane, advanced at constant input
// speed. Track speeds are allocated by the differential or held equal by the
// rigid baseline; the mismatch against the geometric requirement is recorded
// as slip, never integrated into the pose, so both modes run identical
// trajectories.

namespace pipeclimb {

enum class DriveMode {
    Differential,  // speeds allocated proportionally to the effective radii
    RigidDrive,    // equal-speed baseline; bends produce slip/drag
};

struct RobotConfig {
    // Module angular positions about the pipe axis. Module A's angle is
    // measured from the bend plane's outward direction via the roll angle.
    std::array<double, 3> module_angles{0.0, 2.0943951023931953, 4.1887902047863905};
    double contact_radius = 0.0;  // mm, track contact to pipe axis; <= pipe inner radius
    double mass = 0.0;            // kg
    SpringConfig spring{};
    double friction_mu = 0.0;
    double nominal_speed = 0.0;   // mm/s, input to the transmission
    TransmissionConfig transmission{};

    void validate() const;
    /// Sprocket-scale input speed (= overall_ratio * nominal_speed).
    double input_speed() const { return transmission.overall_ratio * nominal_speed; }

    bool operator==(const RobotConfig&) const = default;
};

struct TraversalState {
    double time = 0.0;          // s
    double arc_position = 0.0;  // mm along the centerline
    double roll_angle = 0.0;    // rad, module A from the bend plane's outward direction
    std::array<double, 3> commanded_speeds{};
    std::array<double, 3> required_speeds{};
    std::array<double, 3> spring_compressions{};
};

struct TraceSample {
    double time = 0.0;
    double arc_position = 0.0;
    std::size_t segment = 0;
    std::array<double, 3> commanded{};  // mm/s
    std::array<double, 3> required{};   // mm/s
    std::array<double, 3> slip{};       // commanded - required, exactly
    std::array<double, 3> spring{};     // mm

    bool operator==(const TraceSample&) const = default;
};

struct Trace {
    std::vector<TraceSample> samples;
    bool complete = true;  // false when the time cap expired before the end
};

/// Geometrically required track speeds at the state's arc position: the
/// nominal speed on straights, v * (R + r_c cos(theta + offset_i)) / R in
/// bends. The mean of the three always equals the nominal speed.
std::array<double, 3> required_speeds(const PipeNetwork& network, const RobotConfig& robot,
                                      const TraversalState& state);

/// Commanded track speeds for one drive mode. Differential allocates through
/// solve_with_ratios on the required speeds; RigidDrive commands the input
/// speed on all three tracks.
std::array<double, 3> allocate_speeds(DriveMode mode, const TransmissionConfig& transmission,
                                      double input_speed, const std::array<double, 3>& required);

/// Per-module spring compression at the state's arc position: the preload on
/// straights; preload - delta * cos(theta + offset_i) in bends declaring a
/// clearance delta. Throws TravelLimitError naming the module if a value
/// leaves [0, max_travel].
std::array<double, 3> spring_profile(const PipeNetwork& network, const RobotConfig& robot,
                                     const TraversalState& state);

/// State at arc position 0 with speeds and compressions filled in.
TraversalState initial_state(const PipeNetwork& network, const RobotConfig& robot,
                             double roll_angle, DriveMode mode);

/// Advance by dt: the body moves input_speed * dt along the centerline
/// (clamped at the network end); speeds, slip and compressions are
/// re-evaluated at the new position. Requires dt > 0.
TraversalState step(const PipeNetwork& network, const RobotConfig& robot,
                    const TraversalState& state, double dt, DriveMode mode);

/// Run until the end of the network or until time exceeds time_cap. The
/// trace keeps every sample_every-th state plus always the first and last.
/// A capped run is returned with complete = false.
Trace run_scenario(const PipeNetwork& network, const RobotConfig& robot, DriveMode mode,
                   double dt, std::size_t sample_every = 1, double roll_angle = 0.0,
                   double time_cap = 600.0);

/// Per-track integral of |slip| dt, trapezoidal over the trace samples (mm).
std::array<double, 3> slip_distance(const Trace& trace);

}  // namespace pipeclimb
