#include "pipeclimb/traversal.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace pipeclimb {

namespace {

constexpr const char* kModuleNames[3] = {"A", "B", "C"};

void require_fits(const PipeNetwork& network, const RobotConfig& robot) {
    if (robot.contact_radius > network.inner_radius()) {
        std::ostringstream msg;
        msg << "contact radius " << robot.contact_radius << " mm exceeds pipe inner radius "
            << network.inner_radius() << " mm";
        throw std::invalid_argument(msg.str());
    }
}

TraceSample sample_state(const PipeNetwork& network, const TraversalState& state) {
    TraceSample sample;
    sample.time = state.time;
    sample.arc_position = state.arc_position;
    sample.segment = network.segment_at(state.arc_position).first;
    sample.commanded = state.commanded_speeds;
    sample.required = state.required_speeds;
    for (std::size_t i = 0; i < 3; ++i) {
        sample.slip[i] = state.commanded_speeds[i] - state.required_speeds[i];
    }
    sample.spring = state.spring_compressions;
    return sample;
}

}  // namespace

void RobotConfig::validate() const {
    if (!(contact_radius > 0.0)) {
        throw std::invalid_argument("contact radius must be > 0");
    }
    if (!(mass >= 0.0)) {
        throw std::invalid_argument("mass must be >= 0");
    }
    if (!(friction_mu >= 0.0)) {
        throw std::invalid_argument("friction coefficient must be >= 0");
    }
    if (!std::isfinite(nominal_speed)) {
        throw std::invalid_argument("nominal speed must be finite");
    }
    spring.validate();
    transmission.validate();
    // Three distinct module directions around the axis.
    constexpr double two_pi = 2.0 * std::numbers::pi;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = i + 1; j < 3; ++j) {
            double d = std::fmod(std::abs(module_angles[i] - module_angles[j]), two_pi);
            if (d < 1e-12 || two_pi - d < 1e-12) {
                throw std::invalid_argument("module angles must be pairwise distinct mod 2*pi");
            }
        }
    }
}

std::array<double, 3> required_speeds(const PipeNetwork& network, const RobotConfig& robot,
                                      const TraversalState& state) {
    require_fits(network, robot);
    const double v = robot.input_speed();
    const auto [index, local] = network.segment_at(state.arc_position);
    (void)local;
    const Segment& segment = network.segments()[index];
    if (std::holds_alternative<StraightSegment>(segment)) {
        return {v, v, v};
    }
    const auto& bend = std::get<BendSegment>(segment);
    std::array<double, 3> speeds{};
    for (std::size_t i = 0; i < 3; ++i) {
        const double psi = state.roll_angle + robot.module_angles[i];
        speeds[i] = v * effective_radius(bend, psi, robot.contact_radius) / bend.bend_radius;
    }
    return speeds;
}

std::array<double, 3> allocate_speeds(DriveMode mode, const TransmissionConfig& transmission,
                                      double input_speed, const std::array<double, 3>& required) {
    if (mode == DriveMode::RigidDrive) {
        const double v = transmission.overall_ratio * input_speed;
        return {v, v, v};
    }
    return solve_with_ratios(transmission, input_speed, required).output_speeds;
}

std::array<double, 3> spring_profile(const PipeNetwork& network, const RobotConfig& robot,
                                     const TraversalState& state) {
    const double preload = robot.spring.preload_compression;
    const auto [index, local] = network.segment_at(state.arc_position);
    (void)local;
    const Segment& segment = network.segments()[index];
    std::array<double, 3> compressions{preload, preload, preload};
    if (const auto* bend = std::get_if<BendSegment>(&segment)) {
        // Radial clearance projected onto each module direction: the inner
        // module (psi = pi) gains the full delta, the outer one loses it.
        for (std::size_t i = 0; i < 3; ++i) {
            const double psi = state.roll_angle + robot.module_angles[i];
            compressions[i] = preload - bend->clearance_delta * std::cos(psi);
        }
    }
    for (std::size_t i = 0; i < 3; ++i) {
        if (compressions[i] < 0.0 || compressions[i] > robot.spring.max_travel) {
            throw TravelLimitError(kModuleNames[i], compressions[i], robot.spring.max_travel,
                                   state.arc_position);
        }
    }
    return compressions;
}

namespace {

// Fill the speed and spring fields for the state's current position.
void refresh(const PipeNetwork& network, const RobotConfig& robot, TraversalState& state,
             DriveMode mode) {
    state.required_speeds = required_speeds(network, robot, state);
    state.commanded_speeds =
        allocate_speeds(mode, robot.transmission, robot.nominal_speed, state.required_speeds);
    state.spring_compressions = spring_profile(network, robot, state);
}

}  // namespace

TraversalState initial_state(const PipeNetwork& network, const RobotConfig& robot,
                             double roll_angle, DriveMode mode) {
    robot.validate();
    require_fits(network, robot);
    TraversalState state;
    state.time = 0.0;
    state.arc_position = 0.0;
    state.roll_angle = roll_angle;
    refresh(network, robot, state, mode);
    return state;
}

TraversalState step(const PipeNetwork& network, const RobotConfig& robot,
                    const TraversalState& state, double dt, DriveMode mode) {
    if (!(dt > 0.0)) {
        throw std::domain_error("step: dt must be > 0");
    }
    TraversalState next = state;
    next.time = state.time + dt;
    next.arc_position = state.arc_position + robot.input_speed() * dt;
    if (next.arc_position > network.total_length()) {
        next.arc_position = network.total_length();
    }
    refresh(network, robot, next, mode);
    return next;
}

Trace run_scenario(const PipeNetwork& network, const RobotConfig& robot, DriveMode mode,
                   double dt, std::size_t sample_every, double roll_angle, double time_cap) {
    if (!(dt > 0.0)) {
        throw std::domain_error("run_scenario: dt must be > 0");
    }
    if (sample_every == 0) {
        sample_every = 1;
    }
    if (!(robot.input_speed() > 0.0)) {
        throw std::domain_error("run_scenario: input speed must be > 0");
    }

    Trace trace;
    TraversalState state = initial_state(network, robot, roll_angle, mode);
    trace.samples.push_back(sample_state(network, state));

    const double total = network.total_length();
    std::size_t step_count = 0;
    bool sampled_last = true;
    while (state.arc_position < total) {
        if (state.time + dt > time_cap) {
            trace.complete = false;
            break;
        }
        state = step(network, robot, state, dt, mode);
        ++step_count;
        sampled_last = (step_count % sample_every == 0) || state.arc_position >= total;
        if (sampled_last) {
            trace.samples.push_back(sample_state(network, state));
        }
    }
    if (!sampled_last) {
        trace.samples.push_back(sample_state(network, state));
    }
    return trace;
}

std::array<double, 3> slip_distance(const Trace& trace) {
    if (trace.samples.empty()) {
        throw std::domain_error("slip_distance: empty trace");
    }
    std::array<double, 3> distance{0.0, 0.0, 0.0};
    for (std::size_t k = 1; k < trace.samples.size(); ++k) {
        const auto& a = trace.samples[k - 1];
        const auto& b = trace.samples[k];
        const double dt = b.time - a.time;
        for (std::size_t i = 0; i < 3; ++i) {
            distance[i] += 0.5 * (std::abs(a.slip[i]) + std::abs(b.slip[i])) * dt;
        }
    }
    return distance;
}

}  // namespace pipeclimb
