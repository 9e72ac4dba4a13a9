#include "pipeclimb/differential.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace pipeclimb {

void TransmissionConfig::validate() const {
    if (!(overall_ratio > 0.0)) {
        throw std::invalid_argument("transmission overall_ratio must be > 0");
    }
    if (!(loss_factor >= 0.0) || !(loss_factor < 1.0)) {
        throw std::invalid_argument("transmission loss_factor must be in [0, 1)");
    }
}

namespace {

void require_finite(double value, const char* what) {
    if (!std::isfinite(value)) {
        throw std::domain_error(std::string(what) + " must be finite");
    }
}

double mean3(const std::array<double, 3>& v) {
    return (v[0] + v[1] + v[2]) / 3.0;
}

DifferentialSolution make_solution(const TransmissionConfig& cfg, double sprocket_speed,
                                   std::array<double, 3> speeds, double input_torque) {
    DifferentialSolution sol;
    sol.input_speed = sprocket_speed;
    sol.output_speeds = speeds;
    sol.input_torque = input_torque;
    const double branch = input_torque * (1.0 - cfg.loss_factor);
    sol.output_torques = {branch, branch, branch};
    sol.residual = mean3(speeds) - sprocket_speed;
    return sol;
}

}  // namespace

DifferentialSolution solve_unloaded(const TransmissionConfig& cfg, double input_speed,
                                    double input_torque) {
    cfg.validate();
    require_finite(input_speed, "input speed");
    require_finite(input_torque, "input torque");
    const double v = cfg.overall_ratio * input_speed;
    DifferentialSolution sol = make_solution(cfg, v, {v, v, v}, input_torque);
    sol.residual = 0.0;  // outputs equal the input by construction
    return sol;
}

DifferentialSolution solve_with_ratios(const TransmissionConfig& cfg, double input_speed,
                                       const std::array<double, 3>& ratios,
                                       double input_torque) {
    cfg.validate();
    require_finite(input_speed, "input speed");
    require_finite(input_torque, "input torque");
    for (double r : ratios) {
        if (!(r > 0.0) || !std::isfinite(r)) {
            throw std::domain_error("speed ratios must be positive and finite");
        }
    }
    // Summing in value order makes the result independent of the argument
    // order, so permuting the ratios permutes the outputs bit-exactly.
    std::array<double, 3> sorted = ratios;
    std::sort(sorted.begin(), sorted.end());
    const double sum = (sorted[0] + sorted[1]) + sorted[2];
    const double v = cfg.overall_ratio * input_speed;
    std::array<double, 3> speeds{};
    for (std::size_t i = 0; i < 3; ++i) {
        speeds[i] = v * (3.0 * ratios[i] / sum);
    }
    return make_solution(cfg, v, speeds, input_torque);
}

DifferentialSolution solve_fixed_outputs(const TransmissionConfig& cfg, double input_speed,
                                         const std::array<std::optional<double>, 3>& fixed,
                                         double input_torque) {
    cfg.validate();
    require_finite(input_speed, "input speed");
    require_finite(input_torque, "input torque");
    const double v = cfg.overall_ratio * input_speed;

    double fixed_sum = 0.0;
    int unfixed = 0;
    for (const auto& f : fixed) {
        if (f) {
            require_finite(*f, "fixed output speed");
            fixed_sum += *f;
        } else {
            ++unfixed;
        }
    }

    std::array<double, 3> speeds{};
    if (unfixed == 0) {
        // Fully pinned: report the violation through the residual.
        for (std::size_t i = 0; i < 3; ++i) speeds[i] = *fixed[i];
        return make_solution(cfg, v, speeds, input_torque);
    }
    const double share = (3.0 * v - fixed_sum) / static_cast<double>(unfixed);
    for (std::size_t i = 0; i < 3; ++i) {
        speeds[i] = fixed[i] ? *fixed[i] : share;
    }
    return make_solution(cfg, v, speeds, input_torque);
}

std::array<double, 3> torque_split(const TransmissionConfig& cfg, double input_torque) {
    cfg.validate();
    require_finite(input_torque, "input torque");
    const double each = input_torque * (1.0 - cfg.loss_factor) / 3.0;
    return {each, each, each};
}

double power_balance(const DifferentialSolution& sol) {
    const double in = sol.input_speed * sol.input_torque * 3.0;
    double out = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
        out += sol.output_speeds[i] * sol.output_torques[i];
    }
    return in - out;
}

}  // namespace pipeclimb
