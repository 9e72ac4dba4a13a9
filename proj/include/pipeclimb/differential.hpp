#pragma once

#include <array>
#include <optional>

// Single-input, three-output differential gear train reduced to its two
// junction equations: the mean of the output speeds equals the (geared)
// input speed, and the three outputs carry equal torque when ideal.

namespace pipeclimb {

struct TransmissionConfig {
    // Output linear speed at the sprocket per unit input speed. Defaults to 1
    // so "input speed" means "nominal track speed"; the motor-side value is
    // recoverable by dividing by overall_ratio.
    double overall_ratio = 1.0;
    // Lumped torque efficiency loss, in [0, 1). The train is ideal by default.
    double loss_factor = 0.0;

    void validate() const;  // throws std::invalid_argument

    bool operator==(const TransmissionConfig&) const = default;
};

// Torque fields use the per-branch (junction) scale: input_torque is the
// common ring-gear effort, and each output carries input_torque*(1-loss).
// Input power is therefore input_speed * input_torque * 3, which the sum
// constraint balances exactly against the summed output power. For mapping
// a total motor torque onto the three tracks, see torque_split.
struct DifferentialSolution {
    double input_speed = 0.0;                        // mm/s, sprocket scale
    std::array<double, 3> output_speeds{};           // mm/s, tracks A, B, C
    double input_torque = 0.0;                       // N*mm, per-branch junction torque
    std::array<double, 3> output_torques{};          // N*mm
    double residual = 0.0;                           // mm/s, mean(outputs) - input_speed
};

/// No load: all three outputs run at the (geared) input speed; residual is 0.
DifferentialSolution solve_unloaded(const TransmissionConfig& cfg, double input_speed,
                                    double input_torque = 0.0);

/// Speeds distributed proportionally to the given positive ratios:
/// v_i = 3 * input * ratio_i / sum(ratios). The sum constraint holds by
/// construction. Ratios are summed in value order so that permuting them
/// permutes the outputs bit-exactly.
DifferentialSolution solve_with_ratios(const TransmissionConfig& cfg, double input_speed,
                                       const std::array<double, 3>& ratios,
                                       double input_torque = 0.0);

/// 0-2 outputs pinned to given speeds; the unfixed outputs share the
/// remaining speed equally. With all three fixed the outputs are taken as
/// given and the residual reports the constraint violation instead of
/// raising.
DifferentialSolution solve_fixed_outputs(const TransmissionConfig& cfg, double input_speed,
                                         const std::array<std::optional<double>, 3>& fixed,
                                         double input_torque = 0.0);

/// Total motor torque mapped onto the three tracks: each output receives
/// input_torque * (1 - loss_factor) / 3, expressed at sprocket scale.
std::array<double, 3> torque_split(const TransmissionConfig& cfg, double input_torque);

/// Input power minus summed output power, in consistent units
/// (mm/s * N*mm). Zero for ideal (loss_factor = 0) solutions.
double power_balance(const DifferentialSolution& sol);

}  // namespace pipeclimb
