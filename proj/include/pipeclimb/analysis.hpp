#pragma once

#include "pipeclimb/pipe_geometry.hpp"
#include "pipeclimb/traversal.hpp"

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pipeclimb {

/// Average percentage error: mean over samples of |sim - theory| / |theory|
/// * 100. Requires equal, nonzero lengths and nonzero theoretical values.
double ape(std::span<const double> simulated, std::span<const double> theoretical);

struct PhaseEntry {
    std::size_t segment = 0;
    double entry_time = 0.0;  // s
    double exit_time = 0.0;   // s
};

struct PhaseReport {
    std::vector<PhaseEntry> phases;  // contiguous, covering [0, completion]
    bool complete = true;
};

/// Per-segment entry/exit times recovered from the trace. Junction crossing
/// times are interpolated between the bracketing samples (the arc position
/// is linear in time, so this is exact up to rounding). An incomplete trace
/// yields a flagged report over the segments actually reached.
PhaseReport phase_report(const Trace& trace, const PipeNetwork& network);

struct SummaryReport {
    PhaseReport phases;
    std::array<std::pair<double, double>, 3> speed_envelope{};  // per-track (min, max) mm/s
    std::array<double, 3> track_ape{};                          // percent, commanded vs required
    std::array<double, 3> slip_distance{};                      // mm
    double spring_min = 0.0;                                    // mm
    double spring_max = 0.0;                                    // mm
    bool complete = true;
};

/// Collects the per-run report: phase times, speed envelopes, APE of the
/// commanded (simulated) against the required (theoretical) speeds, slip
/// distances and the spring travel range.
SummaryReport summarize(const Trace& trace, const PipeNetwork& network);

/// Human-readable rendering, one block per run.
std::string format_summary(const SummaryReport& report, const std::string& scenario_name,
                           const std::string& mode_name);

}  // namespace pipeclimb
