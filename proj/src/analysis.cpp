#include "pipeclimb/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace pipeclimb {

double ape(std::span<const double> simulated, std::span<const double> theoretical) {
    if (simulated.size() != theoretical.size()) {
        throw std::domain_error("ape: series length mismatch");
    }
    if (simulated.empty()) {
        throw std::domain_error("ape: empty series");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < simulated.size(); ++i) {
        if (theoretical[i] == 0.0) {
            throw std::domain_error("ape: theoretical value is zero at sample " +
                                    std::to_string(i));
        }
        sum += std::abs(simulated[i] - theoretical[i]) / std::abs(theoretical[i]);
    }
    return sum / static_cast<double>(simulated.size()) * 100.0;
}

PhaseReport phase_report(const Trace& trace, const PipeNetwork& network) {
    if (trace.samples.empty()) {
        throw std::domain_error("phase_report: empty trace");
    }
    PhaseReport report;
    report.complete = trace.complete;

    const auto& samples = trace.samples;
    const std::size_t first_segment = samples.front().segment;
    const std::size_t last_segment = samples.back().segment;

    // Crossing time of each segment boundary, interpolated between the
    // bracketing samples; s is linear in t so this is exact up to rounding.
    auto crossing_time = [&](double boundary) {
        for (std::size_t j = 1; j < samples.size(); ++j) {
            if (samples[j].arc_position >= boundary) {
                const double s0 = samples[j - 1].arc_position;
                const double s1 = samples[j].arc_position;
                const double t0 = samples[j - 1].time;
                const double t1 = samples[j].time;
                if (s1 == s0) return t1;
                return t0 + (boundary - s0) * (t1 - t0) / (s1 - s0);
            }
        }
        return samples.back().time;
    };

    double entry = samples.front().time;
    for (std::size_t seg = first_segment; seg <= last_segment; ++seg) {
        const double exit = (seg == last_segment)
                                ? samples.back().time
                                : crossing_time(network.segment_start(seg + 1));
        report.phases.push_back({seg, entry, exit});
        entry = exit;
    }
    return report;
}

SummaryReport summarize(const Trace& trace, const PipeNetwork& network) {
    if (trace.samples.empty()) {
        throw std::domain_error("summarize: empty trace");
    }
    SummaryReport report;
    report.phases = phase_report(trace, network);
    report.complete = trace.complete;
    report.slip_distance = slip_distance(trace);

    const std::size_t n = trace.samples.size();
    std::vector<double> commanded(n);
    std::vector<double> required(n);
    report.spring_min = trace.samples.front().spring[0];
    report.spring_max = report.spring_min;
    for (std::size_t i = 0; i < 3; ++i) {
        double lo = trace.samples.front().commanded[i];
        double hi = lo;
        for (std::size_t k = 0; k < n; ++k) {
            const auto& sample = trace.samples[k];
            commanded[k] = sample.commanded[i];
            required[k] = sample.required[i];
            lo = std::min(lo, sample.commanded[i]);
            hi = std::max(hi, sample.commanded[i]);
            report.spring_min = std::min(report.spring_min, sample.spring[i]);
            report.spring_max = std::max(report.spring_max, sample.spring[i]);
        }
        report.speed_envelope[i] = {lo, hi};
        report.track_ape[i] = ape(commanded, required);
    }
    return report;
}

namespace {

std::string num(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

}  // namespace

std::string format_summary(const SummaryReport& report, const std::string& scenario_name,
                           const std::string& mode_name) {
    std::ostringstream out;
    out << "scenario: " << scenario_name << "   mode: " << mode_name << "\n";
    out << "complete: " << (report.complete ? "yes" : "no (time cap reached)") << "\n";
    out << "phases (segment: entry -> exit, seconds):\n";
    for (const auto& phase : report.phases.phases) {
        out << "  " << phase.segment << ": " << num(phase.entry_time) << " -> "
            << num(phase.exit_time) << "\n";
    }
    out << "track   v_min      v_max      APE%        slip_mm\n";
    static const char* kTrack[3] = {"A", "B", "C"};
    for (std::size_t i = 0; i < 3; ++i) {
        char buf[160];
        std::snprintf(buf, sizeof(buf), "%-7s %-10.6g %-10.6g %-11.3e %-10.6g\n", kTrack[i],
                      report.speed_envelope[i].first, report.speed_envelope[i].second,
                      report.track_ape[i], report.slip_distance[i]);
        out << buf;
    }
    out << "spring travel: min " << num(report.spring_min) << " mm, max "
        << num(report.spring_max) << " mm\n";
    return out.str();
}

}  // namespace pipeclimb
