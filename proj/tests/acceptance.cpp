// Acceptance suite for the shipped guarantees. Each criterion prints one
// [PASS]/[FAIL] line; the exit code is the number of failures.

#include "pipeclimb/analysis.hpp"
#include "pipeclimb/contact.hpp"
#include "pipeclimb/differential.hpp"
#include "pipeclimb/pipe_geometry.hpp"
#include "pipeclimb/scenario.hpp"
#include "pipeclimb/trace_io.hpp"
#include "pipeclimb/traversal.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <random>
#include <string>
#include <vector>

using namespace pipeclimb;
using std::numbers::pi;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& label, const std::string& detail) {
    std::printf("[%s] criterion %d: %s%s%s\n", pass ? "PASS" : "FAIL", criterion, label.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!pass) ++g_failures;
}

std::string num(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

struct ReferenceRun {
    Scenario scenario;
    Trace differential;
    Trace rigid;
    double differential_seconds = 0.0;
};

Trace timed_run(const Scenario& sc, DriveMode mode, double* seconds) {
    const auto t0 = std::chrono::steady_clock::now();
    Trace trace = run_scenario(sc.network, sc.robot, mode, sc.run.dt, sc.run.sample_every,
                               sc.run.roll_angle, sc.run.time_cap);
    const auto t1 = std::chrono::steady_clock::now();
    if (seconds) {
        *seconds = std::chrono::duration<double>(t1 - t0).count();
    }
    return trace;
}

// 1. Zero slip in Differential mode across the orientation gallery, with the
//    runtime bound.
void criterion_1(const std::vector<ReferenceRun>& runs) {
    bool pass = true;
    double worst_slip = 0.0;
    double worst_time = 0.0;
    for (const auto& run : runs) {
        if (!run.differential.complete) pass = false;
        const auto dist = slip_distance(run.differential);
        for (double d : dist) {
            worst_slip = std::max(worst_slip, std::abs(d));
            if (std::abs(d) > 1e-6) pass = false;
        }
        worst_time = std::max(worst_time, run.differential_seconds);
        if (run.differential_seconds >= 1.0) pass = false;
    }
    report(1, pass, "differential mode slips nowhere in the reference gallery",
           "max |slip distance| " + num(worst_slip) + " mm (<= 1e-6), slowest run " +
               num(worst_time) + " s (< 1)");
}

// 2. The rigid baseline slips in every bend-containing run: every track with
//    bend-plane exposure accumulates > 10 mm, inner tracks drag (positive
//    slip), outer tracks brake (negative). Tracks on the neutral axis
//    (cos psi == 0, as in the 90 degree roll scenario) have nothing to slip
//    against and are exempt.
void criterion_2(const std::vector<ReferenceRun>& runs) {
    bool pass = true;
    double min_exposed = 1e300;
    int neutral_tracks = 0;
    for (const auto& run : runs) {
        const auto dist = slip_distance(run.rigid);
        const double theta = run.scenario.run.roll_angle;
        const auto& angles = run.scenario.robot.module_angles;
        for (int i = 0; i < 3; ++i) {
            const double exposure = std::cos(theta + angles[i]);
            if (std::abs(exposure) < 1e-12) {
                ++neutral_tracks;
                continue;
            }
            min_exposed = std::min(min_exposed, dist[i]);
            if (!(dist[i] > 10.0)) pass = false;
        }
        // sign structure: check a mid-bend sample
        for (const auto& sample : run.rigid.samples) {
            const auto& segment = run.scenario.network.segments()[sample.segment];
            if (!std::holds_alternative<BendSegment>(segment)) continue;
            for (int i = 0; i < 3; ++i) {
                const double exposure = std::cos(theta + angles[i]);
                if (exposure < -1e-12 && !(sample.slip[i] > 0.0)) pass = false;  // inner drags
                if (exposure > 1e-12 && !(sample.slip[i] < 0.0)) pass = false;   // outer brakes
            }
        }
    }
    report(2, pass, "rigid drive slips and drags through every bend",
           "min exposed-track slip distance " + num(min_exposed) + " mm (> 10), " +
               std::to_string(neutral_tracks) + " neutral track(s) exempt");
}

// 3. Timeline reproduction on the reference scenario.
void criterion_3(const ReferenceRun& reference) {
    const double dt = reference.scenario.run.dt;
    const PhaseReport report_ = phase_report(reference.differential, reference.scenario.network);
    bool pass = report_.complete && report_.phases.size() == 4;
    double t1 = 0.0, t2 = 0.0, done = 0.0;
    if (pass) {
        t1 = report_.phases[0].exit_time;
        t2 = report_.phases[1].exit_time;
        done = report_.phases[3].exit_time;
        if (std::abs(t1 - 9.0) > 2.0 * dt) pass = false;
        if (std::abs(t2 - 24.0) > 2.0 * dt) pass = false;
        if (done < 59.0 - 2.0 * dt || done > 60.0 + 2.0 * dt) pass = false;
    }
    report(3, pass, "phase transitions land on the 9 s / 24 s / 59-60 s timeline",
           "elbow entry " + num(t1) + " s, elbow exit " + num(t2) + " s, completion " +
               num(done) + " s");
}

// 4. Differential sum constraint plus exact scale/permutation equivariance.
void criterion_4() {
    const TransmissionConfig ideal{};
    std::mt19937_64 rng(20260810);
    std::uniform_real_distribution<double> speed(-100.0, 100.0);
    std::uniform_real_distribution<double> ratio(0.01, 1000.0);
    constexpr int kPerms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                  {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    bool pass = true;
    double worst = 0.0;
    for (int k = 0; k < 10000; ++k) {
        const double in = speed(rng);
        const std::array<double, 3> ratios{ratio(rng), ratio(rng), ratio(rng)};
        const DifferentialSolution sol = solve_with_ratios(ideal, in, ratios);
        const double mean =
            (sol.output_speeds[0] + sol.output_speeds[1] + sol.output_speeds[2]) / 3.0;
        const double err = std::abs(mean - in);
        worst = std::max(worst, err);
        if (err > 1e-9 * std::max(1.0, std::abs(in))) pass = false;

        const double scale = std::ldexp(1.0, (k % 9) - 4);
        const DifferentialSolution scaled = solve_with_ratios(ideal, scale * in, ratios);
        const auto& p = kPerms[k % 6];
        const DifferentialSolution permuted =
            solve_with_ratios(ideal, in, {ratios[p[0]], ratios[p[1]], ratios[p[2]]});
        for (int i = 0; i < 3; ++i) {
            if (scaled.output_speeds[i] != scale * sol.output_speeds[i]) pass = false;
            if (permuted.output_speeds[i] != sol.output_speeds[p[i]]) pass = false;
        }
    }
    report(4, pass, "sum constraint and equivariances over 10000 random solves",
           "max |mean - input| " + num(worst));
}

// 5. The three effective radii at 120 degree spacing average to R.
void criterion_5() {
    std::mt19937_64 rng(5u);
    std::uniform_real_distribution<double> radius(10.0, 5000.0);
    std::uniform_real_distribution<double> frac(0.001, 0.999);
    std::uniform_real_distribution<double> angle(-8.0, 8.0);
    bool pass = true;
    double worst = 0.0;
    for (int k = 0; k < 1000; ++k) {
        const double R = radius(rng);
        const double rc = frac(rng) * R;
        const double psi = angle(rng);
        const BendSegment bend{.bend_radius = R, .bend_angle = 1.0};
        const double mean = (effective_radius(bend, psi, rc) +
                             effective_radius(bend, psi + 2.0 * pi / 3.0, rc) +
                             effective_radius(bend, psi + 4.0 * pi / 3.0, rc)) /
                            3.0;
        const double rel = std::abs(mean - R) / R;
        worst = std::max(worst, rel);
        if (rel > 1e-9) pass = false;
    }
    report(5, pass, "effective radii at 120 degree spacing average to the bend radius",
           "max relative deviation " + num(worst));
}

// 6. End-to-end APE of commanded vs required speeds in Differential mode.
void criterion_6(const std::vector<ReferenceRun>& runs) {
    bool pass = true;
    double worst = 0.0;
    for (const auto& run : runs) {
        const SummaryReport summary = summarize(run.differential, run.scenario.network);
        for (double a : summary.track_ape) {
            worst = std::max(worst, a);
            if (!(a <= 0.01)) pass = false;
        }
    }
    report(6, pass, "differential-mode APE beats the 0.01% bound on all scenarios",
           "worst track APE " + num(worst) + "%");
}

// 7. Force relations against a brute-force oracle. The mu*N/9 rule is checked
//    bit-exactly against the verbatim formula; its *9 round-trip is checked
//    to 1 ulp (exact equality after /9*9 is not attainable in binary FP for
//    arbitrary inputs).
void criterion_7() {
    std::mt19937_64 rng(77u);
    std::uniform_real_distribution<double> length(0.1, 100.0);
    std::uniform_real_distribution<double> force(0.0, 100.0);
    std::uniform_real_distribution<double> mu_dist(0.0, 2.0);
    bool pass = true;
    double worst = 0.0;
    for (int k = 0; k < 1000; ++k) {
        const double ao = length(rng);
        const double oc = length(rng);
        const double n = force(rng);
        const double mu = mu_dist(rng);

        const double h = holding_force(n, mu, contact_angle(ao, oc));
        const double oracle = n * (1.0 + mu) * std::sin(std::atan(ao / oc));
        const double err = std::abs(h - oracle);
        worst = std::max(worst, err);
        if (err > 1e-12) pass = false;

        const double rule = spring_stiffness_rule(mu, n);
        if (rule != mu * n / 9.0) pass = false;
        const double back = rule * 9.0;
        const double target = mu * n;
        const double ulp = std::nextafter(target, 1e300) - target;
        if (std::abs(back - target) > ulp) pass = false;

        const double angle = std::atan(ao / oc);
        if (holding_force(n, 0.0, angle) != n * std::sin(angle)) pass = false;
    }
    report(7, pass, "holding force, contact angle and stiffness rule match the oracle",
           "max |holding force - oracle| " + num(worst));
}

// 8. Spring travel stays inside the stops with the stock preload, and a
//    15 mm preload trips the travel limit with the module named.
void criterion_8(const std::vector<ReferenceRun>& runs) {
    bool pass = true;
    double lo = 1e300, hi = -1e300;
    for (const auto& run : runs) {
        for (const auto& sample : run.differential.samples) {
            for (double c : sample.spring) {
                lo = std::min(lo, c);
                hi = std::max(hi, c);
                if (c < 3.5 - 1e-9 || c > 6.5 + 1e-9) pass = false;
            }
        }
    }

    std::string named = "(no error)";
    bool threw = false;
    const ReferenceRun& base = runs.front();
    RobotConfig tight = base.scenario.robot;
    tight.spring.preload_compression = 15.0;
    try {
        // roll pi/3 puts module B fully inboard: 15 + 1.5 exceeds the stop
        run_scenario(base.scenario.network, tight, DriveMode::Differential,
                     base.scenario.run.dt, 100, pi / 3.0, base.scenario.run.time_cap);
    } catch (const TravelLimitError& e) {
        threw = true;
        named = e.module();
        if (named.empty()) pass = false;
    }
    if (!threw) pass = false;
    report(8, pass, "spring travel bounded in [3.5, 6.5] and the 15 mm preload trips the stop",
           "range [" + num(lo) + ", " + num(hi) + "] mm; travel error names module " + named);
}

// 9. Bit-identical CSV exports across repeated runs.
void criterion_9(const std::vector<ReferenceRun>& runs) {
    bool pass = true;
    for (const auto& run : runs) {
        for (DriveMode mode : {DriveMode::Differential, DriveMode::RigidDrive}) {
            const Trace again = timed_run(run.scenario, mode, nullptr);
            const Trace& first =
                mode == DriveMode::Differential ? run.differential : run.rigid;
            if (trace_to_csv(first) != trace_to_csv(again)) pass = false;
        }
    }
    report(9, pass, "repeated runs export byte-identical CSV", "");
}

}  // namespace

int main(int argc, char** argv) {
    const std::string dir = argc > 1 ? argv[1] : "scenarios";
    const char* files[] = {"reference.scn", "reference_roll60.scn", "reference_roll90.scn"};

    std::vector<ReferenceRun> runs;
    try {
        for (const char* file : files) {
            ReferenceRun run{load_scenario(dir + "/" + file), {}, {}, 0.0};
            run.differential = timed_run(run.scenario, DriveMode::Differential,
                                         &run.differential_seconds);
            run.rigid = timed_run(run.scenario, DriveMode::RigidDrive, nullptr);
            runs.push_back(std::move(run));
        }
    } catch (const std::exception& e) {
        std::cerr << "setup failed: " << e.what() << "\n";
        return 99;
    }

    criterion_1(runs);
    criterion_2(runs);
    criterion_3(runs.front());
    criterion_4();
    criterion_5();
    criterion_6(runs);
    criterion_7();
    criterion_8(runs);
    criterion_9(runs);

    std::printf("%d of 9 criteria passed\n", 9 - g_failures);
    return g_failures;
}
