#include "pipeclimb/differential.hpp"

#include <doctest.h>

#include <array>
#include <cmath>
#include <random>
#include <stdexcept>

using namespace pipeclimb;

namespace {
const TransmissionConfig kIdeal{};
}

TEST_CASE("solve_unloaded runs all outputs at the input speed") {
    const double v = 350.0 / 9.0;  // vertical reference leg: 350 mm in 9 s
    const DifferentialSolution sol = solve_unloaded(kIdeal, v);
    CHECK(sol.output_speeds == std::array<double, 3>{v, v, v});
    CHECK(sol.residual == 0.0);

    CHECK(solve_unloaded(kIdeal, 0.0).output_speeds == std::array<double, 3>{0.0, 0.0, 0.0});
    CHECK(solve_unloaded(kIdeal, -10.0).output_speeds ==
          std::array<double, 3>{-10.0, -10.0, -10.0});

    CHECK_THROWS_AS(solve_unloaded(kIdeal, std::nan("")), std::domain_error);
}

TEST_CASE("solve_with_ratios distributes speed proportionally") {
    // effective radii at psi = pi, +-pi/3 with R=381, r_c=128
    const std::array<double, 3> radii{253.0, 445.0, 445.0};
    const double v = 38.89;
    const DifferentialSolution sol = solve_with_ratios(kIdeal, v, radii);
    const double sum = 253.0 + 445.0 + 445.0;
    for (int i = 0; i < 3; ++i) {
        CHECK(sol.output_speeds[i] ==
              doctest::Approx(3.0 * v * radii[i] / sum).epsilon(1e-14));
    }
    CHECK(std::abs(sol.output_speeds[0] - 25.83) < 0.02);
    CHECK(std::abs(sol.output_speeds[1] - 45.42) < 0.02);
    CHECK(std::abs(sol.residual) <= 1e-9);

    SUBCASE("unit ratios reduce to the unloaded solution") {
        const DifferentialSolution uniform = solve_with_ratios(kIdeal, v, {1.0, 1.0, 1.0});
        CHECK(uniform.output_speeds == std::array<double, 3>{v, v, v});
    }
    SUBCASE("1:2:3 example") {
        const DifferentialSolution s = solve_with_ratios(kIdeal, 30.0, {1.0, 2.0, 3.0});
        CHECK(s.output_speeds == std::array<double, 3>{15.0, 30.0, 45.0});
    }
    SUBCASE("nonpositive ratios are rejected") {
        CHECK_THROWS_AS(solve_with_ratios(kIdeal, v, {1.0, -1.0, 2.0}), std::domain_error);
        CHECK_THROWS_AS(solve_with_ratios(kIdeal, v, {1.0, 0.0, 2.0}), std::domain_error);
    }
}

TEST_CASE("solve_fixed_outputs shares the remaining speed equally") {
    const DifferentialSolution a =
        solve_fixed_outputs(kIdeal, 38.89, {std::nullopt, 45.42, 45.42});
    CHECK(a.output_speeds[0] == doctest::Approx(25.83).epsilon(1e-12));
    CHECK(std::abs(a.residual) <= 1e-9);

    const DifferentialSolution none = solve_fixed_outputs(kIdeal, 12.5, {});
    CHECK(none.output_speeds == std::array<double, 3>{12.5, 12.5, 12.5});

    const DifferentialSolution two = solve_fixed_outputs(kIdeal, 10.0, {30.0, 0.0, std::nullopt});
    CHECK(two.output_speeds[2] == 0.0);

    SUBCASE("fully fixed reports infeasibility through the residual") {
        const DifferentialSolution full = solve_fixed_outputs(kIdeal, 10.0, {10.0, 10.0, 40.0});
        CHECK(full.output_speeds == std::array<double, 3>{10.0, 10.0, 40.0});
        CHECK(full.residual == doctest::Approx(10.0).epsilon(1e-12));
    }
}

TEST_CASE("torque_split divides the motor torque three ways") {
    CHECK(torque_split(kIdeal, 9.0) == std::array<double, 3>{3.0, 3.0, 3.0});
    CHECK(torque_split(kIdeal, 0.0) == std::array<double, 3>{0.0, 0.0, 0.0});

    TransmissionConfig lossy;
    lossy.loss_factor = 0.1;
    const auto split = torque_split(lossy, 10.0);
    for (double t : split) CHECK(t == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("power balance vanishes for ideal solutions") {
    CHECK(power_balance(solve_unloaded(kIdeal, 20.0, 5.0)) == doctest::Approx(0.0));

    const DifferentialSolution sol = solve_with_ratios(kIdeal, 30.0, {1.0, 2.0, 3.0}, 7.0);
    CHECK(std::abs(power_balance(sol)) <= 1e-9 * std::abs(3.0 * 30.0 * 7.0));

    SUBCASE("an injected residual breaks the balance") {
        DifferentialSolution broken = sol;
        broken.output_speeds[0] += 1.0;  // 1 mm/s constraint violation
        CHECK(std::abs(power_balance(broken)) > 1.0);
    }
}

TEST_CASE("equal torque across outputs when ideal") {
    const DifferentialSolution sol = solve_with_ratios(kIdeal, 14.0, {2.0, 5.0, 9.0}, 11.0);
    CHECK(sol.output_torques[0] == sol.output_torques[1]);
    CHECK(sol.output_torques[1] == sol.output_torques[2]);
}

TEST_CASE("property: sum constraint over random inputs") {
    std::mt19937_64 rng(1234);
    std::uniform_real_distribution<double> speed(-100.0, 100.0);
    std::uniform_real_distribution<double> ratio(0.01, 1000.0);
    for (int k = 0; k < 2000; ++k) {
        const double in = speed(rng);
        const std::array<double, 3> ratios{ratio(rng), ratio(rng), ratio(rng)};
        const DifferentialSolution sol = solve_with_ratios(kIdeal, in, ratios);
        const double mean =
            (sol.output_speeds[0] + sol.output_speeds[1] + sol.output_speeds[2]) / 3.0;
        CHECK(std::abs(mean - in) <= 1e-9 * std::max(1.0, std::abs(in)));
    }
}

TEST_CASE("property: scale equivariance in the input speed") {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> speed(-50.0, 50.0);
    std::uniform_real_distribution<double> ratio(0.1, 10.0);
    for (int k = 0; k < 500; ++k) {
        const double in = speed(rng);
        const std::array<double, 3> ratios{ratio(rng), ratio(rng), ratio(rng)};
        const double scale = std::ldexp(1.0, (k % 9) - 4);  // powers of two scale exactly
        const DifferentialSolution base = solve_with_ratios(kIdeal, in, ratios);
        const DifferentialSolution scaled = solve_with_ratios(kIdeal, scale * in, ratios);
        for (int i = 0; i < 3; ++i) {
            CHECK(scaled.output_speeds[i] == scale * base.output_speeds[i]);
        }
    }
}

TEST_CASE("property: permuting the ratios permutes the outputs bit-exactly") {
    std::mt19937_64 rng(555);
    std::uniform_real_distribution<double> speed(-50.0, 50.0);
    std::uniform_real_distribution<double> ratio(0.01, 100.0);
    constexpr int kPerms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                  {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (int k = 0; k < 500; ++k) {
        const double in = speed(rng);
        const std::array<double, 3> ratios{ratio(rng), ratio(rng), ratio(rng)};
        const DifferentialSolution base = solve_with_ratios(kIdeal, in, ratios);
        const auto& p = kPerms[k % 6];
        const std::array<double, 3> permuted{ratios[p[0]], ratios[p[1]], ratios[p[2]]};
        const DifferentialSolution sol = solve_with_ratios(kIdeal, in, permuted);
        for (int i = 0; i < 3; ++i) {
            CHECK(sol.output_speeds[i] == base.output_speeds[p[i]]);
        }
    }
}

TEST_CASE("property: ratio scale invariance") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> speed(-50.0, 50.0);
    std::uniform_real_distribution<double> ratio(0.01, 100.0);
    std::uniform_real_distribution<double> factor(0.001, 1000.0);
    for (int k = 0; k < 500; ++k) {
        const double in = speed(rng);
        const std::array<double, 3> ratios{ratio(rng), ratio(rng), ratio(rng)};
        const DifferentialSolution base = solve_with_ratios(kIdeal, in, ratios);

        // exact for power-of-two factors
        const double pot = std::ldexp(1.0, (k % 11) - 5);
        const DifferentialSolution exact = solve_with_ratios(
            kIdeal, in, {pot * ratios[0], pot * ratios[1], pot * ratios[2]});
        for (int i = 0; i < 3; ++i) {
            CHECK(exact.output_speeds[i] == base.output_speeds[i]);
        }

        // within rounding for arbitrary factors
        const double c = factor(rng);
        const DifferentialSolution approx =
            solve_with_ratios(kIdeal, in, {c * ratios[0], c * ratios[1], c * ratios[2]});
        for (int i = 0; i < 3; ++i) {
            CHECK(approx.output_speeds[i] ==
                  doctest::Approx(base.output_speeds[i]).epsilon(1e-12));
        }
    }
}

TEST_CASE("overall ratio rescales the sprocket speed") {
    TransmissionConfig geared;
    geared.overall_ratio = 2.0;
    const DifferentialSolution sol = solve_unloaded(geared, 10.0);
    CHECK(sol.input_speed == 20.0);
    CHECK(sol.output_speeds == std::array<double, 3>{20.0, 20.0, 20.0});
}

TEST_CASE("config validation") {
    TransmissionConfig bad;
    bad.overall_ratio = 0.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = TransmissionConfig{};
    bad.loss_factor = 1.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}
