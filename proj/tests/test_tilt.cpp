#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hawkes/branching.hpp"
#include "hawkes/errors.hpp"
#include "hawkes/harness.hpp"
#include "hawkes/tilt.hpp"
#include "support/test_helpers.hpp"

using namespace hawkes;
using test_support::scalar_model;

TEST_CASE("zero tilt solves to the zero vector exactly") {
    for (const ModelParams& params : {symmetric_2d_model(), asymmetric_5d_model()}) {
        const TiltSolution sol = solve_psi_B(params, 0.0);
        REQUIRE(sol.feasible);
        for (const double v : sol.psi_B) CHECK(v == 0.0);
        CHECK(sol.h_tilde == hbar(params));
    }
    // with no tilt the mean cluster sizes are the untilted row sums
    const TiltSolution sol = solve_psi_B(symmetric_2d_model(), 0.0);
    CHECK(sol.s_tilde_rowsums[0] == doctest::Approx(4.0).epsilon(1e-10));
    CHECK(sol.s_tilde_rowsums[1] == doctest::Approx(4.0).epsilon(1e-10));
}

TEST_CASE("scalar solve agrees with an independent bisection oracle") {
    const ModelParams m = scalar_model(1.0, 1.0, 2.0); // hbar = 0.5
    const TiltSolution sol = solve_psi_B(m, 0.1);
    REQUIRE(sol.feasible);
    const double oracle = test_support::scalar_psi_b_root(0.5, 2.0, 0.1);
    CHECK(std::abs(sol.psi_B[0] - oracle) < 1e-10);
    // frozen value of the same root, for drift protection
    CHECK(sol.psi_B[0] == doctest::Approx(0.0574230196561).epsilon(1e-9));
}

TEST_CASE("solution satisfies the fixed-point system to 1e-12") {
    const ModelParams params = asymmetric_5d_model();
    for (const double theta : {0.02, 0.08, 0.15}) {
        const TiltSolution sol = solve_psi_B(params, theta);
        REQUIRE(sol.feasible);
        const Matrix h = hbar(params);
        for (std::size_t i = 0; i < params.dim(); ++i) {
            double rhs = 0.0;
            for (std::size_t j = 0; j < params.dim(); ++j) {
                rhs += h(i, j) *
                       (std::exp(psi_f(params, i, j, theta) + sol.psi_B[j]) - 1.0);
            }
            CHECK(std::abs(sol.psi_B[i] - rhs) < 1e-12);
        }
    }
}

TEST_CASE("psi_B grows with the tilt") {
    const ModelParams params = symmetric_2d_model();
    std::vector<double> previous(params.dim(), -1.0);
    for (double theta = 0.0; theta <= 0.09; theta += 0.005) {
        const TiltSolution sol = solve_psi_B(params, theta);
        REQUIRE(sol.feasible);
        for (std::size_t i = 0; i < params.dim(); ++i) {
            CHECK(sol.psi_B[i] >= previous[i]);
            previous[i] = sol.psi_B[i];
        }
    }
}

TEST_CASE("the complexity formula reproduces the reference values") {
    const ModelParams m2 = symmetric_2d_model();
    const std::vector<std::pair<double, double>> rows = {
        {0.03, 395.3016}, {0.05, 279.6228}, {0.06, 260.4849},
        {0.07, 258.5722}, {0.08, 280.3890}, {0.09, 372.1390}};
    for (const auto& [eta, expected] : rows) {
        CHECK(std::abs(complexity_X(m2, {eta, eta}) - expected) < 1e-3);
    }

    const ModelParams m5 = asymmetric_5d_model();
    const double x5 = complexity_X(m5, {0.1234, 0.1306, 0.1405, 0.1234, 0.1378});
    CHECK(std::abs(x5 - 56.8234) < 1e-2);
}

TEST_CASE("tilting inflates the offspring means but keeps them subcritical") {
    const ModelParams params = symmetric_2d_model();
    const TiltSolution sol = solve_psi_B(params, 0.0664);
    REQUIRE(sol.feasible);
    const Matrix h = hbar(params);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) CHECK(sol.h_tilde(i, j) >= h(i, j));
    const EffectiveClusterParams eff = tilted_cluster_params(params, sol);
    CHECK(eff.spectral_radius < 1.0);
    CHECK(eff.eta == doctest::Approx(0.0664));
}

TEST_CASE("tilted offspring mean matches a Monte Carlo oracle (d=1)") {
    const ModelParams m = scalar_model(1.0, 1.0, 2.0); // hbar = 0.5
    const double eta = 0.1;
    const TiltSolution sol = solve_psi_B(m, eta);
    REQUIRE(sol.feasible);
    const double expected_mean =
        0.5 * std::exp(psi_f(m, 0, 0, eta) + sol.psi_B[0]);
    CHECK(sol.h_tilde(0, 0) == doctest::Approx(expected_mean).epsilon(1e-12));

    const EffectiveClusterParams eff = tilted_cluster_params(m, sol);
    RandomStream rng(99, 0);
    const std::size_t reps = 1'000'000;
    double sum = 0.0, sumsq = 0.0;
    double size_sum = 0.0, size_sumsq = 0.0;
    for (std::size_t r = 0; r < reps; ++r) {
        const Cluster c = generate_cluster(eff, 0, 0.0, rng);
        std::uint64_t root_children = 0;
        for (std::size_t k = 1; k < c.events.size(); ++k) {
            if (c.events[k].parent == 1) ++root_children;
        }
        sum += static_cast<double>(root_children);
        sumsq += static_cast<double>(root_children) * root_children;
        size_sum += static_cast<double>(c.events.size());
        size_sumsq += static_cast<double>(c.events.size()) * c.events.size();
    }
    const double mc_mean = sum / reps;
    const double mc_sd = std::sqrt(sumsq / reps - mc_mean * mc_mean);
    CHECK(std::abs(mc_mean - expected_mean) < 4.0 * mc_sd / std::sqrt(double(reps)));

    // mean tilted-cluster size against the row-sum solve
    const double size_mean = size_sum / reps;
    const double size_sd = std::sqrt(size_sumsq / reps - size_mean * size_mean);
    CHECK(std::abs(size_mean - sol.s_tilde_rowsums[0]) <
          4.0 * size_sd / std::sqrt(double(reps)));
}

TEST_CASE("tilted cluster size matches the row sums (2-d)") {
    const ModelParams params = symmetric_2d_model();
    const TiltSolution sol = solve_psi_B(params, 0.0664);
    REQUIRE(sol.feasible);
    const EffectiveClusterParams eff = tilted_cluster_params(params, sol);
    RandomStream rng(111, 0);
    const std::size_t reps = 200'000;
    double sum = 0.0, sumsq = 0.0;
    for (std::size_t r = 0; r < reps; ++r) {
        const auto size = static_cast<double>(generate_cluster(eff, 0, 0.0, rng).events.size());
        sum += size;
        sumsq += size * size;
    }
    const double mean = sum / reps;
    const double sd = std::sqrt(sumsq / reps - mean * mean);
    CHECK(std::abs(mean - sol.s_tilde_rowsums[0]) < 4.0 * sd / std::sqrt(double(reps)));
}

TEST_CASE("psi_B matches the log of the empirical m.g.f. of total birth") {
    const ModelParams params = symmetric_2d_model();
    const double theta = 0.04;
    const TiltSolution sol = solve_psi_B(params, theta);
    REQUIRE(sol.feasible);
    const EffectiveClusterParams eff = untilted_cluster_params(params);
    RandomStream rng(123, 0);
    const std::size_t reps = 1'000'000;
    double sum = 0.0, sumsq = 0.0;
    for (std::size_t r = 0; r < reps; ++r) {
        const double w = std::exp(theta * generate_cluster(eff, 0, 0.0, rng).total_birth);
        sum += w;
        sumsq += w * w;
    }
    const double mean = sum / reps;
    const double sd = std::sqrt(sumsq / reps - mean * mean);
    // delta method: se(log mean) = se(mean)/mean
    const double se_log = sd / (mean * std::sqrt(double(reps)));
    CHECK(std::abs(std::log(mean) - sol.psi_B[0]) < 4.0 * se_log);
}

TEST_CASE("feasibility boundary detection") {
    // no excitation: only the birth c.g.f. constrains, boundary = min beta
    {
        const ModelParams m = scalar_model(1.0, 0.0, 1.0);
        const std::vector<double> t0 = theta0_upper(m);
        CHECK(std::abs(t0[0] - 1.0) < 2e-6);
    }
    // the 2-d reference grid runs to 0.09, so the boundary lies above it
    {
        const std::vector<double> t0 = theta0_upper(symmetric_2d_model());
        CHECK(t0[0] > 0.09);
        CHECK(t0[0] == t0[1]);
        CHECK(solve_psi_B(symmetric_2d_model(), 0.09).feasible);
    }
    // scalar case: boundary equals the oracle's critical point (= 2 - sqrt(e))
    {
        const ModelParams m = scalar_model(1.0, 1.0, 2.0);
        const std::vector<double> t0 = theta0_upper(m);
        const double oracle = test_support::scalar_theta0_root(0.5, 2.0);
        CHECK(std::abs(t0[0] - oracle) < 1e-4);
        CHECK(std::abs(t0[0] - (2.0 - std::sqrt(std::exp(1.0)))) < 1e-4);
    }
}

TEST_CASE("solver flags infeasible tilts instead of looping") {
    const ModelParams m = scalar_model(1.0, 1.0, 2.0); // boundary ~ 0.3513
    CHECK_FALSE(solve_psi_B(m, 0.5).feasible);
    CHECK_THROWS_AS(tilted_cluster_params(m, solve_psi_B(m, 0.5)), InfeasibleTiltError);
    CHECK_THROWS_AS(complexity_X(m, {0.5}), InfeasibleTiltError);
    CHECK_THROWS_AS(solve_psi_B(m, 2.0), TiltTooLargeError);
    CHECK_THROWS_AS(solve_psi_B(m, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(complexity_X(m, {0.0}), std::invalid_argument);
    CHECK_THROWS_AS(complexity_X(m, {0.1, 0.1}), DimensionMismatchError);
}

TEST_CASE("per-coordinate cost is numerically convex and blows up at zero") {
    const ModelParams params = symmetric_2d_model();
    TiltCache cache(params);
    std::vector<double> grid, values;
    for (double t = 0.005; t <= 0.095; t += 0.005) {
        grid.push_back(t);
        const TiltSolution& sol = cache.at(t);
        REQUIRE(sol.feasible);
        values.push_back(params.lambda0[0] * std::exp(sol.psi_B[0]) / t *
                         (1.0 + sol.s_tilde_rowsums[0]));
    }
    for (std::size_t k = 1; k + 1 < values.size(); ++k) {
        CHECK(values[k + 1] - 2.0 * values[k] + values[k - 1] >= -1e-8);
    }

    const double near_zero = complexity_X(params, {1e-4, 1e-4});
    const double at_star = complexity_X(params, {0.0664, 0.0664});
    CHECK(near_zero > 10.0 * at_star);
}
