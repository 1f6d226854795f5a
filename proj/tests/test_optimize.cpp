#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hawkes/errors.hpp"
#include "hawkes/harness.hpp"
#include "hawkes/optimize.hpp"
#include "hawkes/tilt.hpp"
#include "support/test_helpers.hpp"

using namespace hawkes;
using test_support::scalar_model;

TEST_CASE("symmetric 2-d model: tuned tilt matches the reference") {
    const ModelParams params = symmetric_2d_model();
    const OptimizeResult result = optimize_eta(params, 1e-4);
    CHECK(std::abs(result.eta_star[0] - 0.0664) < 5e-4);
    CHECK(std::abs(result.eta_star[1] - 0.0664) < 5e-4);
    // symmetric model => symmetric minimizer
    CHECK(std::abs(result.eta_star[0] - result.eta_star[1]) < 1e-4);
    CHECK(result.boundary[0] == "interior");
    // no grid point of the reference sweep beats the tuned cost
    CHECK(result.X_at_eta_star <= 258.5722);
    CHECK(result.theta0[0] > 0.09);
}

TEST_CASE("5-d model: tuned tilt matches the reference vector") {
    const OptimizeResult result = optimize_eta(asymmetric_5d_model(), 1e-4);
    const std::vector<double> expected = {0.1234, 0.1306, 0.1405, 0.1234, 0.1378};
    for (std::size_t i = 0; i < expected.size(); ++i) {
        CHECK(std::abs(result.eta_star[i] - expected[i]) < 5e-4);
    }
}

TEST_CASE("tuned point is a local minimum along every coordinate") {
    const ModelParams params = symmetric_2d_model();
    const double tol = 1e-4;
    const OptimizeResult result = optimize_eta(params, tol);
    const double base = complexity_X(params, result.eta_star);
    for (std::size_t i = 0; i < result.eta_star.size(); ++i) {
        for (const double sign : {-1.0, 1.0}) {
            std::vector<double> probe = result.eta_star;
            probe[i] += sign * 10.0 * tol;
            CHECK(base <= complexity_X(params, probe) + 1e-9);
        }
    }
}

TEST_CASE("monotone cost pushes the minimizer to the upper bracket end") {
    // no excitation: the cost is 2*lambda0/eta, strictly decreasing on (0, beta)
    const ModelParams m = scalar_model(1.0, 0.0, 1.0);
    CHECK(complexity_X(m, {0.5}) == doctest::Approx(4.0).epsilon(1e-9));
    const OptimizeResult result = optimize_eta(m, 1e-4);
    CHECK(result.eta_star[0] > 1.0 - 1e-6 - 2e-4);
    CHECK(result.boundary[0] == "upper");
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(optimize_eta(symmetric_2d_model(), 0.0), std::invalid_argument);
    CHECK_THROWS_AS(optimize_eta(scalar_model(1.0, 2.0, 1.0), 1e-4),
                    UnstableModelError);
}
