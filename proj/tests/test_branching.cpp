#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>

#include "hawkes/branching.hpp"
#include "hawkes/errors.hpp"
#include "hawkes/harness.hpp"
#include "support/test_helpers.hpp"

using namespace hawkes;
using test_support::scalar_model;

namespace {

// Structural checks every cluster must satisfy: a single root, parents
// preceding children, consistent times, and total birth dominating length.
void check_tree(const Cluster& cluster) {
    REQUIRE(!cluster.events.empty());
    const Event& root = cluster.events.front();
    CHECK(root.index == 1);
    CHECK(root.parent == 0);
    CHECK(root.birth == 0.0);
    CHECK(root.time == cluster.tau);
    CHECK(root.direction == cluster.immigrant_direction);

    double max_time = cluster.tau;
    double birth_sum = 0.0;
    for (std::size_t k = 1; k < cluster.events.size(); ++k) {
        const Event& e = cluster.events[k];
        CHECK(e.index == k + 1);
        CHECK(e.parent >= 1);
        CHECK(e.parent < e.index);
        CHECK(e.birth >= 0.0);
        const Event& parent = cluster.events[e.parent - 1];
        CHECK(e.time == doctest::Approx(parent.time + e.birth).epsilon(1e-12));
        max_time = std::max(max_time, e.time);
        birth_sum += e.birth;
    }
    CHECK(cluster.length == doctest::Approx(max_time - cluster.tau));
    CHECK(cluster.total_birth == doctest::Approx(birth_sum));
    CHECK(cluster.total_birth >= cluster.length - 1e-12);
}

} // namespace

TEST_CASE("zero kernel clusters stop at the immigrant") {
    const ModelParams m = scalar_model(1.0, 0.0, 1.0);
    const EffectiveClusterParams eff = untilted_cluster_params(m);
    RandomStream rng(11, 0);
    for (int k = 0; k < 100; ++k) {
        const Cluster c = generate_cluster(eff, 0, 0.25, rng);
        CHECK(c.events.size() == 1);
        CHECK(c.length == 0.0);
        CHECK(c.total_birth == 0.0);
    }
}

TEST_CASE("mean cluster size matches the branching closed form") {
    // d=1, offspring mean 0.5: total progeny mean 1/(1-0.5) = 2
    {
        const ModelParams m = scalar_model(1.0, 0.5, 1.0);
        const EffectiveClusterParams eff = untilted_cluster_params(m);
        RandomStream rng(22, 0);
        const std::size_t reps = 100'000;
        double sum = 0.0, sumsq = 0.0;
        for (std::size_t k = 0; k < reps; ++k) {
            const auto size = static_cast<double>(generate_cluster(eff, 0, 0.0, rng).events.size());
            sum += size;
            sumsq += size * size;
        }
        const double mean = sum / reps;
        const double sd = std::sqrt(sumsq / reps - mean * mean);
        CHECK(std::abs(mean - 2.0) < 4.0 * sd / std::sqrt(double(reps)));
    }
    // 2-d symmetric from direction 1: row sum of (I-hbar)^{-1} = 8/3 + 4/3 = 4
    {
        const ModelParams m = symmetric_2d_model();
        const EffectiveClusterParams eff = untilted_cluster_params(m);
        RandomStream rng(23, 0);
        const std::size_t reps = 100'000;
        double sum = 0.0, sumsq = 0.0;
        for (std::size_t k = 0; k < reps; ++k) {
            const auto size = static_cast<double>(generate_cluster(eff, 0, 0.0, rng).events.size());
            sum += size;
            sumsq += size * size;
        }
        const double mean = sum / reps;
        const double sd = std::sqrt(sumsq / reps - mean * mean);
        CHECK(std::abs(mean - 4.0) < 4.0 * sd / std::sqrt(double(reps)));
    }
}

TEST_CASE("generated clusters are valid trees with B >= L") {
    const ModelParams m2 = symmetric_2d_model();
    const EffectiveClusterParams eff = untilted_cluster_params(m2);
    RandomStream rng(33, 0);
    for (std::size_t k = 0; k < 50'000; ++k) {
        check_tree(generate_cluster(eff, k % 2, -1.5, rng));
    }
}

TEST_CASE("direct offspring counts follow the configured Poisson law") {
    const ModelParams m = scalar_model(1.0, 0.5, 1.0);
    const EffectiveClusterParams eff = untilted_cluster_params(m);
    RandomStream rng(44, 0);
    std::vector<std::uint64_t> child_counts;
    child_counts.reserve(400'000);
    while (child_counts.size() < 300'000) {
        const Cluster c = generate_cluster(eff, 0, 0.0, rng);
        std::vector<std::uint64_t> per_parent(c.events.size(), 0);
        for (std::size_t k = 1; k < c.events.size(); ++k) {
            per_parent[c.events[k].parent - 1] += 1;
        }
        child_counts.insert(child_counts.end(), per_parent.begin(), per_parent.end());
    }
    const auto gof = test_support::poisson_gof(child_counts, 0.5);
    CHECK(gof.pvalue > 0.001);
}

TEST_CASE("offspring law holds per direction pair") {
    const ModelParams m2 = symmetric_2d_model();
    const EffectiveClusterParams eff = untilted_cluster_params(m2);
    const Matrix h = hbar(m2);
    RandomStream rng(45, 0);
    // counts[l][j]: direction-j children of each direction-l parent
    std::vector<std::uint64_t> counts[2][2];
    std::size_t collected = 0;
    while (collected < 150'000) {
        const Cluster c = generate_cluster(eff, 0, 0.0, rng);
        std::vector<std::uint64_t> per_parent[2];
        per_parent[0].assign(c.events.size(), 0);
        per_parent[1].assign(c.events.size(), 0);
        for (std::size_t k = 1; k < c.events.size(); ++k) {
            per_parent[c.events[k].direction][c.events[k].parent - 1] += 1;
        }
        for (std::size_t k = 0; k < c.events.size(); ++k) {
            const std::size_t l = c.events[k].direction;
            counts[l][0].push_back(per_parent[0][k]);
            counts[l][1].push_back(per_parent[1][k]);
        }
        collected += c.events.size();
    }
    for (std::size_t l = 0; l < 2; ++l) {
        for (std::size_t j = 0; j < 2; ++j) {
            const auto gof = test_support::poisson_gof(counts[l][j], h(l, j));
            CHECK(gof.pvalue > 0.001);
        }
    }
}

TEST_CASE("forward simulation reduces to plain Poisson without excitation") {
    const ModelParams m = scalar_model(3.0, 0.0, 1.0);
    const std::size_t reps = 100'000;
    std::vector<std::uint64_t> counts(reps);
    double sum = 0.0;
    const EffectiveClusterParams eff = untilted_cluster_params(m);
    RandomStream rng(55, 0);
    for (std::size_t r = 0; r < reps; ++r) {
        const PathSample path = simulate_forward(m, eff, 1.0, rng);
        counts[r] = path.times[0].size();
        sum += static_cast<double>(counts[r]);
    }
    const double mean = sum / reps;
    CHECK(std::abs(mean - 3.0) < 4.0 * std::sqrt(3.0 / double(reps)));
    const auto gof = test_support::poisson_gof(counts, 3.0);
    CHECK(gof.pvalue > 0.001);
}

TEST_CASE("forward counts approach the stationary rate after a burn-in") {
    const ModelParams m2 = symmetric_2d_model();
    const WindowTable table = naive_transient_estimate(m2, 7.0, 1.0, 4000, 66, 2);
    const std::size_t last = table.t_start.size() - 1;
    for (std::size_t j = 0; j < 2; ++j) {
        CHECK(std::abs(table.mean(last, j) - 4.0) < table.ci_halfwidth(last, j));
    }
    // early windows sit visibly below the stationary rate
    CHECK(table.mean(0, 0) < 4.0);
    CHECK(table.mean(0, 1) < 4.0);
}

TEST_CASE("window table is flat for a plain Poisson model") {
    const ModelParams m = scalar_model(2.0, 0.0, 1.0);
    const WindowTable table = naive_transient_estimate(m, 5.0, 1.0, 3000, 77, 2);
    for (std::size_t w = 0; w < table.t_start.size(); ++w) {
        CHECK(std::abs(table.mean(w, 0) - 2.0) < table.ci_halfwidth(w, 0));
    }
}

TEST_CASE("window must divide the horizon") {
    const ModelParams m = scalar_model(2.0, 0.0, 1.0);
    CHECK_THROWS_AS(naive_transient_estimate(m, 1.0, 0.3, 10, 1, 1), ConfigError);
}

TEST_CASE("cluster cap trips on a supercritical offspring law") {
    const ModelParams m = scalar_model(1.0, 0.5, 1.0);
    EffectiveClusterParams runaway = untilted_cluster_params(m);
    runaway.offspring_means(0, 0) = 5.0; // force an exploding tree
    RandomStream rng(88, 0);
    CHECK_THROWS_AS(generate_cluster(runaway, 0, 0.0, rng,
                                     std::numeric_limits<double>::infinity(), 2000),
                    ClusterSizeCapError);
}

TEST_CASE("untilted parameters refuse unstable models") {
    CHECK_THROWS_AS(untilted_cluster_params(scalar_model(1.0, 2.0, 1.0)),
                    UnstableModelError);
}
