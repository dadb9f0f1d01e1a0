#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "distsketch/apsum.hpp"
#include "distsketch/errors.hpp"
#include "distsketch/oracle.hpp"
#include "distsketch/rng.hpp"
#include "test_support.hpp"

using namespace distsketch;
using namespace testsupport;

TEST_CASE("half-sum of estimates") {
    EstimateVector p3est;
    p3est.w_hat = {3.0, 2.0, 3.0};
    CHECK(aps_from_estimates(p3est) == 4.0);

    EstimateVector pair;
    pair.w_hat = {5.0, 5.0};
    CHECK(aps_from_estimates(pair) == 5.0);
}

TEST_CASE("full sample reproduces the exact all-pairs sum") {
    auto space = random_graph(100, 0.06, 8);
    WeightedSample s;
    for (NodeId v = 0; v < 100; ++v) s.entries.push_back({v, 1.0});
    auto est = estimate_all_nodes(space, s);
    CHECK(aps_from_estimates(est) == doctest::Approx(oracle::exact_aps(space)).epsilon(1e-9));
}

TEST_CASE("rough sums anchored on the path center") {
    auto space = p3();
    auto rho = compute_rho(space, 1);
    CHECK(rho.w_rough == std::vector<double>{5.0, 2.0, 5.0});
    CHECK(rho.rho[0] == doctest::Approx(5.0 / 12.0));
    CHECK(rho.rho[1] == doctest::Approx(1.0 / 6.0));
    CHECK(rho.rho[2] == doctest::Approx(5.0 / 12.0));

    auto exact = oracle::exact_w_all(space);
    for (int u = 0; u < 3; ++u) {
        CHECK(rho.w_rough[static_cast<std::size_t>(u)] >=
              exact[static_cast<std::size_t>(u)] - 1e-12);
        CHECK(rho.w_rough[static_cast<std::size_t>(u)] <=
              7.0 * exact[static_cast<std::size_t>(u)] + 1e-12);
    }
}

TEST_CASE("degenerate anchor is rejected") {
    std::vector<double> zeros(9, 0.0);
    DistanceSpace degenerate(PointSet::from_matrix_unchecked(3, std::move(zeros)));
    CHECK_THROWS_AS(compute_rho(degenerate, 0), BadAnchor);
}

TEST_CASE("rho dominates the exact share with a relaxed anchor") {
    // rho_v >= (0.4/6.4) W(v)/sum W whenever the anchor is 0.6n
    // well positioned.
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const int n = 100;
        auto space = random_cloud(n, 2, 400 + seed);
        NodeId anchor = find_well_positioned_relaxed(space, seed);
        auto m_half = oracle::exact_m_all(space, median_rank(n));
        double minmed_q = oracle::min_med(space, quantile_rank(n, 0.6));
        REQUIRE(m_half[static_cast<std::size_t>(anchor)] <= 2 * minmed_q);

        auto rho = compute_rho(space, anchor);
        auto w = oracle::exact_w_all(space);
        double total = std::accumulate(w.begin(), w.end(), 0.0);
        for (int v = 0; v < n; ++v)
            CHECK(rho.rho[static_cast<std::size_t>(v)] >=
                  0.4 / 6.4 * w[static_cast<std::size_t>(v)] / total - 1e-12);
    }
}

TEST_CASE("point-mass marginals give a single pair") {
    RhoVector rho;
    rho.rho = {0.0, 1.0};
    rho.w_rough = {0.0, 1.0};
    std::vector<double> gamma{1.0, 0.0};
    auto pairs = sample_pairs(gamma, rho, 50, 3);
    for (const auto& pr : pairs.pairs) {
        CHECK(pr.i == 0);
        CHECK(pr.j == 1);
        CHECK(pr.p == 1.0);
    }
}

TEST_CASE("pair frequencies follow the outer product") {
    auto space = p3();
    auto coeffs = compute_coefficients(space, std::vector<NodeId>{1});
    auto gamma = normalize_coefficients(coeffs);
    auto rho = compute_rho(space, 1);
    const int k = 100000;
    auto pairs = sample_pairs(gamma, rho, k, 77);
    REQUIRE(pairs.pairs.size() == k);

    std::vector<int> counts(9, 0);
    for (const auto& pr : pairs.pairs) ++counts[static_cast<std::size_t>(pr.i * 3 + pr.j)];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double p = gamma[static_cast<std::size_t>(i)] * rho.rho[static_cast<std::size_t>(j)];
            double sigma = std::sqrt(k * p * (1 - p));
            CHECK(std::abs(counts[static_cast<std::size_t>(i * 3 + j)] - k * p) <=
                  3 * sigma + 1e-9);
        }
}

TEST_CASE("pair sampling is deterministic per seed") {
    auto space = p3();
    auto gamma = normalize_coefficients(compute_coefficients(space, std::vector<NodeId>{1}));
    auto rho = compute_rho(space, 1);
    auto a = sample_pairs(gamma, rho, 500, 11);
    auto b = sample_pairs(gamma, rho, 500, 11);
    for (int t = 0; t < 500; ++t) {
        CHECK(a.pairs[static_cast<std::size_t>(t)].i == b.pairs[static_cast<std::size_t>(t)].i);
        CHECK(a.pairs[static_cast<std::size_t>(t)].j == b.pairs[static_cast<std::size_t>(t)].j);
    }
}

TEST_CASE("diagonal pairs contribute zero") {
    auto space = two_points(5.0);
    PairSample diag;
    diag.k = 4;
    for (int t = 0; t < 4; ++t) diag.pairs.push_back({t % 2, t % 2, 0.25});
    CHECK(estimate_aps_pairs(space, diag) == 0.0);
}

TEST_CASE("two-point pair estimator concentrates on the distance") {
    auto space = two_points(5.0);
    RhoVector rho;
    rho.rho = {0.5, 0.5};
    rho.w_rough = {5.0, 5.0};
    std::vector<double> gamma{0.5, 0.5};
    const int k = 10000;
    const int trials = 40;
    double sum = 0.0, sum_sq = 0.0;
    for (int t = 0; t < trials; ++t) {
        double est = estimate_aps_pairs(space, sample_pairs(gamma, rho, k, 600 + t));
        sum += est;
        sum_sq += est * est;
    }
    double mean = sum / trials;
    double var = (sum_sq - sum * sum / trials) / (trials - 1);
    CHECK(std::abs(mean - 5.0) <= 3 * std::sqrt(var / trials) + 1e-9);
}

TEST_CASE("pair estimates are unbiased on a cloud") {
    const int n = 80;
    auto space = random_cloud(n, 2, 5);
    double exact = oracle::exact_aps(space);
    const int trials = 400;
    double sum = 0.0, sum_sq = 0.0;
    for (int t = 0; t < trials; ++t) {
        std::uint64_t seed = derive_seed(42, t);
        NodeId anchor = find_well_positioned_relaxed(space, derive_seed(seed, 1));
        auto gamma = normalize_coefficients(
            compute_coefficients(space, std::vector<NodeId>{anchor}));
        auto rho = compute_rho(space, anchor);
        double est = estimate_aps_pairs(space, sample_pairs(gamma, rho, 400, derive_seed(seed, 2)));
        sum += est;
        sum_sq += est * est;
    }
    double mean = sum / trials;
    double var = (sum_sq - sum * sum / trials) / (trials - 1);
    CHECK(std::abs(mean - exact) <= 4 * std::sqrt(var / trials) + 1e-9);
}

TEST_CASE("outer-product sampling floor and per-summand bound") {
    // The product gamma_i rho_j dominates a positive constant share of
    // dist(i,j)/(2 aps); every sampled summand stays within (2/c) aps.
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
        const int n = 150;
        auto space = random_cloud(n, 2, 800 + seed);
        auto table = oracle::exact_table(space);
        NodeId anchor = find_well_positioned_relaxed(space, seed);
        auto gamma = normalize_coefficients(
            compute_coefficients(space, std::vector<NodeId>{anchor}));
        auto rho = compute_rho(space, anchor);
        double c_hat = std::numeric_limits<double>::infinity();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                double d = table->at(i, j);
                if (d <= 0.0) continue;
                c_hat = std::min(c_hat, gamma[static_cast<std::size_t>(i)] *
                                            rho.rho[static_cast<std::size_t>(j)] * 2.0 *
                                            table->aps / d);
            }
        CHECK(c_hat >= 1.0 / 200.0);

        auto pairs = sample_pairs(gamma, rho, 2000, seed + 9);
        for (const auto& pr : pairs.pairs) {
            double d = table->at(pr.i, pr.j);
            CHECK(d / pr.p <= 2.0 / c_hat * table->aps * (1 + 1e-9));
        }
    }
}

TEST_CASE("metric pipeline stays within the linear distance budget") {
    const int n = 200;
    auto space = random_cloud(n, 2, 99);
    double logn = std::log(static_cast<double>(n));
    const std::uint64_t wp_budget = static_cast<std::uint64_t>(std::ceil(10 * logn)) *
                                    static_cast<std::uint64_t>(std::ceil(48 * logn));
    const int k = 4000;

    auto before = space.distance_evals();
    NodeId anchor = find_well_positioned_relaxed(space, 3);
    auto gamma = normalize_coefficients(
        compute_coefficients(space, std::vector<NodeId>{anchor}));
    auto rho = compute_rho(space, anchor);
    estimate_aps_pairs(space, sample_pairs(gamma, rho, k, 4));
    auto used = space.distance_evals() - before;
    CHECK(used <= 3 * static_cast<std::uint64_t>(n) + wp_budget + k);
}
