#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "distsketch/estimation.hpp"
#include "distsketch/oracle.hpp"
#include "distsketch/rng.hpp"
#include "test_support.hpp"

using namespace distsketch;
using namespace testsupport;

namespace {

WeightedSample full_sample(int n) {
    WeightedSample s;
    for (NodeId v = 0; v < n; ++v) s.entries.push_back({v, 1.0});
    s.k = n;
    return s;
}

}  // namespace

TEST_CASE("point estimate by direct substitution") {
    auto space = p3();
    WeightedSample s;
    s.entries.push_back({2, 0.5});
    CHECK(estimate_point(space, s, 0) == 4.0);

    WeightedSample empty;
    CHECK(estimate_point(space, empty, 0) == 0.0);
}

TEST_CASE("full sample reproduces the exact sums") {
    auto space = p3();
    auto s = full_sample(3);
    CHECK(estimate_point(space, s, 0) == 3.0);
    CHECK(estimate_point(space, s, 1) == 2.0);

    auto est = estimate_all_nodes(space, s);
    CHECK(est.w_hat == std::vector<double>{3.0, 2.0, 3.0});
}

TEST_CASE("single-entry estimates for every node") {
    auto space = p3();
    WeightedSample s;
    s.entries.push_back({2, 0.5});
    auto est = estimate_all_nodes(space, s);
    CHECK(est.w_hat == std::vector<double>{4.0, 2.0, 0.0});
}

TEST_CASE("full sample matches the oracle on a random graph") {
    auto space = random_graph(100, 0.05, 31);
    auto est = estimate_all_nodes(space, full_sample(100));
    auto exact = oracle::exact_w_all(space);
    for (int v = 0; v < 100; ++v)
        CHECK(est.w_hat[static_cast<std::size_t>(v)] ==
              doctest::Approx(exact[static_cast<std::size_t>(v)]).epsilon(1e-9));
}

TEST_CASE("all-nodes estimates equal per-node point estimates") {
    auto space = random_graph(40, 0.1, 12);
    auto coeffs = compute_coefficients(space, std::vector<NodeId>{3, 17});
    auto sample = draw_sample(coeffs, 10.0, 5);
    auto est = estimate_all_nodes(space, sample);
    for (NodeId z = 0; z < 40; ++z)
        CHECK(est.w_hat[static_cast<std::size_t>(z)] ==
              doctest::Approx(estimate_point(space, sample, z)).epsilon(1e-9));
}

TEST_CASE("all-nodes estimation costs one single-source call per entry") {
    auto space = random_graph(25, 0.1, 4);
    auto coeffs = compute_coefficients(space, std::vector<NodeId>{0});
    auto sample = draw_sample(coeffs, 6.0, 2);
    auto before = space.sssp_calls();
    estimate_all_nodes(space, sample);
    CHECK(space.sssp_calls() - before == sample.entries.size());
}

TEST_CASE("point estimates count one distance evaluation per entry") {
    auto space = random_cloud(30, 2, 2);
    auto coeffs = compute_coefficients(space, std::vector<NodeId>{0});
    auto sample = draw_sample(coeffs, 5.0, 9);
    auto before = space.distance_evals();
    estimate_point(space, sample, 11);
    CHECK(space.distance_evals() - before == sample.entries.size());
}

TEST_CASE("unbiased for point queries on a cloud") {
    // Mean over seeded samples approaches the exact sum for query points both
    // inside and outside V.
    const int n = 120;
    auto space = random_cloud(n, 2, 77);
    auto exact = oracle::exact_w_all(space);
    auto coeffs = compute_coefficients(space, std::vector<NodeId>{11, 63});

    const int trials = 3000;
    const double k = 40.0;
    Rng pick(5);
    for (int probe = 0; probe < 5; ++probe) {
        NodeId z = pick.next_index(n);
        double sum = 0.0, sum_sq = 0.0;
        for (int t = 0; t < trials; ++t) {
            double est = estimate_point(space, draw_sample(coeffs, k, 900 + t), z);
            sum += est;
            sum_sq += est * est;
        }
        double mean = sum / trials;
        double var = (sum_sq - sum * sum / trials) / (trials - 1);
        double se = std::sqrt(var / trials);
        CHECK(std::abs(mean - exact[static_cast<std::size_t>(z)]) <= 4 * se + 1e-9);
    }
}

TEST_CASE("out-of-set coordinate queries are unbiased") {
    const int n = 80;
    auto space = random_cloud(n, 2, 123);
    auto coeffs = compute_coefficients(space, std::vector<NodeId>{7, 40});
    std::vector<double> q{0.3, 0.9};

    double exact = 0.0;
    for (int v = 0; v < n; ++v) exact += space.query_distance(q, v);

    const int trials = 3000;
    double sum = 0.0, sum_sq = 0.0;
    for (int t = 0; t < trials; ++t) {
        double est = estimate_point(space, draw_sample(coeffs, 30.0, 40 + t), q);
        sum += est;
        sum_sq += est * est;
    }
    double mean = sum / trials;
    double var = (sum_sq - sum * sum / trials) / (trials - 1);
    CHECK(std::abs(mean - exact) <= 4 * std::sqrt(var / trials) + 1e-9);
}

TEST_CASE("variance respects the approximate-PPS bound") {
    // Var[west(z)] <= W(z)^2 / (k c) where c is the measured coefficient
    // constant for z; 1.25 slack absorbs Monte-Carlo noise.
    const int n = 60;
    auto space = random_cloud(n, 2, 17);
    auto table = oracle::exact_table(space);
    auto coeffs = compute_coefficients(space, std::vector<NodeId>{5});
    const double k = 25.0;
    const int trials = 5000;
    Rng pick(3);
    for (int probe = 0; probe < 3; ++probe) {
        NodeId z = pick.next_index(n);
        double w = table->w[static_cast<std::size_t>(z)];
        double c = std::numeric_limits<double>::infinity();
        for (int v = 0; v < n; ++v) {
            double d = table->at(z, v);
            if (d > 0.0)
                c = std::min(c, coeffs.gamma[static_cast<std::size_t>(v)] * w / d);
        }
        double sum = 0.0, sum_sq = 0.0;
        for (int t = 0; t < trials; ++t) {
            double est = estimate_point(space, draw_sample(coeffs, k, 7000 + t), z);
            sum += est;
            sum_sq += est * est;
        }
        double var = (sum_sq - sum * sum / trials) / (trials - 1);
        CHECK(var <= w * w / (k * c) * 1.25);
    }
}

TEST_CASE("uniform-pair base variance bound") {
    // S0 = 2 uniform nodes and k samples: Var <= (W^2/k) * 8, with slack,
    // randomizing the base set and the sample together.
    const int n = 50;
    auto space = random_cloud(n, 2, 29);
    auto table = oracle::exact_table(space);
    const double k = 25.0;
    const int trials = 6000;
    const NodeId z = 13;
    double w = table->w[static_cast<std::size_t>(z)];
    double sum = 0.0, sum_sq = 0.0;
    for (int t = 0; t < trials; ++t) {
        Rng rng(derive_seed(31337, t));
        auto ids = rng.sample_without_replacement(n, 2);
        auto coeffs =
            compute_coefficients(space, std::vector<NodeId>(ids.begin(), ids.end()));
        double est = estimate_point(space, draw_sample(coeffs, k, derive_seed(991, t)), z);
        sum += est;
        sum_sq += est * est;
    }
    double var = (sum_sq - sum * sum / trials) / (trials - 1);
    CHECK(var <= w * w / k * 8.0 * 1.25);
}

TEST_CASE("closeness values") {
    EstimateVector est;
    est.w_hat = {3.0, 5.0, 5.0, 5.0};
    auto cc = closeness(est);
    CHECK(cc.cc[0] == 1.0);
    CHECK(cc.cc[1] == doctest::Approx(0.6));

    EstimateVector p3est;
    p3est.w_hat = {3.0, 2.0, 3.0};
    auto cc3 = closeness(p3est);
    CHECK(cc3.cc[0] == doctest::Approx(2.0 / 3.0));
    CHECK(cc3.cc[1] == 1.0);

    EstimateVector zero;
    zero.w_hat = {1.0, 0.0};
    CHECK(std::isinf(closeness(zero).cc[1]));
}

TEST_CASE("estimate argmin picks the median") {
    EstimateVector star;
    star.w_hat = {3.0, 5.0, 5.0, 5.0};
    CHECK(approx_median(star) == 0);

    EstimateVector path;
    path.w_hat = {3.0, 2.0, 3.0};
    CHECK(approx_median(path) == 1);

    EstimateVector ties;
    ties.w_hat = {2.0, 2.0, 3.0};
    CHECK(approx_median(ties) == 0);
}
