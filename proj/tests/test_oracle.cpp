#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "distsketch/errors.hpp"
#include "distsketch/harness.hpp"
#include "distsketch/oracle.hpp"
#include "distsketch/sampling.hpp"
#include "test_support.hpp"

using namespace distsketch;
using namespace testsupport;

TEST_CASE("exact sums on tiny instances") {
    auto path = p3();
    CHECK(oracle::exact_w_all(path) == std::vector<double>{3.0, 2.0, 3.0});
    CHECK(oracle::exact_aps(path) == 4.0);

    auto star = k13();
    CHECK(oracle::exact_w_all(star) == std::vector<double>{3.0, 5.0, 5.0, 5.0});
    CHECK(oracle::exact_aps(star) == 9.0);

    auto pair = two_points(5.0);
    CHECK(oracle::exact_w_all(pair) == std::vector<double>{5.0, 5.0});

    DistanceSpace triangle(PointSet::from_matrix(
        3, {0.0, 1.0, 1.0, 1.0, 0.0, 1.0, 1.0, 1.0, 0.0}));
    CHECK(oracle::exact_aps(triangle) == 3.0);
}

TEST_CASE("upper coefficients on the path graph") {
    auto bar = oracle::exact_gamma_bar(p3());
    CHECK(bar[0] == doctest::Approx(2.0 / 3.0));
    CHECK(bar[1] == doctest::Approx(1.0 / 3.0));
    CHECK(bar[2] == doctest::Approx(2.0 / 3.0));
    double sum = std::accumulate(bar.begin(), bar.end(), 0.0);
    CHECK(sum == doctest::Approx(5.0 / 3.0));
    CHECK(sum <= 36.0);
}

TEST_CASE("upper coefficients for two points") {
    auto bar = oracle::exact_gamma_bar(two_points(5.0));
    CHECK(bar == std::vector<double>{1.0, 1.0});
}

TEST_CASE("degenerate metrics are reported") {
    std::vector<double> zeros(16, 0.0);
    DistanceSpace degenerate(PointSet::from_matrix_unchecked(4, std::move(zeros)));
    CHECK_THROWS_AS(oracle::exact_gamma_bar(degenerate), DegenerateMetric);
}

TEST_CASE("well-positioned classification") {
    auto path = p3();
    auto cls = oracle::classify_well_positioned(path, median_rank(3));
    CHECK(cls == std::vector<bool>{true, true, true});
    auto m = oracle::exact_m_all(path, median_rank(3));
    CHECK(m == std::vector<double>{2.0, 1.0, 2.0});
    CHECK(oracle::min_med(path, median_rank(3)) == 1.0);

    // Star with spokes 1, 1, 100: the long leaf is badly positioned.
    DistanceSpace star(Graph(4, {{0, 1, 1.0}, {0, 2, 1.0}, {0, 3, 100.0}}));
    auto cls2 = oracle::classify_well_positioned(star, median_rank(4));
    CHECK(cls2 == std::vector<bool>{true, true, true, false});
}

TEST_CASE("at least the rank count is well positioned") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        auto space = seed % 2 == 0 ? random_graph(35, 0.1, seed)
                                   : random_cloud(50, 2, seed);
        const int n = space.size();
        for (int rank : {median_rank(n), quantile_rank(n, 0.6)}) {
            auto cls = oracle::classify_well_positioned(space, rank);
            int count = static_cast<int>(std::count(cls.begin(), cls.end(), true));
            CHECK(count >= rank);
        }
    }
}

TEST_CASE("distance-sum distribution facts") {
    // max W >= nD/2, every W in [D, nD], and at least half the nodes stay
    // within 3x the optimum.
    std::vector<harness::InstanceSpec> specs;
    for (auto kind : {harness::InstanceKind::Path, harness::InstanceKind::Star,
                      harness::InstanceKind::Clique, harness::InstanceKind::Geometric,
                      harness::InstanceKind::ErdosRenyi, harness::InstanceKind::HeavyTail,
                      harness::InstanceKind::Cloud}) {
        harness::InstanceSpec spec;
        spec.kind = kind;
        spec.n = 60;
        spec.seed = 13;
        specs.push_back(spec);
    }
    for (const auto& spec : specs) {
        auto space = harness::make_instance(spec);
        auto table = oracle::exact_table(space);
        const int n = table->n;
        double d = table->diameter;
        double w_max = *std::max_element(table->w.begin(), table->w.end());
        CHECK(w_max >= n * d / 2.0 - 1e-9);
        for (double w : table->w) {
            CHECK(w >= d - 1e-9);
            CHECK(w <= n * d + 1e-9);
        }
        double w_min = *std::min_element(table->w.begin(), table->w.end());
        int within = static_cast<int>(std::count_if(
            table->w.begin(), table->w.end(),
            [&](double w) { return w <= 3.0 * w_min + 1e-9; }));
        CHECK(within >= (n + 1) / 2);
    }
}

TEST_CASE("oracle results are cached per content fingerprint") {
    auto space = random_cloud(40, 2, 21);
    oracle::exact_w_all(space);
    auto evals_after_first = space.distance_evals();
    oracle::exact_w_all(space);
    oracle::exact_aps(space);
    oracle::exact_m_all(space, median_rank(40));
    CHECK(space.distance_evals() == evals_after_first);
}

TEST_CASE("matrix twin shares the metric at lookup cost") {
    auto space = random_graph(25, 0.12, 2);
    auto twin = oracle::matrix_twin(space);
    CHECK(twin.size() == 25);
    CHECK_FALSE(twin.graph_backed());
    for (NodeId u = 0; u < 25; u += 6)
        for (NodeId v = 0; v < 25; v += 5)
            CHECK(twin.distance(u, v) == doctest::Approx(space.distance(u, v)));
}
