#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "distsketch/harness.hpp"
#include "distsketch/oracle.hpp"
#include "distsketch/sampling.hpp"
#include "test_support.hpp"

using namespace distsketch;
using namespace distsketch::harness;
using namespace testsupport;

namespace {

InstanceSpec spec_of(InstanceKind kind, int n, std::uint64_t seed, double param = 0.0) {
    InstanceSpec s;
    s.kind = kind;
    s.n = n;
    s.seed = seed;
    s.param = param;
    return s;
}

}  // namespace

TEST_CASE("generated instances have the requested shape") {
    auto path = make_instance(spec_of(InstanceKind::Path, 5, 0));
    CHECK(path.size() == 5);
    CHECK(path.graph().edges().size() == 4);

    auto star = make_instance(spec_of(InstanceKind::Star, 6, 0));
    CHECK(star.graph().edges().size() == 5);
    CHECK(star.single_source(0).sum == 5.0);

    auto clique = make_instance(spec_of(InstanceKind::Clique, 6, 0));
    CHECK(clique.graph().edges().size() == 15);

    auto cloud = make_instance(spec_of(InstanceKind::Cloud, 40, 3));
    CHECK_FALSE(cloud.graph_backed());
    CHECK(cloud.size() == 40);

    auto heavy = make_instance(spec_of(InstanceKind::HeavyTail, 50, 3));
    auto w = oracle::exact_w_all(heavy);
    double w_max = *std::max_element(w.begin(), w.end());
    double w_min = *std::min_element(w.begin(), w.end());
    CHECK(w_max > 10.0 * w_min);  // the far outlier dominates
}

TEST_CASE("random graph generators stay connected") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        auto geo = make_instance(spec_of(InstanceKind::Geometric, 70, seed));
        CHECK_NOTHROW(geo.single_source(0));
        auto er = make_instance(spec_of(InstanceKind::ErdosRenyi, 70, seed));
        CHECK_NOTHROW(er.single_source(0));
    }
}

TEST_CASE("instance generation is deterministic") {
    auto a = make_instance(spec_of(InstanceKind::Geometric, 50, 12));
    auto b = make_instance(spec_of(InstanceKind::Geometric, 50, 12));
    CHECK(a.fingerprint() == b.fingerprint());
    auto c = make_instance(spec_of(InstanceKind::Geometric, 50, 13));
    CHECK(a.fingerprint() != c.fingerprint());
}

TEST_CASE("exact regime gives zero error") {
    TrialConfig cfg;
    cfg.space = spec_of(InstanceKind::Path, 3, 0);
    cfg.method = Method::Weighted;
    cfg.k = 3.0;  // every probability clamps to 1
    cfg.trials = 4;
    cfg.seed = 7;
    auto report = run_trials(cfg);
    REQUIRE(report.targets.size() == 3);
    for (const auto& t : report.targets) {
        CHECK(t.nrmse == 0.0);
        CHECK(t.mean == t.exact);
        CHECK(t.variance == 0.0);
    }
    CHECK(report.max_rel_err == 0.0);
}

TEST_CASE("budget equals the counters consumed by the trials") {
    TrialConfig cfg;
    cfg.space = spec_of(InstanceKind::Cloud, 30, 5);
    cfg.method = Method::Uniform;
    cfg.k = 8;  // |Q|
    cfg.trials = 6;
    cfg.seed = 1;
    cfg.cache_distances = false;
    auto report = run_trials(cfg);
    // 6 trials x 8 single-source scans x (n-1) resolved distances
    CHECK(report.distance_evals == 6ULL * 8ULL * 29ULL);
    CHECK(report.sssp_calls == 0);
}

TEST_CASE("identical configs give identical reports") {
    TrialConfig cfg;
    cfg.space = spec_of(InstanceKind::Geometric, 40, 3);
    cfg.method = Method::Weighted;
    cfg.k = 12.0;
    cfg.trials = 20;
    cfg.seed = 99;
    cfg.probes = 7;
    auto a = run_trials(cfg);
    auto b = run_trials(cfg);
    REQUIRE(a.targets.size() == b.targets.size());
    for (std::size_t i = 0; i < a.targets.size(); ++i) {
        CHECK(a.targets[i].v == b.targets[i].v);
        CHECK(a.targets[i].mean == b.targets[i].mean);
        CHECK(a.targets[i].variance == b.targets[i].variance);
        CHECK(a.targets[i].nrmse == b.targets[i].nrmse);
    }
    CHECK(a.max_rel_err == b.max_rel_err);
    CHECK(a.pps_constant == b.pps_constant);
}

TEST_CASE("weighted sampling beats uniform on heavy tails") {
    // Matched budgets: the weighted run spends 2 base scans plus the Poisson
    // sample, the uniform run gets the same number of full scans.
    TrialConfig weighted;
    weighted.space = spec_of(InstanceKind::HeavyTail, 196, 4);
    weighted.method = Method::Weighted;
    weighted.base = BasePolicy::UniformB;
    weighted.base_b = 2;
    weighted.k = 30.0;
    weighted.trials = 200;
    weighted.seed = 11;
    weighted.probes = 10;
    auto wr = run_trials(weighted);

    TrialConfig uniform = weighted;
    uniform.method = Method::Uniform;
    uniform.k = 34;  // at least the weighted budget per trial
    auto ur = run_trials(uniform);

    double w_nrmse = 0.0, u_nrmse = 0.0;
    for (const auto& t : wr.targets) w_nrmse = std::max(w_nrmse, t.nrmse);
    for (const auto& t : ur.targets) u_nrmse = std::max(u_nrmse, t.nrmse);
    CHECK(u_nrmse >= 2.0 * w_nrmse);
}

TEST_CASE("pairs method estimates the all-pairs sum") {
    TrialConfig cfg;
    cfg.space = spec_of(InstanceKind::Cloud, 60, 2);
    cfg.method = Method::Pairs;
    cfg.k = 500;
    cfg.trials = 50;
    cfg.seed = 5;
    auto report = run_trials(cfg);
    REQUIRE(report.targets.size() == 1);
    const auto& t = report.targets[0];
    CHECK(t.v == -1);
    CHECK(std::abs(t.mean - t.exact) <=
          4 * std::sqrt(t.variance / cfg.trials) + 1e-9);
    CHECK(t.nrmse < 0.2);
}

TEST_CASE("exceedance counting uses the configured threshold") {
    TrialConfig cfg;
    cfg.space = spec_of(InstanceKind::Path, 3, 0);
    cfg.method = Method::Weighted;
    cfg.k = 3.0;
    cfg.trials = 5;
    cfg.seed = 2;
    cfg.rel_err_threshold = 0.1;
    auto report = run_trials(cfg);
    CHECK(report.exceed_fraction == 0.0);  // exact regime never exceeds
}

TEST_CASE("pps constant on the path graph") {
    auto space = p3();
    auto coeffs = compute_coefficients(space, std::vector<NodeId>{1});
    CHECK(measure_pps_constant(coeffs, space) == doctest::Approx(0.75));
}

TEST_CASE("pps constant floors") {
    // Full base: every gamma dominates the per-query ratio outright.
    auto space = random_cloud(30, 2, 8);
    std::vector<NodeId> all(30);
    std::iota(all.begin(), all.end(), 0);
    auto full = compute_coefficients(space, all);
    CHECK(measure_pps_constant(full, space) >= 1.0 - 1e-12);

    // Well-positioned single base on n >= 9 instances: at least 1/18.
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        auto inst = seed % 2 == 0 ? random_graph(9 + 3 * static_cast<int>(seed), 0.2, seed)
                                  : random_cloud(20 + 10 * static_cast<int>(seed), 2, seed);
        const int n = inst.size();
        auto cls = oracle::classify_well_positioned(inst, median_rank(n));
        NodeId base = -1;
        for (NodeId v = 0; v < n; ++v)
            if (cls[static_cast<std::size_t>(v)]) {
                base = v;
                break;
            }
        REQUIRE(base >= 0);
        auto coeffs = compute_coefficients(inst, std::vector<NodeId>{base});
        CHECK(measure_pps_constant(coeffs, inst) >= 1.0 / 18.0 - 1e-12);
    }
}

TEST_CASE("parallel_for covers every index once") {
    std::vector<int> hits(257, 0);
    parallel_for(257, [&](int i) { hits[static_cast<std::size_t>(i)] += 1; });
    CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
}
