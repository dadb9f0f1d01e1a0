#include "distsketch/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <optional>
#include <thread>

#include "distsketch/apsum.hpp"
#include "distsketch/errors.hpp"
#include "distsketch/estimation.hpp"
#include "distsketch/oracle.hpp"
#include "distsketch/rng.hpp"

namespace distsketch {
namespace harness {

namespace {

double uniform_weight(Rng& rng) { return 1.0 + rng.next_double(); }  // U[1,2)

DistanceSpace make_geometric(int n, double radius, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<double> xs(static_cast<std::size_t>(n)), ys(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        xs[static_cast<std::size_t>(i)] = rng.next_double();
        ys[static_cast<std::size_t>(i)] = rng.next_double();
    }
    auto dist = [&](int i, int j) {
        double dx = xs[static_cast<std::size_t>(i)] - xs[static_cast<std::size_t>(j)];
        double dy = ys[static_cast<std::size_t>(i)] - ys[static_cast<std::size_t>(j)];
        return std::sqrt(dx * dx + dy * dy);
    };
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double d = dist(i, j);
            if (d <= radius) edges.push_back({i, j, d});
        }
    // Join residual components through their closest cross pair.
    std::vector<int> comp(static_cast<std::size_t>(n));
    std::function<int(int)> find = [&](int x) {
        while (comp[static_cast<std::size_t>(x)] != x) {
            comp[static_cast<std::size_t>(x)] =
                comp[static_cast<std::size_t>(comp[static_cast<std::size_t>(x)])];
            x = comp[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (int i = 0; i < n; ++i) comp[static_cast<std::size_t>(i)] = i;
    auto unite = [&](int a, int b) { comp[static_cast<std::size_t>(find(a))] = find(b); };
    for (const auto& e : edges) unite(e.u, e.v);
    while (true) {
        int best_i = -1, best_j = -1;
        double best_d = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                if (find(i) == find(j)) continue;
                double d = dist(i, j);
                if (best_i < 0 || d < best_d) {
                    best_d = d;
                    best_i = i;
                    best_j = j;
                }
            }
        if (best_i < 0) break;
        edges.push_back({best_i, best_j, best_d});
        unite(best_i, best_j);
    }
    return DistanceSpace(Graph(n, std::move(edges)));
}

DistanceSpace make_erdos_renyi(int n, double p, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    rng.shuffle(order);
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i)  // backbone chain keeps the graph connected
        edges.push_back({order[static_cast<std::size_t>(i)],
                         order[static_cast<std::size_t>(i) + 1], uniform_weight(rng)});
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.next_double() < p) edges.push_back({i, j, uniform_weight(rng)});
    return DistanceSpace(Graph(n, std::move(edges)));
}

DistanceSpace make_heavy_tail(int n, std::uint64_t seed) {
    Rng rng(seed);
    int outliers = std::max(1, n / 100);
    std::vector<double> coords;
    coords.reserve(static_cast<std::size_t>(n) * 2);
    for (int i = 0; i < n - outliers; ++i) {
        coords.push_back(0.01 * rng.next_double());
        coords.push_back(0.01 * rng.next_double());
    }
    for (int t = 0; t < outliers; ++t) {
        coords.push_back(100.0 * (1.0 + t));
        coords.push_back(0.0);
    }
    return DistanceSpace(PointSet::from_coordinates(2, std::move(coords)));
}

DistanceSpace make_cloud(int n, int dim, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<double> coords(static_cast<std::size_t>(n) * static_cast<std::size_t>(dim));
    for (auto& c : coords) c = rng.next_double();
    return DistanceSpace(PointSet::from_coordinates(dim, std::move(coords)));
}

}  // namespace

DistanceSpace make_instance(const InstanceSpec& spec) {
    const int n = spec.n;
    if (n < 1) throw Error("instance size must be positive");
    switch (spec.kind) {
        case InstanceKind::Path: {
            std::vector<Edge> edges;
            for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1.0});
            return DistanceSpace(Graph(n, std::move(edges)));
        }
        case InstanceKind::Star: {
            std::vector<Edge> edges;
            for (int i = 1; i < n; ++i) edges.push_back({0, i, 1.0});
            return DistanceSpace(Graph(n, std::move(edges)));
        }
        case InstanceKind::Clique: {
            std::vector<Edge> edges;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) edges.push_back({i, j, 1.0});
            return DistanceSpace(Graph(n, std::move(edges)));
        }
        case InstanceKind::Geometric: {
            double r = spec.param > 0.0 ? spec.param : std::sqrt(4.5 / n);
            return make_geometric(n, r, spec.seed);
        }
        case InstanceKind::ErdosRenyi: {
            double p = spec.param > 0.0
                           ? spec.param
                           : std::min(1.0, 2.5 * std::log(std::max(2, n)) / n);
            return make_erdos_renyi(n, p, spec.seed);
        }
        case InstanceKind::HeavyTail:
            return make_heavy_tail(n, spec.seed);
        case InstanceKind::Cloud:
            return make_cloud(n, spec.dim > 0 ? spec.dim : 2, spec.seed);
    }
    throw Error("unknown instance kind");
}

InstanceKind instance_kind_from_name(const std::string& name) {
    if (name == "path") return InstanceKind::Path;
    if (name == "star") return InstanceKind::Star;
    if (name == "clique") return InstanceKind::Clique;
    if (name == "geometric") return InstanceKind::Geometric;
    if (name == "er" || name == "erdos-renyi") return InstanceKind::ErdosRenyi;
    if (name == "heavy-tail") return InstanceKind::HeavyTail;
    if (name == "cloud") return InstanceKind::Cloud;
    throw Error("unknown instance kind: " + name);
}

std::string instance_kind_name(InstanceKind kind) {
    switch (kind) {
        case InstanceKind::Path: return "path";
        case InstanceKind::Star: return "star";
        case InstanceKind::Clique: return "clique";
        case InstanceKind::Geometric: return "geometric";
        case InstanceKind::ErdosRenyi: return "er";
        case InstanceKind::HeavyTail: return "heavy-tail";
        case InstanceKind::Cloud: return "cloud";
    }
    return "?";
}

void parallel_for(int count, const std::function<void(int)>& fn) {
    unsigned hw = std::thread::hardware_concurrency();
    int workers = static_cast<int>(std::min<unsigned>(hw == 0 ? 1 : hw, 8));
    workers = std::min(workers, count);
    if (workers <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&]() {
            while (true) {
                int i = next.fetch_add(1);
                if (i >= count) break;
                fn(i);
            }
        });
    for (auto& t : pool) t.join();
}

double measure_pps_constant(const CoefficientVector& coeffs, const DistanceSpace& space) {
    auto table = oracle::exact_table(space);
    const int n = table->n;
    double best = std::numeric_limits<double>::infinity();
    bool any = false;
    for (int z = 0; z < n; ++z) {
        double w = table->w[static_cast<std::size_t>(z)];
        for (int v = 0; v < n; ++v) {
            double d = table->at(z, v);
            if (d <= 0.0) continue;
            any = true;
            best = std::min(best, coeffs.gamma[static_cast<std::size_t>(v)] * w / d);
        }
    }
    if (!any) throw DegenerateMetric("all pairwise distances are zero");
    return best;
}

namespace {

struct TrialContext {
    const TrialConfig& config;
    const DistanceSpace& work;
    const std::vector<NodeId>& targets;  // empty when every node is a target
    int target_count;
};

std::vector<NodeId> pick_base_set(const TrialConfig& config, const DistanceSpace& work,
                                  std::uint64_t trial_seed) {
    switch (config.base) {
        case BasePolicy::UniformB: {
            Rng rng(derive_seed(trial_seed, 1));
            auto ids = rng.sample_without_replacement(work.size(),
                                                      std::min(work.size(), std::max(1, config.base_b)));
            return std::vector<NodeId>(ids.begin(), ids.end());
        }
        case BasePolicy::WellPositioned:
            return {find_well_positioned(work, derive_seed(trial_seed, 1))};
        case BasePolicy::RelaxedWp:
            return {find_well_positioned_relaxed(work, derive_seed(trial_seed, 1))};
    }
    throw Error("unknown base policy");
}

/// Fills estimates[j] for target j of this trial.
void run_one_trial(const TrialContext& ctx, std::uint64_t trial_seed, double* estimates,
                   CoefficientVector* coeffs_out) {
    const auto& cfg = ctx.config;
    const auto& work = ctx.work;
    const int n = work.size();
    const bool all_nodes = ctx.targets.empty();
    switch (cfg.method) {
        case Method::Weighted: {
            auto base = pick_base_set(cfg, work, trial_seed);
            auto coeffs = compute_coefficients(work, base);
            auto sample = draw_sample(coeffs, cfg.k, derive_seed(trial_seed, 2));
            if (all_nodes) {
                auto est = estimate_all_nodes(work, sample);
                std::copy(est.w_hat.begin(), est.w_hat.end(), estimates);
            } else {
                for (int j = 0; j < ctx.target_count; ++j)
                    estimates[j] = estimate_point(work, sample, ctx.targets[static_cast<std::size_t>(j)]);
            }
            if (coeffs_out) *coeffs_out = std::move(coeffs);
            break;
        }
        case Method::Uniform: {
            Rng rng(derive_seed(trial_seed, 1));
            int q_size = std::min(n, std::max(1, static_cast<int>(cfg.k)));
            auto q_ids = rng.sample_without_replacement(n, q_size);
            double scale = static_cast<double>(n) / q_size;
            std::vector<double> acc(all_nodes ? static_cast<std::size_t>(n)
                                              : static_cast<std::size_t>(ctx.target_count),
                                    0.0);
            for (int a : q_ids) {
                DistanceVector row = work.single_source(a);
                if (all_nodes) {
                    for (int v = 0; v < n; ++v)
                        acc[static_cast<std::size_t>(v)] += row.d[static_cast<std::size_t>(v)];
                } else {
                    for (int j = 0; j < ctx.target_count; ++j)
                        acc[static_cast<std::size_t>(j)] +=
                            row.d[static_cast<std::size_t>(ctx.targets[static_cast<std::size_t>(j)])];
                }
            }
            for (std::size_t j = 0; j < acc.size(); ++j) estimates[j] = scale * acc[j];
            break;
        }
        case Method::Pairs: {
            NodeId anchor = find_well_positioned_relaxed(work, derive_seed(trial_seed, 1));
            auto coeffs = compute_coefficients(work, std::vector<NodeId>{anchor});
            auto gamma_dist = normalize_coefficients(coeffs);
            auto rho = compute_rho(work, anchor);
            int k_pairs = std::max(1, static_cast<int>(cfg.k));
            auto pairs = sample_pairs(gamma_dist, rho, k_pairs, derive_seed(trial_seed, 2));
            estimates[0] = estimate_aps_pairs(work, pairs);
            if (coeffs_out) *coeffs_out = std::move(coeffs);
            break;
        }
    }
}

}  // namespace

ErrorReport run_trials(const TrialConfig& config) {
    if (config.trials < 1) throw Error("trial count must be positive");
    DistanceSpace instance = make_instance(config.space);
    auto truth = oracle::exact_table(instance);
    std::optional<DistanceSpace> twin;
    if (config.cache_distances) twin.emplace(oracle::matrix_twin(instance));
    const DistanceSpace& work = twin ? *twin : instance;
    const int n = work.size();

    std::vector<NodeId> targets;
    std::vector<double> target_truth;
    if (config.method == Method::Pairs) {
        targets.push_back(-1);
        target_truth.push_back(truth->aps);
    } else if (config.probes > 0 && config.probes < n) {
        Rng rng(derive_seed(config.seed, 0xA11));
        auto ids = rng.sample_without_replacement(n, config.probes);
        std::sort(ids.begin(), ids.end());
        for (int v : ids) {
            targets.push_back(v);
            target_truth.push_back(truth->w[static_cast<std::size_t>(v)]);
        }
    } else {
        target_truth = truth->w;  // every node; targets stays empty as a flag
    }
    const int target_count =
        targets.empty() ? n : static_cast<int>(targets.size());
    const bool probes_listed = !targets.empty() && config.method != Method::Pairs;

    const std::uint64_t evals_before = work.distance_evals();
    const std::uint64_t sssp_before = work.sssp_calls();

    std::vector<double> estimates(static_cast<std::size_t>(config.trials) *
                                  static_cast<std::size_t>(target_count));
    CoefficientVector first_coeffs;
    TrialContext ctx{config, work, targets, target_count};

    parallel_for(config.trials, [&](int t) {
        run_one_trial(ctx, derive_seed(config.seed, static_cast<std::uint64_t>(t) + 1),
                      estimates.data() + static_cast<std::size_t>(t) * target_count,
                      t == 0 ? &first_coeffs : nullptr);
    });

    ErrorReport report;
    report.distance_evals = work.distance_evals() - evals_before;
    report.sssp_calls = work.sssp_calls() - sssp_before;

    const double trials = config.trials;
    std::uint64_t exceed = 0;
    for (int j = 0; j < target_count; ++j) {
        double truth_j = target_truth[static_cast<std::size_t>(j)];
        double sum = 0.0, sum_sq_err = 0.0;
        for (int t = 0; t < config.trials; ++t) {
            double est = estimates[static_cast<std::size_t>(t) * target_count +
                                   static_cast<std::size_t>(j)];
            sum += est;
            double err = est - truth_j;
            sum_sq_err += err * err;
            if (truth_j > 0.0) {
                double rel = std::abs(err) / truth_j;
                report.max_rel_err = std::max(report.max_rel_err, rel);
                if (config.rel_err_threshold > 0.0 && rel > config.rel_err_threshold)
                    ++exceed;
            }
        }
        double mean = sum / trials;
        double variance = 0.0;
        if (config.trials > 1) {
            for (int t = 0; t < config.trials; ++t) {
                double est = estimates[static_cast<std::size_t>(t) * target_count +
                                       static_cast<std::size_t>(j)];
                variance += (est - mean) * (est - mean);
            }
            variance /= (trials - 1.0);
        }
        TargetStats stats;
        stats.v = config.method == Method::Pairs ? -1
                  : probes_listed               ? targets[static_cast<std::size_t>(j)]
                                                : j;
        stats.exact = truth_j;
        stats.mean = mean;
        stats.variance = variance;
        stats.nrmse = truth_j > 0.0 ? std::sqrt(sum_sq_err / trials) / truth_j : 0.0;
        report.targets.push_back(stats);
    }
    report.exceed_fraction =
        static_cast<double>(exceed) / (trials * static_cast<double>(target_count));

    if (config.method != Method::Uniform && !first_coeffs.gamma.empty())
        report.pps_constant = measure_pps_constant(first_coeffs, work);
    return report;
}

}  // namespace harness
}  // namespace distsketch
