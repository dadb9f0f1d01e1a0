#include "distsketch/cli.hpp"

#include <cmath>
#include <optional>
#include <random>

#include <CLI11.hpp>

#include "distsketch/apsum.hpp"
#include "distsketch/baseline.hpp"
#include "distsketch/errors.hpp"
#include "distsketch/estimation.hpp"
#include "distsketch/harness.hpp"
#include "distsketch/io.hpp"
#include "distsketch/oracle.hpp"
#include "distsketch/rng.hpp"
#include "distsketch/sampling.hpp"

namespace distsketch {
namespace cli {

namespace {

using io::format_double;

// Seed sub-stream tags; every randomized stage gets its own derived stream.
enum : std::uint64_t { kStreamBase = 11, kStreamSample = 12, kStreamMethod = 13 };

struct SpaceOpts {
    std::string graph_path;
    std::string points_path;
};

void add_space_options(CLI::App* sub, SpaceOpts& opts) {
    auto* g = sub->add_option("--graph", opts.graph_path, "edge-list file (u v w per line)");
    auto* p = sub->add_option("--points", opts.points_path,
                              "point file (CSV coordinates or 'matrix n' mode)");
    g->excludes(p);
}

DistanceSpace load_space(const SpaceOpts& opts) {
    if (!opts.graph_path.empty())
        return DistanceSpace(io::parse_edge_list(io::read_file(opts.graph_path)));
    if (!opts.points_path.empty())
        return DistanceSpace(io::parse_points(io::read_file(opts.points_path)));
    throw Error("one of --graph or --points is required");
}

struct SampleOpts {
    double k = 0.0;
    double epsilon = 0.0;
    std::string regime = "cv";
    std::string base = "uniform:2";
};

void add_sample_options(CLI::App* sub, SampleOpts& opts) {
    sub->add_option("--k", opts.k, "sample size parameter");
    sub->add_option("--epsilon", opts.epsilon, "target accuracy; sets k by the regime");
    sub->add_option("--regime", opts.regime, "epsilon-to-k mapping: cv (1/e^2) or hp (ln(n)/e^2)")
        ->check(CLI::IsMember({"cv", "hp"}));
    sub->add_option("--base", opts.base, "base set policy: uniform:<b>, wp, or relaxed-wp");
}

double resolve_k(const SampleOpts& opts, int n, bool pairs_method) {
    if (opts.k > 0.0) return opts.k;
    if (!(opts.epsilon > 0.0)) throw Error("provide --k or --epsilon");
    double inv = std::ceil(1.0 / (opts.epsilon * opts.epsilon));
    if (pairs_method) return 64.0 * inv;
    if (opts.regime == "hp") return std::ceil(inv * std::log(std::max(2, n)));
    return inv;
}

std::vector<NodeId> resolve_base(const std::string& policy, const DistanceSpace& space,
                                 std::uint64_t seed) {
    if (policy == "wp") return {find_well_positioned(space, derive_seed(seed, kStreamBase))};
    if (policy == "relaxed-wp")
        return {find_well_positioned_relaxed(space, derive_seed(seed, kStreamBase))};
    if (policy.rfind("uniform:", 0) == 0) {
        int b = 0;
        try {
            b = std::stoi(policy.substr(8));
        } catch (...) {
            throw Error("bad base policy: " + policy);
        }
        if (b < 1) throw Error("uniform base size must be positive");
        Rng rng(derive_seed(seed, kStreamBase));
        auto ids = rng.sample_without_replacement(space.size(), std::min(space.size(), b));
        return std::vector<NodeId>(ids.begin(), ids.end());
    }
    throw Error("bad base policy: " + policy);
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& given, std::ostream& err) {
    if (given) return *given;
    std::random_device dev;
    std::uint64_t seed = (static_cast<std::uint64_t>(dev()) << 32) ^ dev();
    err << "seed " << seed << "\n";
    return seed;
}

WeightedSample build_sample(const DistanceSpace& space, const SampleOpts& opts,
                            std::uint64_t seed, bool pairs_method = false) {
    auto base = resolve_base(opts.base, space, seed);
    auto coeffs = compute_coefficients(space, base);
    return draw_sample(coeffs, resolve_k(opts, space.size(), pairs_method),
                       derive_seed(seed, kStreamSample));
}

void write_report(std::ostream& out, const std::string& method,
                  const std::vector<double>& w_hat, const std::vector<double>* w_exact) {
    const int n = static_cast<int>(w_hat.size());
    out << "method,v,w_hat,cc_hat";
    if (w_exact) out << ",w_exact,cc_exact";
    out << "\n";
    auto cc_of = [&](double w) {
        return w == 0.0 ? std::numeric_limits<double>::infinity() : (n - 1) / w;
    };
    for (int v = 0; v < n; ++v) {
        out << method << "," << v << "," << format_double(w_hat[static_cast<std::size_t>(v)])
            << "," << format_double(cc_of(w_hat[static_cast<std::size_t>(v)]));
        if (w_exact)
            out << "," << format_double((*w_exact)[static_cast<std::size_t>(v)]) << ","
                << format_double(cc_of((*w_exact)[static_cast<std::size_t>(v)]));
        out << "\n";
    }
}

harness::TrialConfig parse_eval_config(const std::string& text) {
    harness::TrialConfig cfg;
    cfg.space.kind = harness::InstanceKind::Cloud;
    cfg.space.n = 100;
    cfg.trials = 100;
    bool have_instance_seed = false;
    std::istringstream stream(text);
    std::string raw;
    int number = 0;
    double epsilon = 0.0;
    std::string regime = "cv";
    while (std::getline(stream, raw)) {
        ++number;
        if (auto pos = raw.find('#'); pos != std::string::npos) raw.erase(pos);
        if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto eq = raw.find('=');
        if (eq == std::string::npos)
            throw ParseError("line " + std::to_string(number) + ": expected key=value");
        std::string key = raw.substr(0, eq);
        std::string value = raw.substr(eq + 1);
        auto strip = [](std::string& s) {
            s.erase(0, s.find_first_not_of(" \t\r"));
            s.erase(s.find_last_not_of(" \t\r") + 1);
        };
        strip(key);
        strip(value);
        try {
            if (key == "instance") cfg.space.kind = harness::instance_kind_from_name(value);
            else if (key == "n") cfg.space.n = std::stoi(value);
            else if (key == "param") cfg.space.param = std::stod(value);
            else if (key == "dim") cfg.space.dim = std::stoi(value);
            else if (key == "instance_seed") {
                cfg.space.seed = std::stoull(value);
                have_instance_seed = true;
            } else if (key == "method") {
                if (value == "weighted") cfg.method = harness::Method::Weighted;
                else if (value == "uniform") cfg.method = harness::Method::Uniform;
                else if (value == "pairs") cfg.method = harness::Method::Pairs;
                else throw Error("unknown method: " + value);
            } else if (key == "k") cfg.k = std::stod(value);
            else if (key == "epsilon") epsilon = std::stod(value);
            else if (key == "regime") regime = value;
            else if (key == "base") {
                if (value == "wp") cfg.base = harness::BasePolicy::WellPositioned;
                else if (value == "relaxed-wp") cfg.base = harness::BasePolicy::RelaxedWp;
                else if (value.rfind("uniform:", 0) == 0) {
                    cfg.base = harness::BasePolicy::UniformB;
                    cfg.base_b = std::stoi(value.substr(8));
                } else throw Error("unknown base policy: " + value);
            } else if (key == "trials") cfg.trials = std::stoi(value);
            else if (key == "seed") cfg.seed = std::stoull(value);
            else if (key == "probes") cfg.probes = std::stoi(value);
            else if (key == "threshold") cfg.rel_err_threshold = std::stod(value);
            else if (key == "cache") cfg.cache_distances = std::stoi(value) != 0;
            else throw Error("unknown key: " + key);
        } catch (const Error&) {
            throw;
        } catch (const std::exception&) {
            throw ParseError("line " + std::to_string(number) + ": bad value for " + key);
        }
    }
    cfg.epsilon = epsilon;
    if (cfg.k <= 0.0) {
        if (!(epsilon > 0.0)) throw Error("eval config needs k= or epsilon=");
        SampleOpts opts;
        opts.epsilon = epsilon;
        opts.regime = regime == "hp" ? "hp" : "cv";
        cfg.k = resolve_k(opts, cfg.space.n, cfg.method == harness::Method::Pairs);
    }
    if (!have_instance_seed) cfg.space.seed = derive_seed(cfg.seed, 0x1257);
    return cfg;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Weighted-sample estimation of distance sums, closeness centrality,\n"
                 "point queries and all-pairs distance sums, with exact oracles and a\n"
                 "Monte-Carlo evaluation harness."};
    app.name("distsketch");
    app.require_subcommand(1);

    std::optional<std::uint64_t> seed_opt;

    // ---- sample ----
    SpaceOpts sample_space;
    SampleOpts sample_opts;
    auto* sub_sample = app.add_subcommand("sample", "compute coefficients and save a weighted sample");
    add_space_options(sub_sample, sample_space);
    add_sample_options(sub_sample, sample_opts);
    sub_sample->add_option("--seed", seed_opt, "RNG seed (drawn and printed when absent)");
    sub_sample->callback([&]() {
        std::uint64_t seed = resolve_seed(seed_opt, err);
        DistanceSpace space = load_space(sample_space);
        auto sample = build_sample(space, sample_opts, seed);
        sample.seed = seed;  // master seed; reruns reproduce the file
        out << io::serialize_sample(sample, space.size());
    });

    // ---- all-nodes ----
    SpaceOpts allnodes_space;
    SampleOpts allnodes_opts;
    std::string allnodes_method = "weighted";
    bool allnodes_exact = false;
    auto* sub_all = app.add_subcommand("all-nodes", "estimate W(v) and centrality for every node");
    add_space_options(sub_all, allnodes_space);
    add_sample_options(sub_all, allnodes_opts);
    sub_all->add_option("--seed", seed_opt, "RNG seed");
    sub_all->add_option("--method", allnodes_method,
                        "weighted (inverse-probability) or uniform (scaled sample average)")
        ->check(CLI::IsMember({"weighted", "uniform"}));
    sub_all->add_flag("--with-exact", allnodes_exact, "append oracle columns");
    sub_all->callback([&]() {
        std::uint64_t seed = resolve_seed(seed_opt, err);
        DistanceSpace space = load_space(allnodes_space);
        EstimateVector est;
        if (allnodes_method == "uniform") {
            int q_size = std::min(space.size(),
                                  std::max(1, static_cast<int>(resolve_k(
                                                 allnodes_opts, space.size(), false))));
            est = uniform_estimate_all(space, q_size, derive_seed(seed, kStreamMethod));
        } else {
            est = estimate_all_nodes(space, build_sample(space, allnodes_opts, seed));
        }
        std::vector<double> exact;
        if (allnodes_exact) exact = oracle::exact_w_all(space);
        write_report(out, allnodes_method, est.w_hat, allnodes_exact ? &exact : nullptr);
    });

    // ---- query ----
    SpaceOpts query_space;
    SampleOpts query_opts;
    std::string sample_path, coords_text;
    NodeId query_node = -1;
    auto* sub_query = app.add_subcommand("query", "estimate W at a query point from a sample");
    add_space_options(sub_query, query_space);
    add_sample_options(sub_query, query_opts);
    sub_query->add_option("--seed", seed_opt, "RNG seed");
    sub_query->add_option("--sample", sample_path, "previously saved sample file");
    sub_query->add_option("--node", query_node, "query node id");
    sub_query->add_option("--coords", coords_text,
                          "comma-separated query coordinates (point sets only)");
    sub_query->callback([&]() {
        DistanceSpace space = load_space(query_space);
        WeightedSample sample;
        if (!sample_path.empty()) {
            sample = io::parse_sample(io::read_file(sample_path));
        } else {
            std::uint64_t seed = resolve_seed(seed_opt, err);
            sample = build_sample(space, query_opts, seed);
        }
        out << "z,w_hat\n";
        if (!coords_text.empty()) {
            std::vector<double> coords;
            std::istringstream cs(coords_text);
            std::string tok;
            while (std::getline(cs, tok, ',')) {
                try {
                    coords.push_back(std::stod(tok));
                } catch (const std::exception&) {
                    throw Error("bad coordinate: " + tok);
                }
            }
            double est = estimate_point(space, sample, std::span<const double>(coords));
            out << "point," << format_double(est) << "\n";
        } else {
            if (query_node < 0) throw Error("provide --node or --coords");
            double est = estimate_point(space, sample, query_node);
            out << query_node << "," << format_double(est) << "\n";
        }
    });

    // ---- aps ----
    SpaceOpts aps_space;
    SampleOpts aps_opts;
    std::string aps_method = "nodes";
    auto* sub_aps = app.add_subcommand("aps", "estimate the all-pairs distance sum");
    add_space_options(sub_aps, aps_space);
    add_sample_options(sub_aps, aps_opts);
    sub_aps->add_option("--seed", seed_opt, "RNG seed");
    sub_aps->add_option("--method", aps_method, "nodes (half-sum of estimates) or pairs")
        ->check(CLI::IsMember({"nodes", "pairs"}));
    sub_aps->callback([&]() {
        std::uint64_t seed = resolve_seed(seed_opt, err);
        DistanceSpace space = load_space(aps_space);
        std::uint64_t evals0 = space.distance_evals() + space.sssp_calls();
        double estimate = 0.0;
        double k_used = 0.0;
        if (aps_method == "pairs") {
            if (space.graph_backed())
                throw Error("--method pairs requires a point-set space");
            NodeId anchor = find_well_positioned_relaxed(space, derive_seed(seed, kStreamBase));
            auto coeffs = compute_coefficients(space, std::vector<NodeId>{anchor});
            auto gamma_dist = normalize_coefficients(coeffs);
            auto rho = compute_rho(space, anchor);
            int k_pairs = std::max(1, static_cast<int>(resolve_k(aps_opts, space.size(), true)));
            auto pairs = sample_pairs(gamma_dist, rho, k_pairs, derive_seed(seed, kStreamMethod));
            estimate = estimate_aps_pairs(space, pairs);
            k_used = k_pairs;
        } else {
            auto sample = build_sample(space, aps_opts, seed);
            estimate = aps_from_estimates(estimate_all_nodes(space, sample));
            k_used = sample.k;
        }
        std::uint64_t evals = space.distance_evals() + space.sssp_calls() - evals0;
        out << "aps_estimate,k,distance_evals,seed\n"
            << format_double(estimate) << "," << format_double(k_used) << "," << evals << ","
            << seed << "\n";
    });

    // ---- median ----
    SpaceOpts median_space;
    SampleOpts median_opts;
    std::string median_method = "weighted";
    double median_epsilon = 0.25, median_delta = 0.05;
    bool median_verify = false;
    auto* sub_median = app.add_subcommand("median", "approximate 1-median");
    add_space_options(sub_median, median_space);
    add_sample_options(sub_median, median_opts);
    sub_median->add_option("--seed", seed_opt, "RNG seed");
    sub_median->add_option("--method", median_method, "weighted or uniform")
        ->check(CLI::IsMember({"weighted", "uniform"}));
    sub_median->add_option("--median-epsilon", median_epsilon,
                           "accuracy for the uniform method (default 0.25)");
    sub_median->add_option("--delta", median_delta,
                           "failure probability for the uniform method (default 0.05)");
    sub_median->add_flag("--verify", median_verify, "recompute exact W at the winner");
    sub_median->callback([&]() {
        std::uint64_t seed = resolve_seed(seed_opt, err);
        DistanceSpace space = load_space(median_space);
        NodeId winner = 0;
        double w_value = 0.0;
        if (median_method == "uniform") {
            double eps = median_opts.epsilon > 0.0 ? median_opts.epsilon : median_epsilon;
            auto res = uniform_median_detail(space, eps, median_delta,
                                             derive_seed(seed, kStreamMethod));
            winner = res.node;
            w_value = res.scaled_estimate;
        } else {
            auto sample = build_sample(space, median_opts, seed);
            auto est = estimate_all_nodes(space, sample);
            winner = approx_median(est);
            w_value = est.w_hat[static_cast<std::size_t>(winner)];
        }
        out << "method,node,w_hat" << (median_verify ? ",w_exact" : "") << "\n";
        out << median_method << "," << winner << "," << format_double(w_value);
        if (median_verify) out << "," << format_double(space.single_source(winner).sum);
        out << "\n";
    });

    // ---- exact ----
    SpaceOpts exact_space;
    auto* sub_exact = app.add_subcommand("exact", "exact W(v) and centrality via the oracle");
    add_space_options(sub_exact, exact_space);
    sub_exact->callback([&]() {
        DistanceSpace space = load_space(exact_space);
        auto w = oracle::exact_w_all(space);
        write_report(out, "exact", w, nullptr);
    });

    // ---- reduce-triangle ----
    std::string signed_path;
    auto* sub_reduce = app.add_subcommand(
        "reduce-triangle", "reduce negative-triangle detection to an all-pairs-sum instance");
    sub_reduce->add_option("file", signed_path, "signed edge-list file")->required();
    sub_reduce->callback([&]() {
        auto g = io::parse_signed_edge_list(io::read_file(signed_path));
        auto reduced = hardness::reduce(g);
        bool verdict = hardness::detect_negative_triangle_via_aps(g);
        out << "# negative_triangle " << (verdict ? "true" : "false") << "\n";
        long long m = static_cast<long long>(reduced.n) * (reduced.n - 1) / 2;
        out << reduced.n << " " << m << "\n";
        for (int i = 0; i < reduced.n; ++i)
            for (int j = i + 1; j < reduced.n; ++j)
                out << i << " " << j << " " << format_double(reduced.twice_at(i, j) / 2.0)
                    << "\n";
    });

    // ---- eval ----
    std::string config_path;
    auto* sub_eval = app.add_subcommand("eval", "seeded Monte-Carlo error measurement");
    sub_eval->add_option("--config", config_path, "flat key=value config file")->required();
    sub_eval->callback([&]() {
        auto cfg = parse_eval_config(io::read_file(config_path));
        auto report = harness::run_trials(cfg);
        out << "v,exact,mean,variance,nrmse\n";
        for (const auto& t : report.targets) {
            if (t.v < 0) out << "aps";
            else out << t.v;
            out << "," << format_double(t.exact) << "," << format_double(t.mean) << ","
                << format_double(t.variance) << "," << format_double(t.nrmse) << "\n";
        }
        out << "# max_rel_err " << format_double(report.max_rel_err) << "\n";
        out << "# exceed_fraction " << format_double(report.exceed_fraction) << "\n";
        out << "# distance_evals " << report.distance_evals << "\n";
        out << "# sssp_calls " << report.sssp_calls << "\n";
        out << "# pps_constant " << format_double(report.pps_constant) << "\n";
    });

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace cli
}  // namespace distsketch
