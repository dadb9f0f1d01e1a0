#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

#include "distsketch/apsum.hpp"
#include "distsketch/baseline.hpp"
#include "distsketch/errors.hpp"
#include "distsketch/estimation.hpp"
#include "distsketch/hardness.hpp"
#include "distsketch/harness.hpp"
#include "distsketch/io.hpp"
#include "distsketch/oracle.hpp"
#include "distsketch/rng.hpp"
#include "distsketch/sampling.hpp"

namespace py = pybind11;
using namespace distsketch;

namespace {

std::shared_ptr<DistanceSpace> make_graph(int n,
                                          const std::vector<std::tuple<int, int, double>>& edges) {
    std::vector<Edge> es;
    es.reserve(edges.size());
    for (const auto& [u, v, w] : edges) es.push_back({u, v, w});
    return std::make_shared<DistanceSpace>(Graph(n, std::move(es)));
}

std::shared_ptr<DistanceSpace> make_points(const std::vector<std::vector<double>>& rows) {
    if (rows.empty()) throw Error("need at least one point");
    int dim = static_cast<int>(rows[0].size());
    std::vector<double> flat;
    flat.reserve(rows.size() * rows[0].size());
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != dim) throw Error("ragged coordinate rows");
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return std::make_shared<DistanceSpace>(PointSet::from_coordinates(dim, std::move(flat)));
}

std::shared_ptr<DistanceSpace> make_matrix(const std::vector<std::vector<double>>& rows) {
    int n = static_cast<int>(rows.size());
    std::vector<double> flat;
    flat.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n) throw Error("matrix must be square");
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return std::make_shared<DistanceSpace>(PointSet::from_matrix(n, std::move(flat)));
}

hardness::SignedGraph signed_graph_of(
    int n, const std::vector<std::tuple<int, int, long long>>& edges) {
    std::vector<hardness::SignedEdge> es;
    es.reserve(edges.size());
    for (const auto& [u, v, w] : edges) es.push_back({u, v, w});
    return hardness::SignedGraph(n, std::move(es));
}

harness::TrialConfig config_of(const std::string& instance, int n, const std::string& method,
                               double k, int trials, std::uint64_t seed,
                               const std::string& base, double epsilon, int probes,
                               double threshold, double param, int dim,
                               std::uint64_t instance_seed, bool cache) {
    harness::TrialConfig cfg;
    cfg.space.kind = harness::instance_kind_from_name(instance);
    cfg.space.n = n;
    cfg.space.param = param;
    cfg.space.dim = dim;
    cfg.space.seed = instance_seed != 0 ? instance_seed : derive_seed(seed, 0x1257);
    if (method == "weighted") cfg.method = harness::Method::Weighted;
    else if (method == "uniform") cfg.method = harness::Method::Uniform;
    else if (method == "pairs") cfg.method = harness::Method::Pairs;
    else throw Error("unknown method: " + method);
    cfg.k = k;
    cfg.epsilon = epsilon;
    if (base == "wp") cfg.base = harness::BasePolicy::WellPositioned;
    else if (base == "relaxed-wp") cfg.base = harness::BasePolicy::RelaxedWp;
    else if (base.rfind("uniform:", 0) == 0) {
        cfg.base = harness::BasePolicy::UniformB;
        cfg.base_b = std::stoi(base.substr(8));
    } else throw Error("unknown base policy: " + base);
    cfg.trials = trials;
    cfg.seed = seed;
    cfg.probes = probes;
    cfg.rel_err_threshold = threshold;
    cfg.cache_distances = cache;
    return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Weighted-sample estimation of distance sums, closeness centrality and "
              "all-pairs distance sums";

    auto base_exc = py::register_exception<Error>(m, "DistsketchError", PyExc_RuntimeError);
    py::register_exception<DisconnectedGraph>(m, "DisconnectedGraph", base_exc);
    py::register_exception<UnreachablePair>(m, "UnreachablePair", base_exc);
    py::register_exception<NotAMetric>(m, "NotAMetric", base_exc);
    py::register_exception<BadDistribution>(m, "BadDistribution", base_exc);
    py::register_exception<DegenerateMetric>(m, "DegenerateMetric", base_exc);

    py::class_<DistanceVector>(m, "DistanceVector")
        .def_readonly("source", &DistanceVector::source)
        .def_readonly("d", &DistanceVector::d)
        .def_readonly("sum", &DistanceVector::sum);

    py::class_<DistanceSpace, std::shared_ptr<DistanceSpace>>(m, "DistanceSpace")
        .def_property_readonly("n", &DistanceSpace::size)
        .def("graph_backed", &DistanceSpace::graph_backed)
        .def("distance", &DistanceSpace::distance, py::arg("u"), py::arg("v"))
        .def("single_source", &DistanceSpace::single_source, py::arg("s"))
        .def("query_distance",
             [](const DistanceSpace& s, const std::vector<double>& coords, int v) {
                 return s.query_distance(coords, v);
             },
             py::arg("coords"), py::arg("v"))
        .def_property_readonly("distance_evals", &DistanceSpace::distance_evals)
        .def_property_readonly("sssp_calls", &DistanceSpace::sssp_calls);

    m.def("graph_space", &make_graph, py::arg("n"), py::arg("edges"),
          "Distance space over an undirected weighted graph.");
    m.def("point_space", &make_points, py::arg("coords"),
          "Distance space over Euclidean coordinate rows.");
    m.def("matrix_space", &make_matrix, py::arg("matrix"),
          "Distance space over an explicit, validated distance matrix.");
    m.def("parse_edge_list",
          [](const std::string& text) {
              return std::make_shared<DistanceSpace>(io::parse_edge_list(text));
          });
    m.def("parse_points", [](const std::string& text) {
        return std::make_shared<DistanceSpace>(io::parse_points(text));
    });

    py::class_<CoefficientVector>(m, "CoefficientVector")
        .def_readonly("gamma", &CoefficientVector::gamma)
        .def_readonly("base_set", &CoefficientVector::base_set);

    py::class_<WeightedSample>(m, "WeightedSample")
        .def_property_readonly("entries",
                               [](const WeightedSample& s) {
                                   std::vector<std::pair<int, double>> out;
                                   for (const auto& e : s.entries) out.emplace_back(e.v, e.p);
                                   return out;
                               })
        .def_readonly("k", &WeightedSample::k)
        .def_readonly("seed", &WeightedSample::seed)
        .def("__len__", [](const WeightedSample& s) { return s.entries.size(); });

    m.def("median_rank", &median_rank, py::arg("n"));
    m.def("quantile_rank", &quantile_rank, py::arg("n"), py::arg("fraction"));
    m.def("compute_coefficients",
          [](const DistanceSpace& space, const std::vector<NodeId>& base) {
              return compute_coefficients(space, base);
          },
          py::arg("space"), py::arg("base"));
    m.def("draw_sample", &draw_sample, py::arg("coeffs"), py::arg("k"), py::arg("seed"));
    m.def("median_distance", &median_distance, py::arg("space"), py::arg("u"), py::arg("rank"));
    m.def("find_well_positioned", &find_well_positioned, py::arg("space"), py::arg("seed"));
    m.def("find_well_positioned_relaxed", &find_well_positioned_relaxed, py::arg("space"),
          py::arg("seed"));
    m.def("sorted_uniform_draws", &sorted_uniform_draws, py::arg("k"), py::arg("seed"));
    m.def("draw_multiset",
          [](const std::vector<double>& probs, int k, std::uint64_t seed) {
              return draw_multiset(probs, k, seed);
          },
          py::arg("probs"), py::arg("k"), py::arg("seed"));

    m.def("estimate_point",
          [](const DistanceSpace& space, const WeightedSample& sample, NodeId z) {
              return estimate_point(space, sample, z);
          },
          py::arg("space"), py::arg("sample"), py::arg("z"));
    m.def("estimate_point_coords",
          [](const DistanceSpace& space, const WeightedSample& sample,
             const std::vector<double>& coords) {
              return estimate_point(space, sample, coords);
          },
          py::arg("space"), py::arg("sample"), py::arg("coords"));
    m.def("estimate_all_nodes",
          [](const DistanceSpace& space, const WeightedSample& sample) {
              return estimate_all_nodes(space, sample).w_hat;
          },
          py::arg("space"), py::arg("sample"), py::call_guard<py::gil_scoped_release>());
    m.def("closeness",
          [](const std::vector<double>& w_hat) {
              EstimateVector est;
              est.w_hat = w_hat;
              return closeness(est).cc;
          },
          py::arg("w_hat"));
    m.def("approx_median",
          [](const std::vector<double>& w_hat) {
              EstimateVector est;
              est.w_hat = w_hat;
              return approx_median(est);
          },
          py::arg("w_hat"));

    py::class_<RhoVector>(m, "RhoVector")
        .def_readonly("rho", &RhoVector::rho)
        .def_readonly("anchor", &RhoVector::anchor)
        .def_readonly("w_rough", &RhoVector::w_rough);

    py::class_<PairSample>(m, "PairSample")
        .def_property_readonly("pairs",
                               [](const PairSample& s) {
                                   std::vector<std::tuple<int, int, double>> out;
                                   for (const auto& p : s.pairs)
                                       out.emplace_back(p.i, p.j, p.p);
                                   return out;
                               })
        .def_readonly("k", &PairSample::k)
        .def_readonly("seed", &PairSample::seed);

    m.def("aps_from_estimates",
          [](const std::vector<double>& w_hat) {
              EstimateVector est;
              est.w_hat = w_hat;
              return aps_from_estimates(est);
          },
          py::arg("w_hat"));
    m.def("compute_rho", &compute_rho, py::arg("space"), py::arg("z"));
    m.def("normalize_coefficients", &normalize_coefficients, py::arg("coeffs"));
    m.def("sample_pairs",
          [](const std::vector<double>& gamma, const RhoVector& rho, int k,
             std::uint64_t seed) { return sample_pairs(gamma, rho, k, seed); },
          py::arg("gamma"), py::arg("rho"), py::arg("k"), py::arg("seed"));
    m.def("estimate_aps_pairs", &estimate_aps_pairs, py::arg("space"), py::arg("pairs"),
          py::call_guard<py::gil_scoped_release>());

    m.def("uniform_estimate_w",
          [](const DistanceSpace& space, const std::vector<NodeId>& q, NodeId z) {
              return uniform_estimate_w(space, q, z);
          },
          py::arg("space"), py::arg("q"), py::arg("z"));
    m.def("uniform_median", &uniform_median, py::arg("space"), py::arg("epsilon"),
          py::arg("delta"), py::arg("seed"));

    m.def("exact_w_all", &oracle::exact_w_all, py::arg("space"),
          py::call_guard<py::gil_scoped_release>());
    m.def("exact_aps", &oracle::exact_aps, py::arg("space"),
          py::call_guard<py::gil_scoped_release>());
    m.def("exact_gamma_bar", &oracle::exact_gamma_bar, py::arg("space"));
    m.def("exact_m_all", &oracle::exact_m_all, py::arg("space"), py::arg("rank"));
    m.def("min_med", &oracle::min_med, py::arg("space"), py::arg("rank"));
    m.def("classify_well_positioned", &oracle::classify_well_positioned, py::arg("space"),
          py::arg("rank"));

    m.def("has_negative_triangle",
          [](int n, const std::vector<std::tuple<int, int, long long>>& edges) {
              return hardness::has_negative_triangle_bruteforce(signed_graph_of(n, edges));
          },
          py::arg("n"), py::arg("edges"));
    m.def("detect_negative_triangle_via_aps",
          [](int n, const std::vector<std::tuple<int, int, long long>>& edges) {
              return hardness::detect_negative_triangle_via_aps(signed_graph_of(n, edges));
          },
          py::arg("n"), py::arg("edges"));
    m.def("reduce_triangle",
          [](int n, const std::vector<std::tuple<int, int, long long>>& edges) {
              auto r = hardness::reduce(signed_graph_of(n, edges));
              std::vector<std::tuple<int, int, double>> out;
              for (int i = 0; i < r.n; ++i)
                  for (int j = i + 1; j < r.n; ++j)
                      out.emplace_back(i, j, r.twice_at(i, j) / 2.0);
              return std::make_pair(r.n, out);
          },
          py::arg("n"), py::arg("edges"));

    m.def("make_instance",
          [](const std::string& kind, int n, double param, int dim, std::uint64_t seed) {
              harness::InstanceSpec spec;
              spec.kind = harness::instance_kind_from_name(kind);
              spec.n = n;
              spec.param = param;
              spec.dim = dim;
              spec.seed = seed;
              return std::make_shared<DistanceSpace>(harness::make_instance(spec));
          },
          py::arg("kind"), py::arg("n"), py::arg("param") = 0.0, py::arg("dim") = 2,
          py::arg("seed") = 0);

    py::class_<harness::TargetStats>(m, "TargetStats")
        .def_readonly("v", &harness::TargetStats::v)
        .def_readonly("exact", &harness::TargetStats::exact)
        .def_readonly("mean", &harness::TargetStats::mean)
        .def_readonly("variance", &harness::TargetStats::variance)
        .def_readonly("nrmse", &harness::TargetStats::nrmse);

    py::class_<harness::ErrorReport>(m, "ErrorReport")
        .def_readonly("targets", &harness::ErrorReport::targets)
        .def_readonly("max_rel_err", &harness::ErrorReport::max_rel_err)
        .def_readonly("exceed_fraction", &harness::ErrorReport::exceed_fraction)
        .def_readonly("distance_evals", &harness::ErrorReport::distance_evals)
        .def_readonly("sssp_calls", &harness::ErrorReport::sssp_calls)
        .def_readonly("pps_constant", &harness::ErrorReport::pps_constant);

    m.def("evaluate",
          [](const std::string& instance, int n, const std::string& method, double k,
             int trials, std::uint64_t seed, const std::string& base, double epsilon,
             int probes, double threshold, double param, int dim,
             std::uint64_t instance_seed, bool cache) {
              auto cfg = config_of(instance, n, method, k, trials, seed, base, epsilon,
                                   probes, threshold, param, dim, instance_seed, cache);
              py::gil_scoped_release release;
              return harness::run_trials(cfg);
          },
          py::arg("instance"), py::arg("n"), py::arg("method"), py::arg("k"),
          py::arg("trials"), py::arg("seed"), py::arg("base") = "uniform:2",
          py::arg("epsilon") = 0.0, py::arg("probes") = 0, py::arg("threshold") = 0.0,
          py::arg("param") = 0.0, py::arg("dim") = 2, py::arg("instance_seed") = 0,
          py::arg("cache") = true,
          "Seeded Monte-Carlo error measurement against the exact oracle.");

    m.attr("__version__") = "0.1.0";
}
