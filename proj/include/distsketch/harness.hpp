#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "distsketch/distance_space.hpp"
#include "distsketch/sampling.hpp"

namespace distsketch {
namespace harness {

enum class InstanceKind { Path, Star, Clique, Geometric, ErdosRenyi, HeavyTail, Cloud };

/// Seeded instance generator parameters. param is the connection radius for
/// Geometric and the edge probability for ErdosRenyi; 0 selects a default
/// that keeps the expected degree moderate. dim applies to Cloud.
struct InstanceSpec {
    InstanceKind kind = InstanceKind::Cloud;
    int n = 0;
    double param = 0.0;
    int dim = 2;
    std::uint64_t seed = 0;
};

/// Builds the instance. Graph generators guarantee connectivity: Geometric
/// joins residual components through their closest cross pair, ErdosRenyi
/// seeds a random backbone chain before adding independent edges.
DistanceSpace make_instance(const InstanceSpec& spec);

InstanceKind instance_kind_from_name(const std::string& name);
std::string instance_kind_name(InstanceKind kind);

enum class Method { Weighted, Uniform, Pairs };
enum class BasePolicy { UniformB, WellPositioned, RelaxedWp };

struct TrialConfig {
    InstanceSpec space;
    Method method = Method::Weighted;
    double k = 0.0;          // sample size parameter (|Q| for Uniform, pair count for Pairs)
    double epsilon = 0.0;    // informational; used for the exceedance threshold default
    BasePolicy base = BasePolicy::UniformB;
    int base_b = 2;
    int trials = 1;
    std::uint64_t seed = 0;
    int probes = 0;               // 0 = every node
    double rel_err_threshold = 0.0;  // >0 enables exceedance counting
    bool cache_distances = true;  // run trials against the exact-matrix twin
};

struct TargetStats {
    NodeId v = -1;  // -1 marks the all-pairs-sum target
    double exact = 0.0;
    double mean = 0.0;
    double variance = 0.0;
    double nrmse = 0.0;
};

struct ErrorReport {
    std::vector<TargetStats> targets;
    double max_rel_err = 0.0;
    double exceed_fraction = 0.0;
    std::uint64_t distance_evals = 0;  // consumed by the trial loop
    std::uint64_t sssp_calls = 0;
    double pps_constant = 0.0;  // measured on the first trial's coefficients
};

/// Runs config.trials independent repetitions and aggregates estimator error
/// against oracle truth. Deterministic for a fixed config: per-trial seeds
/// are derived by counter mixing and results are reduced in trial order.
ErrorReport run_trials(const TrialConfig& config);

/// min over pairs (z,v) with dist(z,v) > 0 of gamma_v * W(z) / dist(z,v):
/// the approximate-PPS constant the coefficients achieve on this space.
double measure_pps_constant(const CoefficientVector& coeffs, const DistanceSpace& space);

/// Runs fn(0..count-1) on a small thread pool; iterations must be
/// independent. Used for trial loops, where each iteration owns slot i.
void parallel_for(int count, const std::function<void(int)>& fn);

}  // namespace harness
}  // namespace distsketch
