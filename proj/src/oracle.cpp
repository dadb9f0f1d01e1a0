#include "distsketch/oracle.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>

#include "distsketch/errors.hpp"

namespace distsketch {
namespace oracle {

namespace {

std::mutex cache_mutex;
std::unordered_map<std::uint64_t, std::shared_ptr<const ExactTable>> cache;

}  // namespace

std::shared_ptr<const ExactTable> exact_table(const DistanceSpace& space) {
    {
        std::lock_guard lock(cache_mutex);
        auto it = cache.find(space.fingerprint());
        if (it != cache.end()) return it->second;
    }
    const int n = space.size();
    auto table = std::make_shared<ExactTable>();
    table->n = n;
    table->dist.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    table->w.resize(static_cast<std::size_t>(n));
    for (NodeId s = 0; s < n; ++s) {
        DistanceVector row = space.single_source(s);
        std::copy(row.d.begin(), row.d.end(),
                  table->dist.begin() + static_cast<std::size_t>(s) * static_cast<std::size_t>(n));
        table->w[static_cast<std::size_t>(s)] = row.sum;
    }
    double total = 0.0;
    double diam = 0.0;
    for (NodeId s = 0; s < n; ++s) {
        total += table->w[static_cast<std::size_t>(s)];
        for (NodeId v = 0; v < n; ++v) diam = std::max(diam, table->at(s, v));
    }
    table->aps = 0.5 * total;
    table->diameter = diam;

    std::lock_guard lock(cache_mutex);
    auto [it, inserted] = cache.emplace(space.fingerprint(), std::move(table));
    return it->second;
}

std::vector<double> exact_w_all(const DistanceSpace& space) {
    return exact_table(space)->w;
}

double exact_aps(const DistanceSpace& space) { return exact_table(space)->aps; }

std::vector<double> exact_gamma_bar(const DistanceSpace& space) {
    auto table = exact_table(space);
    const int n = table->n;
    for (double w : table->w)
        if (w == 0.0) throw DegenerateMetric("all pairwise distances are zero");
    std::vector<double> bar(static_cast<std::size_t>(n), 0.0);
    for (int z = 0; z < n; ++z) {
        double w = table->w[static_cast<std::size_t>(z)];
        for (int v = 0; v < n; ++v)
            bar[static_cast<std::size_t>(v)] =
                std::max(bar[static_cast<std::size_t>(v)], table->at(z, v) / w);
    }
    return bar;
}

std::vector<double> exact_m_all(const DistanceSpace& space, int rank) {
    auto table = exact_table(space);
    const int n = table->n;
    if (rank < 1 || rank > n) throw Error("quantile rank out of range");
    std::vector<double> m(static_cast<std::size_t>(n));
    std::vector<double> row(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) row[static_cast<std::size_t>(v)] = table->at(u, v);
        std::nth_element(row.begin(), row.begin() + (rank - 1), row.end());
        m[static_cast<std::size_t>(u)] = row[static_cast<std::size_t>(rank - 1)];
    }
    return m;
}

double min_med(const DistanceSpace& space, int rank) {
    auto m = exact_m_all(space, rank);
    return *std::min_element(m.begin(), m.end());
}

std::vector<bool> classify_well_positioned(const DistanceSpace& space, int rank) {
    auto m = exact_m_all(space, rank);
    double threshold = 2.0 * *std::min_element(m.begin(), m.end());
    std::vector<bool> out(m.size());
    for (std::size_t v = 0; v < m.size(); ++v) out[v] = m[v] <= threshold;
    return out;
}

DistanceSpace matrix_twin(const DistanceSpace& space) {
    auto table = exact_table(space);
    return DistanceSpace(PointSet::from_matrix_unchecked(table->n, table->dist));
}

}  // namespace oracle
}  // namespace distsketch
