#include "distsketch/point_set.hpp"

#include <cmath>
#include <string>

#include "distsketch/errors.hpp"

namespace distsketch {

namespace {

constexpr double kTriangleTolerance = 1e-9;

std::uint64_t fnv1a(std::uint64_t h, const void* data, std::size_t len) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace

PointSet::PointSet(Mode mode, int n, int dim, std::vector<double> data)
    : mode_(mode), n_(n), dim_(dim), data_(std::move(data)) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    h = fnv1a(h, mode_ == Mode::Coordinates ? "coords" : "matrix", 6);
    h = fnv1a(h, &n_, sizeof n_);
    h = fnv1a(h, &dim_, sizeof dim_);
    h = fnv1a(h, data_.data(), data_.size() * sizeof(double));
    hash_ = h;
}

PointSet PointSet::from_coordinates(int dim, std::vector<double> coords) {
    if (dim <= 0) throw Error("point dimension must be positive");
    if (coords.empty() || coords.size() % static_cast<std::size_t>(dim) != 0)
        throw Error("coordinate payload is not a multiple of the dimension");
    for (double c : coords)
        if (!std::isfinite(c)) throw Error("coordinates must be finite");
    int n = static_cast<int>(coords.size() / static_cast<std::size_t>(dim));
    return PointSet(Mode::Coordinates, n, dim, std::move(coords));
}

PointSet PointSet::from_matrix(int n, std::vector<double> matrix) {
    if (n <= 0) throw Error("matrix must have at least one row");
    if (matrix.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
        throw Error("matrix payload size mismatch");
    auto at = [&](int i, int j) {
        return matrix[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                      static_cast<std::size_t>(j)];
    };
    for (int i = 0; i < n; ++i) {
        if (at(i, i) != 0.0) throw NotAMetric("nonzero diagonal entry");
        for (int j = 0; j < n; ++j) {
            double d = at(i, j);
            if (!std::isfinite(d) || d < 0.0) throw NotAMetric("negative or non-finite entry");
            if (d != at(j, i)) throw NotAMetric("matrix is not symmetric");
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (at(i, j) > at(i, k) + at(k, j) + kTriangleTolerance)
                    throw NotAMetric("triangle inequality violated at (" + std::to_string(i) +
                                     "," + std::to_string(j) + "," + std::to_string(k) + ")");
    return PointSet(Mode::Matrix, n, 0, std::move(matrix));
}

PointSet PointSet::from_matrix_unchecked(int n, std::vector<double> matrix) {
    if (n <= 0 ||
        matrix.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
        throw Error("matrix payload size mismatch");
    return PointSet(Mode::Matrix, n, 0, std::move(matrix));
}

double PointSet::resolve(int u, int v) const {
    if (mode_ == Mode::Matrix)
        return data_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
                     static_cast<std::size_t>(v)];
    const double* a = data_.data() + static_cast<std::size_t>(u) * static_cast<std::size_t>(dim_);
    const double* b = data_.data() + static_cast<std::size_t>(v) * static_cast<std::size_t>(dim_);
    double s = 0.0;
    for (int d = 0; d < dim_; ++d) {
        double diff = a[d] - b[d];
        s += diff * diff;
    }
    return std::sqrt(s);
}

double PointSet::resolve_query(const double* coords, int v) const {
    const double* b = data_.data() + static_cast<std::size_t>(v) * static_cast<std::size_t>(dim_);
    double s = 0.0;
    for (int d = 0; d < dim_; ++d) {
        double diff = coords[d] - b[d];
        s += diff * diff;
    }
    return std::sqrt(s);
}

}  // namespace distsketch
