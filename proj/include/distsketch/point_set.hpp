#pragma once

#include <cstdint>
#include <vector>

namespace distsketch {

/// Points of a finite metric space, either as Euclidean coordinates or as an
/// explicit symmetric distance matrix.
class PointSet {
   public:
    enum class Mode { Coordinates, Matrix };

    /// coords holds n*dim values, row-major.
    static PointSet from_coordinates(int dim, std::vector<double> coords);

    /// matrix holds n*n values, row-major. Validates symmetry, zero diagonal,
    /// nonnegativity and the triangle inequality (tolerance 1e-9).
    static PointSet from_matrix(int n, std::vector<double> matrix);

    /// Skips metric validation; for matrices produced by exact shortest-path
    /// computations, which satisfy the axioms by construction.
    static PointSet from_matrix_unchecked(int n, std::vector<double> matrix);

    int size() const noexcept { return n_; }
    Mode mode() const noexcept { return mode_; }
    int dim() const noexcept { return dim_; }
    const std::vector<double>& data() const noexcept { return data_; }

    /// Raw pairwise distance; no instrumentation.
    double resolve(int u, int v) const;

    /// Distance from an arbitrary coordinate query point to point v.
    double resolve_query(const double* coords, int v) const;

    std::uint64_t content_hash() const noexcept { return hash_; }

   private:
    PointSet(Mode mode, int n, int dim, std::vector<double> data);

    Mode mode_;
    int n_;
    int dim_;                    // coordinate mode only
    std::vector<double> data_;   // coords (n*dim) or matrix (n*n)
    std::uint64_t hash_ = 0;
};

}  // namespace distsketch
