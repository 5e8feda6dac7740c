#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace deltacore {

using index_t = std::uint32_t;

enum class Metric { euclidean, precomputed_matrix };

/// A finite metric point cloud: either coordinate vectors with the Euclidean
/// metric, or an explicit distance matrix for arbitrary finite metric spaces.
/// Immutable after construction.
class PointCloud {
public:
    PointCloud() = default;

    /// All points must share the same dimension (>= 1).
    static PointCloud from_points(std::vector<std::vector<double>> points);

    /// Matrix must be square, symmetric, zero on the diagonal, non-negative.
    static PointCloud from_distance_matrix(const std::vector<std::vector<double>>& matrix);

    index_t size() const { return count_; }
    bool empty() const { return count_ == 0; }
    std::size_t dimension() const { return dim_; }
    Metric metric() const { return metric_; }

    std::span<const double> point(index_t i) const;

    /// Distance between points i and j. Symmetric, zero on the diagonal.
    double distance(index_t i, index_t j) const;

    /// Largest pairwise distance (0 for fewer than two points).
    double diameter() const;

    /// Sub-cloud on the given original indices, in the given order.
    PointCloud subset(std::span<const index_t> indices) const;

    const std::vector<double>& coordinates() const { return data_; }

private:
    void check_index(index_t i) const;

    Metric metric_ = Metric::euclidean;
    index_t count_ = 0;
    std::size_t dim_ = 0;           // coordinate dimension; 0 for precomputed
    std::vector<double> data_;      // row-major coordinates, or n*n distances
};

/// Nearest-rank p-th percentile (p in (0, 100]) of the n(n-1)/2 distinct-pair
/// distances: element ceil(p/100 * m) (1-based) of the sorted list of m values.
/// Requires at least two points.
double delta_from_percentile(const PointCloud& cloud, double p);

}  // namespace deltacore
