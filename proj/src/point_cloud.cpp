#include "deltacore/point_cloud.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace deltacore {

PointCloud PointCloud::from_points(std::vector<std::vector<double>> points) {
    PointCloud cloud;
    cloud.metric_ = Metric::euclidean;
    cloud.count_ = static_cast<index_t>(points.size());
    if (points.empty()) return cloud;

    cloud.dim_ = points.front().size();
    if (cloud.dim_ == 0) throw std::invalid_argument("points must have dimension >= 1");
    cloud.data_.reserve(points.size() * cloud.dim_);
    for (const auto& p : points) {
        if (p.size() != cloud.dim_)
            throw std::invalid_argument("all points must have identical dimension");
        cloud.data_.insert(cloud.data_.end(), p.begin(), p.end());
    }
    return cloud;
}

PointCloud PointCloud::from_distance_matrix(const std::vector<std::vector<double>>& matrix) {
    PointCloud cloud;
    cloud.metric_ = Metric::precomputed_matrix;
    cloud.count_ = static_cast<index_t>(matrix.size());
    cloud.dim_ = 0;
    const std::size_t n = matrix.size();
    cloud.data_.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (matrix[i].size() != n)
            throw std::invalid_argument("distance matrix must be square");
        for (std::size_t j = 0; j < n; ++j) {
            const double v = matrix[i][j];
            if (!(v >= 0.0))
                throw std::invalid_argument("distance matrix entries must be non-negative");
            if (i == j && v != 0.0)
                throw std::invalid_argument("distance matrix diagonal must be zero");
            if (j < i && matrix[j][i] != v)
                throw std::invalid_argument("distance matrix must be symmetric");
            cloud.data_.push_back(v);
        }
    }
    return cloud;
}

void PointCloud::check_index(index_t i) const {
    if (i >= count_)
        throw std::out_of_range("point index " + std::to_string(i) + " out of range (size " +
                                std::to_string(count_) + ")");
}

std::span<const double> PointCloud::point(index_t i) const {
    check_index(i);
    if (metric_ != Metric::euclidean)
        throw std::invalid_argument("precomputed-metric clouds have no coordinates");
    return {data_.data() + static_cast<std::size_t>(i) * dim_, dim_};
}

double PointCloud::distance(index_t i, index_t j) const {
    check_index(i);
    check_index(j);
    if (metric_ == Metric::precomputed_matrix)
        return data_[static_cast<std::size_t>(i) * count_ + j];
    const double* a = data_.data() + static_cast<std::size_t>(i) * dim_;
    const double* b = data_.data() + static_cast<std::size_t>(j) * dim_;
    double sq = 0.0;
    for (std::size_t k = 0; k < dim_; ++k) {
        const double d = a[k] - b[k];
        sq += d * d;
    }
    return std::sqrt(sq);
}

double PointCloud::diameter() const {
    double maxd = 0.0;
    for (index_t i = 0; i + 1 < count_; ++i)
        for (index_t j = i + 1; j < count_; ++j) maxd = std::max(maxd, distance(i, j));
    return maxd;
}

PointCloud PointCloud::subset(std::span<const index_t> indices) const {
    for (index_t i : indices) check_index(i);
    PointCloud out;
    out.metric_ = metric_;
    out.count_ = static_cast<index_t>(indices.size());
    out.dim_ = dim_;
    if (metric_ == Metric::euclidean) {
        out.data_.reserve(indices.size() * dim_);
        for (index_t i : indices) {
            const double* p = data_.data() + static_cast<std::size_t>(i) * dim_;
            out.data_.insert(out.data_.end(), p, p + dim_);
        }
    } else {
        out.data_.reserve(indices.size() * indices.size());
        for (index_t i : indices)
            for (index_t j : indices)
                out.data_.push_back(data_[static_cast<std::size_t>(i) * count_ + j]);
    }
    return out;
}

double delta_from_percentile(const PointCloud& cloud, double p) {
    if (cloud.size() < 2)
        throw std::invalid_argument("percentile requires at least two points");
    if (!(p > 0.0) || p > 100.0)
        throw std::invalid_argument("percentile must lie in (0, 100]");

    const index_t n = cloud.size();
    std::vector<double> dists;
    dists.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (index_t i = 0; i + 1 < n; ++i)
        for (index_t j = i + 1; j < n; ++j) dists.push_back(cloud.distance(i, j));
    std::sort(dists.begin(), dists.end());

    const std::size_t m = dists.size();
    std::size_t rank = static_cast<std::size_t>(std::ceil(p / 100.0 * static_cast<double>(m)));
    rank = std::min(std::max<std::size_t>(rank, 1), m);
    return dists[rank - 1];
}

}  // namespace deltacore
