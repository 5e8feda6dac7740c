#pragma once

#include <cstdint>
#include <vector>

#include "deltacore/point_cloud.hpp"

namespace deltacore {

/// Static KD-tree over a Euclidean point cloud, used for fixed-radius
/// neighbor queries. Leaf hits are accepted with the exact same comparison
/// as the brute-force path (cloud.distance(i, j) <= radius), so both
/// strategies return identical index sets; plane pruning is conservative.
class KdTree {
public:
    explicit KdTree(const PointCloud& cloud);

    /// Indices j (sorted ascending) with distance(query, j) <= radius,
    /// including the query point itself when radius >= 0.
    std::vector<index_t> radius_query(index_t query, double radius) const;

private:
    struct Node {
        double split = 0.0;
        std::uint32_t axis = 0;
        std::int32_t left = -1;     // child node ids; -1 = none
        std::int32_t right = -1;
        std::uint32_t begin = 0;    // leaf range into order_
        std::uint32_t end = 0;
        bool leaf = false;
    };

    std::int32_t build(std::uint32_t begin, std::uint32_t end, std::size_t depth);
    void query_node(std::int32_t node, index_t query, double radius,
                    double pruning_radius, std::vector<index_t>& out) const;

    const PointCloud* cloud_ = nullptr;
    std::vector<index_t> order_;
    std::vector<Node> nodes_;
    std::int32_t root_ = -1;
};

}  // namespace deltacore
