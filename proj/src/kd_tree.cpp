#include "deltacore/kd_tree.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace deltacore {

namespace {
constexpr std::uint32_t kLeafSize = 16;
// Pruning tolerance: a subtree is skipped only when the query's distance to
// the splitting plane exceeds radius * (1 + kSlack), which dominates the
// rounding error of the coordinate subtraction, so no point passing the exact
// leaf test can be lost.
constexpr double kSlack = 1e-12;
}  // namespace

KdTree::KdTree(const PointCloud& cloud) : cloud_(&cloud) {
    if (cloud.metric() != Metric::euclidean)
        throw std::invalid_argument("KD-tree requires a Euclidean cloud");
    order_.resize(cloud.size());
    std::iota(order_.begin(), order_.end(), index_t{0});
    if (!order_.empty()) {
        nodes_.reserve(2 * order_.size() / kLeafSize + 2);
        root_ = build(0, static_cast<std::uint32_t>(order_.size()), 0);
    }
}

std::int32_t KdTree::build(std::uint32_t begin, std::uint32_t end, std::size_t depth) {
    Node node;
    node.begin = begin;
    node.end = end;
    if (end - begin <= kLeafSize) {
        node.leaf = true;
        nodes_.push_back(node);
        return static_cast<std::int32_t>(nodes_.size() - 1);
    }

    const std::uint32_t axis = static_cast<std::uint32_t>(depth % cloud_->dimension());
    const std::uint32_t mid = begin + (end - begin) / 2;
    std::nth_element(order_.begin() + begin, order_.begin() + mid, order_.begin() + end,
                     [&](index_t a, index_t b) {
                         return cloud_->point(a)[axis] < cloud_->point(b)[axis];
                     });
    node.axis = axis;
    node.split = cloud_->point(order_[mid])[axis];

    nodes_.push_back(node);
    const auto id = static_cast<std::int32_t>(nodes_.size() - 1);
    const auto left = build(begin, mid, depth + 1);
    const auto right = build(mid, end, depth + 1);
    nodes_[id].left = left;
    nodes_[id].right = right;
    return id;
}

void KdTree::query_node(std::int32_t id, index_t query, double radius, double pruning_radius,
                        std::vector<index_t>& out) const {
    const Node& node = nodes_[id];
    if (node.leaf) {
        for (std::uint32_t k = node.begin; k < node.end; ++k) {
            const index_t j = order_[k];
            if (cloud_->distance(query, j) <= radius) out.push_back(j);
        }
        return;
    }
    const double q = cloud_->point(query)[node.axis];
    const double diff = q - node.split;
    if (diff < 0.0) {
        query_node(node.left, query, radius, pruning_radius, out);
        if (-diff <= pruning_radius) query_node(node.right, query, radius, pruning_radius, out);
    } else {
        query_node(node.right, query, radius, pruning_radius, out);
        if (diff <= pruning_radius) query_node(node.left, query, radius, pruning_radius, out);
    }
}

std::vector<index_t> KdTree::radius_query(index_t query, double radius) const {
    std::vector<index_t> out;
    if (root_ < 0) return out;
    query_node(root_, query, radius, radius * (1.0 + kSlack), out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace deltacore
