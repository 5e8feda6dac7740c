#include "deltacore/neighbor_graph.hpp"

#include <algorithm>
#include <stdexcept>

#include "deltacore/kd_tree.hpp"

namespace deltacore {

namespace {

NeighborGraph brute_force(const PointCloud& cloud, double delta) {
    const index_t n = cloud.size();
    NeighborGraph graph;
    graph.delta = delta;
    graph.neighborhoods.resize(n);
    for (index_t i = 0; i < n; ++i) graph.neighborhoods[i].push_back(i);
    for (index_t i = 0; i + 1 < n; ++i) {
        for (index_t j = i + 1; j < n; ++j) {
            if (cloud.distance(i, j) <= delta) {
                graph.neighborhoods[i].push_back(j);
                graph.neighborhoods[j].push_back(i);
            }
        }
    }
    // Lists were filled self-first, then ascending per row; restore full order.
    for (auto& nbrs : graph.neighborhoods) std::sort(nbrs.begin(), nbrs.end());
    return graph;
}

NeighborGraph kd_search(const PointCloud& cloud, double delta) {
    NeighborGraph graph;
    graph.delta = delta;
    graph.neighborhoods.resize(cloud.size());
    const KdTree tree(cloud);
    for (index_t i = 0; i < cloud.size(); ++i)
        graph.neighborhoods[i] = tree.radius_query(i, delta);
    return graph;
}

}  // namespace

NeighborGraph neighborhoods(const PointCloud& cloud, double delta, NeighborSearch strategy) {
    if (!(delta > 0.0)) throw std::invalid_argument("delta must be positive");
    if (strategy == NeighborSearch::automatic)
        strategy = (cloud.metric() == Metric::euclidean && cloud.dimension() <= 20)
                       ? NeighborSearch::kd_tree
                       : NeighborSearch::brute_force;
    if (strategy == NeighborSearch::kd_tree && cloud.metric() != Metric::euclidean)
        throw std::invalid_argument("KD-tree search requires a Euclidean cloud");
    return strategy == NeighborSearch::kd_tree ? kd_search(cloud, delta)
                                               : brute_force(cloud, delta);
}

}  // namespace deltacore
