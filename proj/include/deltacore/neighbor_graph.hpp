#pragma once

#include <vector>

#include "deltacore/point_cloud.hpp"

namespace deltacore {

/// Closed delta-neighborhoods of a point cloud: neighborhoods[i] is the
/// sorted list of all j with distance(i, j) <= delta, always including i.
/// This is the 1-skeleton of the Vietoris-Rips complex at scale delta.
struct NeighborGraph {
    double delta = 0.0;
    std::vector<std::vector<index_t>> neighborhoods;

    index_t size() const { return static_cast<index_t>(neighborhoods.size()); }
};

enum class NeighborSearch {
    automatic,    // KD-tree for Euclidean clouds of dimension <= 20, else brute force
    kd_tree,
    brute_force,
};

/// Computes all closed delta-neighborhoods. Requires delta > 0. Both search
/// strategies produce identical output.
NeighborGraph neighborhoods(const PointCloud& cloud, double delta,
                            NeighborSearch strategy = NeighborSearch::automatic);

}  // namespace deltacore
