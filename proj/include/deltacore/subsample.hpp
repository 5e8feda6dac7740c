#pragma once

#include <cstdint>
#include <vector>

#include "deltacore/neighbor_graph.hpp"
#include "deltacore/point_cloud.hpp"

namespace deltacore {

struct RemovalRecord {
    index_t removed;
    index_t dominator;
    std::uint32_t sweep;    // 1-based sweep in which the removal was marked
};

/// Outcome of iterated removal of dominated points.
struct CoreResult {
    std::vector<index_t> surviving;        // sorted original indices
    std::vector<RemovalRecord> removed;    // in marking order
    std::uint32_t sweeps = 0;              // full passes performed, including the final empty one
};

/// True iff (N(i) ∩ active) ⊆ (N(j) ∩ active), where N are the closed
/// neighborhoods of `graph`. Subset test by linear merge of sorted lists.
/// Requires i != j and both indices active.
bool is_dominated(const NeighborGraph& graph, const std::vector<index_t>& active,
                  index_t i, index_t j);

/// Sweep engine shared by the point-cloud and flag-complex reductions:
/// repeatedly sweeps over active indices in ascending order; a point i is
/// marked on its first active, not-yet-marked neighbor j (ascending) whose
/// active closed neighborhood contains i's; marked points cannot dominate
/// within the same sweep; marks are applied at sweep end. Terminates when a
/// sweep marks nothing.
CoreResult collapse_dominated(const std::vector<std::vector<index_t>>& closed_neighborhoods);

/// The delta-core of a cloud: subsample with no dominated points.
/// Requires a non-empty cloud and delta > 0.
CoreResult delta_core(const PointCloud& cloud, double delta);

enum class Equivalence { equivalent, not_equivalent, inconclusive };

/// Whether Y and Z have isomorphic delta-neighborhood graphs. Cardinality and
/// sorted delta-degree sequences are checked first (any size); the exact
/// backtracking isomorphism search runs only up to `exact_limit` points, and
/// beyond it the result is `inconclusive` when the fast checks pass.
Equivalence delta_equivalent(const PointCloud& cloud_y, const PointCloud& cloud_z,
                             double delta, std::size_t exact_limit = 12);

/// Farthest-point (maxmin) subsampling of k points. The first point is drawn
/// uniformly from a generator seeded with `seed`; each following point
/// maximizes the minimum distance to the chosen set, ties broken by lowest
/// index. Returns sorted original indices.
std::vector<index_t> fps_subsample(const PointCloud& cloud, index_t k, std::uint64_t seed);

}  // namespace deltacore
