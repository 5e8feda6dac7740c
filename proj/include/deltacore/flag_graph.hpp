#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "deltacore/point_cloud.hpp"
#include "deltacore/subsample.hpp"

namespace deltacore {

/// A flag (clique) complex represented by its 1-skeleton: per vertex, the
/// sorted closed neighborhood (vertex included). Symmetric and reflexive.
/// Simplices are exactly the cliques of this graph and are enumerated on
/// demand, never stored.
struct FlagGraph {
    std::vector<std::vector<index_t>> adjacency;

    index_t size() const { return static_cast<index_t>(adjacency.size()); }

    /// Validates closedness, sortedness and symmetry.
    static FlagGraph from_closed_adjacency(std::vector<std::vector<index_t>> adjacency);

    /// Graph on n vertices from an undirected edge list.
    static FlagGraph from_edges(index_t n, const std::vector<std::pair<index_t, index_t>>& edges);
};

/// 1-skeleton of VR(cloud, epsilon): edge iff distance <= epsilon.
/// epsilon = 0 is allowed (edges only between coincident points).
FlagGraph threshold_graph(const PointCloud& cloud, double epsilon);

struct FlagCoreResult {
    FlagGraph core;                      // induced subgraph on survivors, reindexed by rank
    std::vector<index_t> surviving;      // sorted original vertex ids
    std::vector<RemovalRecord> removed;
    std::uint32_t sweeps = 0;
};

/// Core of a flag complex: repeatedly removes dominated vertices (closed
/// neighborhood contained in another's) until none remain. The core of a
/// flag complex is again flag, so the graph fully represents it.
FlagCoreResult flag_core(const FlagGraph& graph);

/// counts[d] = number of d-simplices (cliques of d+1 vertices) of the flag
/// complex, for d = 0..max_dim. Counting only; nothing is materialized.
std::vector<std::size_t> count_flag_simplices(const FlagGraph& graph, std::size_t max_dim);

struct ReductionRow {
    double scale;
    std::size_t simplices_before;
    std::size_t simplices_after;
    double reduction_pct;    // 100 * (1 - after/before)
};

/// For each scale: size of the max_dim-skeleton of the flag complex at that
/// scale, size of its core's skeleton, and the percentage reduction.
/// Scales must be ascending and non-negative.
std::vector<ReductionRow> core_reduction_table(const PointCloud& cloud,
                                               const std::vector<double>& scales,
                                               std::size_t max_dim);

}  // namespace deltacore
