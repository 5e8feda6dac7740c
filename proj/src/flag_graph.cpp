#include "deltacore/flag_graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace deltacore {

FlagGraph FlagGraph::from_closed_adjacency(std::vector<std::vector<index_t>> adjacency) {
    const index_t n = static_cast<index_t>(adjacency.size());
    for (index_t v = 0; v < n; ++v) {
        const auto& nbrs = adjacency[v];
        if (!std::is_sorted(nbrs.begin(), nbrs.end()))
            throw std::invalid_argument("adjacency rows must be sorted");
        if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
            throw std::invalid_argument("adjacency rows must not contain duplicates");
        if (!nbrs.empty() && nbrs.back() >= n)
            throw std::invalid_argument("adjacency references a vertex out of range");
        if (!std::binary_search(nbrs.begin(), nbrs.end(), v))
            throw std::invalid_argument("closed adjacency must contain the vertex itself");
        for (const index_t u : nbrs)
            if (!std::binary_search(adjacency[u].begin(), adjacency[u].end(), v))
                throw std::invalid_argument("adjacency must be symmetric");
    }
    FlagGraph graph;
    graph.adjacency = std::move(adjacency);
    return graph;
}

FlagGraph FlagGraph::from_edges(index_t n,
                                const std::vector<std::pair<index_t, index_t>>& edges) {
    FlagGraph graph;
    graph.adjacency.resize(n);
    for (index_t v = 0; v < n; ++v) graph.adjacency[v].push_back(v);
    for (const auto& [u, v] : edges) {
        if (u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
        if (u == v) continue;
        graph.adjacency[u].push_back(v);
        graph.adjacency[v].push_back(u);
    }
    for (auto& nbrs : graph.adjacency) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    }
    return graph;
}

FlagGraph threshold_graph(const PointCloud& cloud, double epsilon) {
    if (!(epsilon >= 0.0)) throw std::invalid_argument("epsilon must be non-negative");
    const index_t n = cloud.size();
    FlagGraph graph;
    graph.adjacency.resize(n);
    for (index_t v = 0; v < n; ++v) graph.adjacency[v].push_back(v);
    for (index_t u = 0; u + 1 < n; ++u) {
        for (index_t v = u + 1; v < n; ++v) {
            if (cloud.distance(u, v) <= epsilon) {
                graph.adjacency[u].push_back(v);
                graph.adjacency[v].push_back(u);
            }
        }
    }
    for (auto& nbrs : graph.adjacency) std::sort(nbrs.begin(), nbrs.end());
    return graph;
}

FlagCoreResult flag_core(const FlagGraph& graph) {
    CoreResult collapsed = collapse_dominated(graph.adjacency);

    std::vector<index_t> rank(graph.size(), 0);
    for (std::size_t r = 0; r < collapsed.surviving.size(); ++r)
        rank[collapsed.surviving[r]] = static_cast<index_t>(r);

    FlagCoreResult result;
    result.core.adjacency.resize(collapsed.surviving.size());
    for (std::size_t r = 0; r < collapsed.surviving.size(); ++r) {
        const index_t v = collapsed.surviving[r];
        auto& row = result.core.adjacency[r];
        for (const index_t u : graph.adjacency[v])
            if (std::binary_search(collapsed.surviving.begin(), collapsed.surviving.end(), u))
                row.push_back(rank[u]);
    }
    result.surviving = std::move(collapsed.surviving);
    result.removed = std::move(collapsed.removed);
    result.sweeps = collapsed.sweeps;
    return result;
}

namespace {

void intersect_above(const std::vector<index_t>& a, const std::vector<index_t>& b,
                     index_t floor, std::vector<index_t>& out) {
    auto ia = std::upper_bound(a.begin(), a.end(), floor);
    auto ib = std::upper_bound(b.begin(), b.end(), floor);
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) {
            ++ia;
        } else if (*ib < *ia) {
            ++ib;
        } else {
            out.push_back(*ia);
            ++ia;
            ++ib;
        }
    }
}

void expand_cliques(const std::vector<std::vector<index_t>>& adj,
                    const std::vector<index_t>& candidates, std::size_t next_dim,
                    std::size_t max_dim, std::vector<std::size_t>& counts,
                    std::vector<std::vector<index_t>>& scratch) {
    for (const index_t u : candidates) {
        ++counts[next_dim];
        if (next_dim == max_dim) continue;
        auto& next = scratch[next_dim];
        next.clear();
        intersect_above(candidates, adj[u], u, next);
        if (!next.empty()) expand_cliques(adj, next, next_dim + 1, max_dim, counts, scratch);
    }
}

}  // namespace

std::vector<std::size_t> count_flag_simplices(const FlagGraph& graph, std::size_t max_dim) {
    std::vector<std::size_t> counts(max_dim + 1, 0);
    counts[0] = graph.size();
    if (max_dim == 0) return counts;

    std::vector<std::vector<index_t>> scratch(max_dim + 1);
    std::vector<index_t> seeds;
    for (index_t v = 0; v < graph.size(); ++v) {
        seeds.clear();
        const auto& nbrs = graph.adjacency[v];
        seeds.insert(seeds.end(), std::upper_bound(nbrs.begin(), nbrs.end(), v), nbrs.end());
        if (!seeds.empty()) expand_cliques(graph.adjacency, seeds, 1, max_dim, counts, scratch);
    }
    return counts;
}

std::vector<ReductionRow> core_reduction_table(const PointCloud& cloud,
                                               const std::vector<double>& scales,
                                               std::size_t max_dim) {
    if (cloud.empty()) throw std::invalid_argument("core_reduction_table requires a non-empty cloud");
    if (scales.empty()) throw std::invalid_argument("at least one scale is required");
    for (std::size_t s = 0; s < scales.size(); ++s) {
        if (!(scales[s] >= 0.0)) throw std::invalid_argument("scales must be non-negative");
        if (s > 0 && scales[s] <= scales[s - 1])
            throw std::invalid_argument("scales must be strictly ascending");
    }

    std::vector<ReductionRow> rows;
    rows.reserve(scales.size());
    for (const double scale : scales) {
        const FlagGraph graph = threshold_graph(cloud, scale);
        const auto before = count_flag_simplices(graph, max_dim);
        const FlagCoreResult core = flag_core(graph);
        const auto after = count_flag_simplices(core.core, max_dim);
        ReductionRow row;
        row.scale = scale;
        row.simplices_before = 0;
        row.simplices_after = 0;
        for (const std::size_t c : before) row.simplices_before += c;
        for (const std::size_t c : after) row.simplices_after += c;
        row.reduction_pct =
            100.0 * (1.0 - static_cast<double>(row.simplices_after) /
                               static_cast<double>(row.simplices_before));
        rows.push_back(row);
    }
    return rows;
}

}  // namespace deltacore
