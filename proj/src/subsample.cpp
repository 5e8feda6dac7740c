#include "deltacore/subsample.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>

namespace deltacore {

bool is_dominated(const NeighborGraph& graph, const std::vector<index_t>& active,
                  index_t i, index_t j) {
    const auto& ni = graph.neighborhoods.at(i);
    const auto& nj = graph.neighborhoods.at(j);
    std::size_t a = 0, q = 0;
    for (const index_t x : ni) {
        while (a < active.size() && active[a] < x) ++a;
        if (a == active.size()) break;
        if (active[a] != x) continue;
        while (q < nj.size() && nj[q] < x) ++q;
        if (q == nj.size() || nj[q] != x) return false;
    }
    return true;
}

CoreResult collapse_dominated(const std::vector<std::vector<index_t>>& closed_neighborhoods) {
    const index_t n = static_cast<index_t>(closed_neighborhoods.size());
    auto nbrs = closed_neighborhoods;    // pruned to the active set as points drop out
    std::vector<index_t> active(n);
    std::iota(active.begin(), active.end(), index_t{0});
    std::vector<char> alive(n, 1);
    std::vector<char> marked_now(n, 0);

    CoreResult result;
    std::vector<index_t> marks;
    for (;;) {
        ++result.sweeps;
        marks.clear();
        for (const index_t i : active) {
            const auto& ni = nbrs[i];
            for (const index_t j : ni) {
                if (j == i || marked_now[j]) continue;
                const auto& nj = nbrs[j];
                if (nj.size() < ni.size()) continue;
                if (!std::includes(nj.begin(), nj.end(), ni.begin(), ni.end())) continue;
                marked_now[i] = 1;
                marks.push_back(i);
                result.removed.push_back({i, j, result.sweeps});
                break;
            }
        }
        if (marks.empty()) break;
        for (const index_t r : marks) {
            alive[r] = 0;
            marked_now[r] = 0;
            nbrs[r].clear();
        }
        std::erase_if(active, [&](index_t v) { return !alive[v]; });
        for (const index_t v : active)
            std::erase_if(nbrs[v], [&](index_t w) { return !alive[w]; });
    }
    result.surviving = std::move(active);
    return result;
}

CoreResult delta_core(const PointCloud& cloud, double delta) {
    if (cloud.empty()) throw std::invalid_argument("delta_core requires a non-empty cloud");
    const NeighborGraph graph = neighborhoods(cloud, delta);
    return collapse_dominated(graph.neighborhoods);
}

namespace {

std::vector<index_t> sorted_degrees(const NeighborGraph& graph) {
    std::vector<index_t> degrees;
    degrees.reserve(graph.neighborhoods.size());
    for (const auto& nbrs : graph.neighborhoods)
        degrees.push_back(static_cast<index_t>(nbrs.size()));
    std::sort(degrees.begin(), degrees.end());
    return degrees;
}

std::vector<std::uint64_t> adjacency_masks(const NeighborGraph& graph) {
    const std::size_t n = graph.neighborhoods.size();
    std::vector<std::uint64_t> adj(n, 0);
    for (std::size_t v = 0; v < n; ++v)
        for (const index_t u : graph.neighborhoods[v])
            if (u != v) adj[v] |= std::uint64_t{1} << u;
    return adj;
}

bool extend_isomorphism(const std::vector<std::uint64_t>& adj_y,
                        const std::vector<std::uint64_t>& adj_z,
                        std::vector<index_t>& map, std::uint64_t used, index_t v) {
    const index_t n = static_cast<index_t>(adj_y.size());
    if (v == n) return true;
    for (index_t w = 0; w < n; ++w) {
        if (used >> w & 1) continue;
        if (std::popcount(adj_y[v]) != std::popcount(adj_z[w])) continue;
        bool consistent = true;
        for (index_t u = 0; u < v; ++u) {
            if ((adj_y[v] >> u & 1) != (adj_z[w] >> map[u] & 1)) {
                consistent = false;
                break;
            }
        }
        if (!consistent) continue;
        map[v] = w;
        if (extend_isomorphism(adj_y, adj_z, map, used | std::uint64_t{1} << w, v + 1))
            return true;
    }
    return false;
}

}  // namespace

Equivalence delta_equivalent(const PointCloud& cloud_y, const PointCloud& cloud_z,
                             double delta, std::size_t exact_limit) {
    if (!(delta > 0.0)) throw std::invalid_argument("delta must be positive");
    if (cloud_y.size() != cloud_z.size()) return Equivalence::not_equivalent;
    const NeighborGraph graph_y = neighborhoods(cloud_y, delta);
    const NeighborGraph graph_z = neighborhoods(cloud_z, delta);
    if (sorted_degrees(graph_y) != sorted_degrees(graph_z)) return Equivalence::not_equivalent;

    const std::size_t n = graph_y.neighborhoods.size();
    if (n > exact_limit || n > 64) return Equivalence::inconclusive;
    const auto adj_y = adjacency_masks(graph_y);
    const auto adj_z = adjacency_masks(graph_z);
    std::vector<index_t> map(n, 0);
    return extend_isomorphism(adj_y, adj_z, map, 0, 0) ? Equivalence::equivalent
                                                       : Equivalence::not_equivalent;
}

std::vector<index_t> fps_subsample(const PointCloud& cloud, index_t k, std::uint64_t seed) {
    const index_t n = cloud.size();
    if (k < 1 || k > n) throw std::out_of_range("fps_subsample: k must be in [1, n]");

    std::mt19937_64 rng(seed);
    const index_t first = std::uniform_int_distribution<index_t>(0, n - 1)(rng);

    std::vector<index_t> chosen;
    chosen.reserve(k);
    chosen.push_back(first);
    std::vector<char> picked(n, 0);
    picked[first] = 1;
    std::vector<double> min_dist(n);
    for (index_t i = 0; i < n; ++i) min_dist[i] = cloud.distance(i, first);

    while (chosen.size() < k) {
        index_t best = n;
        double best_dist = -1.0;
        for (index_t i = 0; i < n; ++i) {
            if (!picked[i] && min_dist[i] > best_dist) {
                best_dist = min_dist[i];
                best = i;
            }
        }
        picked[best] = 1;
        chosen.push_back(best);
        for (index_t i = 0; i < n; ++i)
            if (!picked[i]) min_dist[i] = std::min(min_dist[i], cloud.distance(i, best));
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

}  // namespace deltacore
