#include "deltacore/filtration.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace deltacore {

Filtration::Builder::Builder(std::size_t max_dim, double threshold, std::size_t vertex_count) {
    if (max_dim > 255) throw std::invalid_argument("max_dim must be at most 255");
    f_.max_dim_ = max_dim;
    f_.threshold_ = threshold;
    f_.stride_ = vertex_count == 0 ? 1 : std::min(max_dim, vertex_count - 1) + 1;
    vertex_count_ = vertex_count;
}

void Filtration::Builder::add(std::span<const index_t> vertices, double value) {
    if (vertices.empty()) throw std::invalid_argument("a simplex needs at least one vertex");
    if (vertices.size() > f_.stride_)
        throw std::invalid_argument("simplex dimension exceeds max_dim");
    if (!(value <= f_.threshold_)) throw std::invalid_argument("value exceeds the threshold");
    for (std::size_t k = 0; k < vertices.size(); ++k) {
        if (vertices[k] >= vertex_count_) throw std::out_of_range("vertex id out of range");
        if (k > 0 && vertices[k] <= vertices[k - 1])
            throw std::invalid_argument("vertex lists must be strictly ascending");
    }
    f_.values_.push_back(value);
    f_.dims_.push_back(static_cast<std::uint8_t>(vertices.size() - 1));
    const std::size_t offset = f_.vertices_.size();
    f_.vertices_.resize(offset + f_.stride_, 0);
    std::copy(vertices.begin(), vertices.end(), f_.vertices_.begin() + offset);
}

Filtration Filtration::Builder::finish() {
    const std::size_t m = f_.values_.size();
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), std::size_t{0});
    const std::size_t stride = f_.stride_;
    const auto* pool = f_.vertices_.data();
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (f_.values_[a] != f_.values_[b]) return f_.values_[a] < f_.values_[b];
        if (f_.dims_[a] != f_.dims_[b]) return f_.dims_[a] < f_.dims_[b];
        return std::lexicographical_compare(pool + a * stride, pool + a * stride + f_.dims_[a] + 1,
                                            pool + b * stride, pool + b * stride + f_.dims_[b] + 1);
    });

    std::vector<double> values(m);
    std::vector<std::uint8_t> dims(m);
    std::vector<index_t> vertices(m * stride);
    for (std::size_t r = 0; r < m; ++r) {
        const std::size_t i = order[r];
        values[r] = f_.values_[i];
        dims[r] = f_.dims_[i];
        std::copy(pool + i * stride, pool + (i + 1) * stride, vertices.begin() + r * stride);
    }
    f_.values_ = std::move(values);
    f_.dims_ = std::move(dims);
    f_.vertices_ = std::move(vertices);
    return std::move(f_);
}

Filtration Filtration::from_simplices(
    std::vector<std::pair<std::vector<index_t>, double>> simplices, std::size_t max_dim,
    double threshold) {
    std::map<std::vector<index_t>, double> by_vertices;
    std::size_t vertex_count = 0;
    for (const auto& [verts, value] : simplices) {
        if (verts.empty()) throw std::invalid_argument("a simplex needs at least one vertex");
        for (std::size_t k = 1; k < verts.size(); ++k)
            if (verts[k] <= verts[k - 1])
                throw std::invalid_argument("vertex lists must be strictly ascending");
        vertex_count = std::max<std::size_t>(vertex_count, verts.back() + 1);
        if (!by_vertices.emplace(verts, value).second)
            throw std::invalid_argument("duplicate simplex");
    }
    std::vector<index_t> face;
    for (const auto& [verts, value] : by_vertices) {
        if (verts.size() == 1) continue;
        for (std::size_t drop = 0; drop < verts.size(); ++drop) {
            face.clear();
            for (std::size_t k = 0; k < verts.size(); ++k)
                if (k != drop) face.push_back(verts[k]);
            const auto it = by_vertices.find(face);
            if (it == by_vertices.end()) throw std::invalid_argument("missing face");
            if (!(it->second <= value))
                throw std::invalid_argument("face value exceeds coface value");
        }
    }

    Builder builder(max_dim, threshold, vertex_count);
    for (const auto& [verts, value] : simplices) builder.add(verts, value);
    return builder.finish();
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

struct VrExpander {
    const PointCloud& cloud;
    const std::vector<std::vector<index_t>>& adj;
    std::size_t max_dim;
    Filtration::Builder& builder;
    std::vector<index_t> clique;
    std::vector<std::vector<index_t>> scratch;

    void expand(const std::vector<index_t>& candidates, double value) {
        const std::size_t depth = clique.size();
        for (const index_t u : candidates) {
            double extended = value;
            for (const index_t w : clique)
                extended = std::max(extended, cloud.distance(w, u));
            clique.push_back(u);
            builder.add(clique, extended);
            if (depth < max_dim) {
                auto& next = scratch[depth];
                next.clear();
                intersect_above(candidates, adj[u], u, next);
                if (!next.empty()) expand(next, extended);
            }
            clique.pop_back();
        }
    }
};

struct FlagExpander {
    const std::vector<std::vector<index_t>>& adj;
    std::size_t max_dim;
    Filtration::Builder& builder;
    std::vector<index_t> clique;
    std::vector<std::vector<index_t>> scratch;

    void expand(const std::vector<index_t>& candidates) {
        const std::size_t depth = clique.size();
        for (const index_t u : candidates) {
            clique.push_back(u);
            builder.add(clique, 0.0);
            if (depth < max_dim) {
                auto& next = scratch[depth];
                next.clear();
                intersect_above(candidates, adj[u], u, next);
                if (!next.empty()) expand(next);
            }
            clique.pop_back();
        }
    }
};

}  // namespace

Filtration vr_filtration(const PointCloud& cloud, std::size_t max_dim, double threshold) {
    if (cloud.empty()) throw std::invalid_argument("vr_filtration requires a non-empty cloud");
    if (!(threshold > 0.0)) throw std::invalid_argument("threshold must be positive");
    const FlagGraph graph = threshold_graph(cloud, threshold);

    Filtration::Builder builder(max_dim, threshold, cloud.size());
    VrExpander expander{cloud, graph.adjacency, max_dim, builder, {}, {}};
    expander.scratch.resize(max_dim + 1);
    std::vector<index_t> seeds;
    for (index_t v = 0; v < cloud.size(); ++v) {
        const index_t vert[1] = {v};
        builder.add(vert, 0.0);
        if (max_dim == 0) continue;
        const auto& nbrs = graph.adjacency[v];
        seeds.assign(std::upper_bound(nbrs.begin(), nbrs.end(), v), nbrs.end());
        if (!seeds.empty()) {
            expander.clique.assign(1, v);
            expander.expand(seeds, 0.0);
        }
    }
    return builder.finish();
}

Filtration flag_filtration(const FlagGraph& graph, std::size_t max_dim) {
    Filtration::Builder builder(max_dim, 0.0, graph.size());
    FlagExpander expander{graph.adjacency, max_dim, builder, {}, {}};
    expander.scratch.resize(max_dim + 1);
    std::vector<index_t> seeds;
    for (index_t v = 0; v < graph.size(); ++v) {
        const index_t vert[1] = {v};
        builder.add(vert, 0.0);
        if (max_dim == 0) continue;
        const auto& nbrs = graph.adjacency[v];
        seeds.assign(std::upper_bound(nbrs.begin(), nbrs.end(), v), nbrs.end());
        if (!seeds.empty()) {
            expander.clique.assign(1, v);
            expander.expand(seeds);
        }
    }
    return builder.finish();
}

SimplexCounts simplex_count(const Filtration& filtration) {
    SimplexCounts counts;
    counts.per_dim.assign(filtration.max_dim() + 1, 0);
    for (std::size_t i = 0; i < filtration.size(); ++i) ++counts.per_dim[filtration.dimension(i)];
    counts.total = filtration.size();
    return counts;
}

}  // namespace deltacore
