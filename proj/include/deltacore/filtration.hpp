#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "deltacore/flag_graph.hpp"
#include "deltacore/point_cloud.hpp"

namespace deltacore {

/// An ordered filtration of simplices. Simplices are sorted by
/// (value, dimension, lexicographic vertex order), which puts every face
/// before its cofaces. Storage is flat: vertex lists live in one pool with a
/// fixed stride, so multi-million-simplex filtrations stay compact.
class Filtration {
public:
    Filtration() = default;

    std::size_t size() const { return values_.size(); }
    std::size_t max_dim() const { return max_dim_; }
    double threshold() const { return threshold_; }

    double value(std::size_t i) const { return values_[i]; }
    std::size_t dimension(std::size_t i) const { return dims_[i]; }
    std::span<const index_t> vertices(std::size_t i) const {
        return {vertices_.data() + i * stride_, static_cast<std::size_t>(dims_[i]) + 1};
    }

    /// Builds a filtration from explicit (vertices, value) pairs, sorting
    /// them canonically. Vertex lists must be strictly ascending. Throws if
    /// a simplex exceeds max_dim, a value exceeds the threshold, or a face
    /// of some simplex is missing.
    static Filtration from_simplices(std::vector<std::pair<std::vector<index_t>, double>> simplices,
                                     std::size_t max_dim, double threshold);

    class Builder;

private:
    friend class Builder;

    std::size_t stride_ = 1;
    std::size_t max_dim_ = 0;
    double threshold_ = 0.0;
    std::vector<double> values_;
    std::vector<std::uint8_t> dims_;
    std::vector<index_t> vertices_;    // stride_ slots per simplex
};

/// Append-only constructor used by the enumeration routines; sorts and
/// freezes on finish().
class Filtration::Builder {
public:
    Builder(std::size_t max_dim, double threshold, std::size_t vertex_count);

    void add(std::span<const index_t> vertices, double value);
    Filtration finish();

private:
    Filtration f_;
    std::size_t vertex_count_ = 0;
};

/// Vietoris-Rips filtration of the cloud: all cliques of the threshold graph
/// with at most max_dim+1 vertices, each valued by its largest pairwise
/// distance. Requires threshold > 0.
Filtration vr_filtration(const PointCloud& cloud, std::size_t max_dim, double threshold);

/// The max_dim-skeleton of a flag complex as a filtration with every value 0,
/// for homology of a fixed complex.
Filtration flag_filtration(const FlagGraph& graph, std::size_t max_dim);

struct SimplexCounts {
    std::vector<std::size_t> per_dim;    // index = dimension, 0..max_dim
    std::size_t total = 0;
};

SimplexCounts simplex_count(const Filtration& filtration);

}  // namespace deltacore
