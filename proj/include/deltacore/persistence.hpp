#pragma once

#include <cstddef>
#include <vector>

#include "deltacore/filtration.hpp"
#include "deltacore/flag_graph.hpp"
#include "deltacore/point_cloud.hpp"

namespace deltacore {

/// Half-open persistence interval [birth, death); death may be infinity.
struct Interval {
    double birth = 0.0;
    double death = 0.0;

    bool finite() const;
    double persistence() const;    // death - birth, infinity for essential classes
};

/// Multiset of intervals per homology degree, over the two-element field.
/// Zero-length intervals are never stored; the number of infinite intervals
/// in degree q equals the q-th Betti number of the final complex.
struct PersistenceDiagram {
    std::vector<std::vector<Interval>> degrees;    // index = degree q

    std::size_t max_degree() const { return degrees.empty() ? 0 : degrees.size() - 1; }
    const std::vector<Interval>& degree(std::size_t q) const;
    std::vector<std::size_t> infinite_counts() const;
};

/// Persistent homology of the filtration by boundary-matrix column reduction
/// over Z/2, degrees 0..max_degree. Requires max_degree + 1 <= filtration
/// max_dim, so every reported degree has its cofaces present.
PersistenceDiagram persistent_homology(const Filtration& filtration, std::size_t max_degree);

/// Betti numbers of VR(cloud, scale) in degrees 0..max_degree, read off as
/// the infinite-interval counts of the single-scale filtration.
std::vector<std::size_t> betti_numbers(const PointCloud& cloud, double scale,
                                       std::size_t max_degree);

/// Betti numbers of a flag complex given by its graph, degrees 0..max_degree.
std::vector<std::size_t> flag_betti(const FlagGraph& graph, std::size_t max_degree);

}  // namespace deltacore
