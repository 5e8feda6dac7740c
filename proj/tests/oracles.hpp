#pragma once

#include <vector>

#include "deltacore/filtration.hpp"
#include "deltacore/persistence.hpp"

// Slow reference implementations used only by the tests. Both are written
// from first principles, independent of the library's algorithms: the
// diagram oracle goes through persistent Betti numbers computed as GF(2)
// matrix ranks, and the distance oracles enumerate every matching.
namespace oracles {

/// Diagram of the filtration in degrees 0..max_degree via inclusion-rank
/// formulas over the distinct filtration values. Zero-length intervals do
/// not appear. Degree slices are sorted by (birth, death).
deltacore::PersistenceDiagram rank_diagram(const deltacore::Filtration& filtration,
                                           std::size_t max_degree);

/// Exact bottleneck distance by enumerating all partial matchings.
/// Intended for slices of at most ~6 finite intervals each.
double exhaustive_bottleneck(const std::vector<deltacore::Interval>& a,
                             const std::vector<deltacore::Interval>& b);

/// Exact 1-Wasserstein distance by the same enumeration.
double exhaustive_wasserstein1(const std::vector<deltacore::Interval>& a,
                               const std::vector<deltacore::Interval>& b);

}  // namespace oracles
