#pragma once

#include <span>
#include <vector>

#include "deltacore/persistence.hpp"

namespace deltacore {

/// Bottleneck distance between two degree slices. Infinite intervals are
/// matched among themselves by sorted birth; differing infinite counts give
/// infinity. The finite part is exact: binary search over the candidate cost
/// set with a maximum-bipartite-matching feasibility test. Costs are sup-norm;
/// a point may match the diagonal at cost (death - birth) / 2.
double bottleneck_distance(std::span<const Interval> a, std::span<const Interval> b);

/// 1-Wasserstein distance between two degree slices, same infinite-interval
/// convention with costs summed. The finite part solves the augmented
/// (m+n) x (m+n) assignment problem exactly.
double wasserstein1_distance(std::span<const Interval> a, std::span<const Interval> b);

inline double bottleneck_distance(const std::vector<Interval>& a, const std::vector<Interval>& b) {
    return bottleneck_distance(std::span<const Interval>(a), std::span<const Interval>(b));
}
inline double wasserstein1_distance(const std::vector<Interval>& a, const std::vector<Interval>& b) {
    return wasserstein1_distance(std::span<const Interval>(a), std::span<const Interval>(b));
}

}  // namespace deltacore
