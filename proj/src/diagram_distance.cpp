#include "deltacore/diagram_distance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

namespace deltacore {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

double sup_cost(const Interval& a, const Interval& b) {
    return std::max(std::abs(a.birth - b.birth), std::abs(a.death - b.death));
}

struct SplitDiagram {
    std::vector<Interval> finite;
    std::vector<double> infinite_births;
};

SplitDiagram split(std::span<const Interval> intervals) {
    SplitDiagram out;
    for (const Interval& interval : intervals) {
        if (interval.finite())
            out.finite.push_back(interval);
        else
            out.infinite_births.push_back(interval.birth);
    }
    std::sort(out.infinite_births.begin(), out.infinite_births.end());
    return out;
}

/// Maximum matching between `left` (indices into one diagram) and the numbers
/// 0..right_count-1, with edges given by `edge`; true iff every left vertex is
/// matched. Hopcroft-Karp on the implicit graph.
template <typename EdgeFn>
bool saturates(const std::vector<std::uint32_t>& left, std::uint32_t right_count, EdgeFn edge) {
    const std::uint32_t nl = static_cast<std::uint32_t>(left.size());
    if (nl == 0) return true;
    if (nl > right_count) return false;

    std::vector<std::uint32_t> match_l(nl, kNone), match_r(right_count, kNone);
    std::vector<std::uint32_t> dist(nl, kNone);
    std::vector<char> visited(right_count, 0);
    std::queue<std::uint32_t> frontier;
    std::uint32_t matched = 0;

    auto augment = [&](auto&& self, std::uint32_t l) -> bool {
        for (std::uint32_t r = 0; r < right_count; ++r) {
            if (visited[r] || !edge(left[l], r)) continue;
            visited[r] = 1;
            const std::uint32_t l2 = match_r[r];
            if (l2 == kNone || (dist[l2] == dist[l] + 1 && self(self, l2))) {
                match_l[l] = r;
                match_r[r] = l;
                return true;
            }
        }
        dist[l] = kNone;
        return false;
    };

    for (;;) {
        std::fill(dist.begin(), dist.end(), kNone);
        for (std::uint32_t l = 0; l < nl; ++l) {
            if (match_l[l] == kNone) {
                dist[l] = 0;
                frontier.push(l);
            }
        }
        bool reachable_free = false;
        while (!frontier.empty()) {
            const std::uint32_t l = frontier.front();
            frontier.pop();
            for (std::uint32_t r = 0; r < right_count; ++r) {
                if (!edge(left[l], r)) continue;
                const std::uint32_t l2 = match_r[r];
                if (l2 == kNone) {
                    reachable_free = true;
                } else if (dist[l2] == kNone) {
                    dist[l2] = dist[l] + 1;
                    frontier.push(l2);
                }
            }
        }
        if (!reachable_free) break;
        std::fill(visited.begin(), visited.end(), 0);
        for (std::uint32_t l = 0; l < nl; ++l)
            if (match_l[l] == kNone && augment(augment, l)) ++matched;
        if (matched == nl) return true;
    }
    return matched == nl;
}

bool feasible(const std::vector<Interval>& a, const std::vector<Interval>& b, double c) {
    std::vector<std::uint32_t> required_a, required_b;
    for (std::uint32_t i = 0; i < a.size(); ++i)
        if (a[i].persistence() / 2 > c) required_a.push_back(i);
    for (std::uint32_t j = 0; j < b.size(); ++j)
        if (b[j].persistence() / 2 > c) required_b.push_back(j);
    if (required_a.size() > b.size() || required_b.size() > a.size()) return false;
    if (!saturates(required_a, static_cast<std::uint32_t>(b.size()),
                   [&](std::uint32_t i, std::uint32_t j) { return sup_cost(a[i], b[j]) <= c; }))
        return false;
    return saturates(required_b, static_cast<std::uint32_t>(a.size()),
                     [&](std::uint32_t j, std::uint32_t i) { return sup_cost(a[i], b[j]) <= c; });
}

/// Smallest feasible cost in ascending `candidates`; the last entry must be
/// feasible.
double smallest_feasible(const std::vector<Interval>& a, const std::vector<Interval>& b,
                         const std::vector<double>& candidates) {
    std::size_t lo = 0, hi = candidates.size() - 1;
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (feasible(a, b, candidates[mid]))
            hi = mid;
        else
            lo = mid + 1;
    }
    return candidates[lo];
}

double finite_bottleneck(const std::vector<Interval>& a, const std::vector<Interval>& b) {
    if (a.empty() && b.empty()) return 0.0;

    // Phase one: persistence-derived candidates only.
    std::vector<double> candidates{0.0};
    for (const Interval& p : a) candidates.push_back(p.persistence() / 2);
    for (const Interval& p : b) candidates.push_back(p.persistence() / 2);
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    // The largest persistence radius empties both required sets, so the last
    // candidate is always feasible.
    const double upper = smallest_feasible(a, b, candidates);
    const auto below = std::lower_bound(candidates.begin(), candidates.end(), upper);
    const double lower = below == candidates.begin() ? -1.0 : *(below - 1);

    // Phase two: pairwise costs strictly inside (lower, upper) can undercut.
    std::vector<double> between;
    for (const Interval& pa : a) {
        for (const Interval& pb : b) {
            const double cost = sup_cost(pa, pb);
            if (cost > lower && cost < upper) between.push_back(cost);
        }
    }
    if (between.empty()) return upper;
    between.push_back(upper);
    std::sort(between.begin(), between.end());
    between.erase(std::unique(between.begin(), between.end()), between.end());
    return smallest_feasible(a, b, between);
}

/// Exact assignment on the implicit augmented square matrix by shortest
/// augmenting paths with potentials.
template <typename CostFn>
double hungarian(std::size_t k, CostFn cost) {
    if (k == 0) return 0.0;
    std::vector<double> u(k, 0.0), v(k + 1, 0.0), min_reduced(k + 1, kInf);
    std::vector<std::size_t> owner(k + 1, k);    // owner[j] = row assigned to column j, k = free
    std::vector<std::size_t> prev(k + 1, k);
    std::vector<char> used(k + 1, 0);

    for (std::size_t row = 0; row < k; ++row) {
        std::fill(min_reduced.begin(), min_reduced.end(), kInf);
        std::fill(prev.begin(), prev.end(), k);
        std::fill(used.begin(), used.end(), 0);
        std::size_t j0 = k;    // virtual column holding the row being inserted
        owner[k] = row;
        do {
            used[j0] = 1;
            const std::size_t i0 = owner[j0];
            double delta = kInf;
            std::size_t j1 = k;
            for (std::size_t j = 0; j < k; ++j) {
                if (used[j]) continue;
                const double reduced = cost(i0, j) - u[i0] - v[j];
                if (reduced < min_reduced[j]) {
                    min_reduced[j] = reduced;
                    prev[j] = j0;
                }
                if (min_reduced[j] < delta) {
                    delta = min_reduced[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= k; ++j) {
                if (used[j]) {
                    u[owner[j]] += delta;
                    v[j] -= delta;
                } else {
                    min_reduced[j] -= delta;
                }
            }
            j0 = j1;
        } while (owner[j0] != k);
        while (j0 != k) {
            const std::size_t j1 = prev[j0];
            owner[j0] = owner[j1];
            j0 = j1;
        }
    }

    double total = 0.0;
    for (std::size_t j = 0; j < k; ++j) total += cost(owner[j], j);
    return total;
}

double finite_wasserstein1(const std::vector<Interval>& a, const std::vector<Interval>& b) {
    const std::size_t m = a.size(), n = b.size();
    // Rows: the points of `a` then n diagonal slots; columns: the points of
    // `b` then m diagonal slots.
    return hungarian(m + n, [&](std::size_t i, std::size_t j) {
        if (i < m && j < n) return sup_cost(a[i], b[j]);
        if (i < m) return a[i].persistence() / 2;
        if (j < n) return b[j].persistence() / 2;
        return 0.0;
    });
}

}  // namespace

double bottleneck_distance(std::span<const Interval> a, std::span<const Interval> b) {
    const SplitDiagram sa = split(a), sb = split(b);
    if (sa.infinite_births.size() != sb.infinite_births.size()) return kInf;
    double essential = 0.0;
    for (std::size_t i = 0; i < sa.infinite_births.size(); ++i)
        essential = std::max(essential, std::abs(sa.infinite_births[i] - sb.infinite_births[i]));
    return std::max(essential, finite_bottleneck(sa.finite, sb.finite));
}

double wasserstein1_distance(std::span<const Interval> a, std::span<const Interval> b) {
    const SplitDiagram sa = split(a), sb = split(b);
    if (sa.infinite_births.size() != sb.infinite_births.size()) return kInf;
    double essential = 0.0;
    for (std::size_t i = 0; i < sa.infinite_births.size(); ++i)
        essential += std::abs(sa.infinite_births[i] - sb.infinite_births[i]);
    return essential + finite_wasserstein1(sa.finite, sb.finite);
}

}  // namespace deltacore
