#include "deltacore/persistence.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace deltacore {

namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

/// Face lookup keyed by packed vertex tuples when they fit in 64 bits, with an
/// ordered-map fallback for very wide tuples.
class FaceIndex {
public:
    FaceIndex(const Filtration& filtration, const std::vector<std::uint32_t>& simplices,
              std::uint32_t bits_per_vertex)
        : bits_(bits_per_vertex) {
        const std::size_t tuple_bits =
            bits_ * (simplices.empty() ? 1 : filtration.dimension(simplices.front()) + 1);
        packed_ok_ = tuple_bits <= 64;
        if (packed_ok_) {
            packed_.reserve(2 * simplices.size());
            for (const std::uint32_t i : simplices)
                packed_.emplace(pack(filtration.vertices(i)), i);
        } else {
            for (const std::uint32_t i : simplices) {
                const auto verts = filtration.vertices(i);
                wide_.emplace(std::vector<index_t>(verts.begin(), verts.end()), i);
            }
        }
    }

    std::uint32_t lookup(std::span<const index_t> vertices) const {
        if (packed_ok_) {
            const auto it = packed_.find(pack(vertices));
            if (it == packed_.end()) throw std::invalid_argument("missing face in filtration");
            return it->second;
        }
        const auto it = wide_.find(std::vector<index_t>(vertices.begin(), vertices.end()));
        if (it == wide_.end()) throw std::invalid_argument("missing face in filtration");
        return it->second;
    }

private:
    std::uint64_t pack(std::span<const index_t> vertices) const {
        std::uint64_t key = 0;
        for (const index_t v : vertices) key = key << bits_ | v;
        return key;
    }

    std::uint32_t bits_;
    bool packed_ok_ = true;
    std::unordered_map<std::uint64_t, std::uint32_t> packed_;
    std::map<std::vector<index_t>, std::uint32_t> wide_;
};

void symmetric_difference(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                          std::vector<std::uint32_t>& out) {
    out.clear();
    std::size_t ia = 0, ib = 0;
    while (ia < a.size() && ib < b.size()) {
        if (a[ia] < b[ib]) {
            out.push_back(a[ia++]);
        } else if (b[ib] < a[ia]) {
            out.push_back(b[ib++]);
        } else {
            ++ia;
            ++ib;
        }
    }
    out.insert(out.end(), a.begin() + ia, a.end());
    out.insert(out.end(), b.begin() + ib, b.end());
}

}  // namespace

bool Interval::finite() const { return death != std::numeric_limits<double>::infinity(); }

double Interval::persistence() const { return death - birth; }

const std::vector<Interval>& PersistenceDiagram::degree(std::size_t q) const {
    return degrees.at(q);
}

std::vector<std::size_t> PersistenceDiagram::infinite_counts() const {
    std::vector<std::size_t> counts(degrees.size(), 0);
    for (std::size_t q = 0; q < degrees.size(); ++q)
        for (const Interval& interval : degrees[q])
            if (!interval.finite()) ++counts[q];
    return counts;
}

PersistenceDiagram persistent_homology(const Filtration& filtration, std::size_t max_degree) {
    if (max_degree + 1 > filtration.max_dim())
        throw std::invalid_argument(
            "persistent_homology needs the filtration built to max_degree + 1");

    const std::size_t m = filtration.size();
    if (m > kNone) throw std::invalid_argument("filtration too large");

    std::vector<std::vector<std::uint32_t>> by_dim(filtration.max_dim() + 1);
    for (std::size_t i = 0; i < m; ++i)
        by_dim[filtration.dimension(i)].push_back(static_cast<std::uint32_t>(i));

    index_t vertex_count = 1;
    for (const std::uint32_t i : by_dim[0])
        vertex_count = std::max(vertex_count, filtration.vertices(i)[0] + 1);
    std::uint32_t bits = 1;
    while (bits < 32 && (std::uint64_t{1} << bits) < vertex_count) ++bits;

    // One slot per negative column: its reduced boundary and its id.
    std::vector<std::uint32_t> pivot_slot(m, kNone);
    std::vector<std::uint32_t> slot_owner;
    std::vector<std::vector<std::uint32_t>> slot_columns;
    std::vector<char> positive(m, 0);
    for (const std::uint32_t i : by_dim[0]) positive[i] = 1;

    const std::size_t top = std::min(max_degree + 1, filtration.max_dim());
    std::vector<std::uint32_t> column, scratch;
    std::vector<index_t> facet;
    for (std::size_t d = 1; d <= top; ++d) {
        const FaceIndex faces(filtration, by_dim[d - 1], bits);
        for (const std::uint32_t j : by_dim[d]) {
            const auto verts = filtration.vertices(j);
            column.clear();
            for (std::size_t drop = 0; drop < verts.size(); ++drop) {
                facet.clear();
                for (std::size_t k = 0; k < verts.size(); ++k)
                    if (k != drop) facet.push_back(verts[k]);
                column.push_back(faces.lookup(facet));
            }
            std::sort(column.begin(), column.end());

            for (;;) {
                if (column.empty()) {
                    if (d <= max_degree) positive[j] = 1;
                    break;
                }
                const std::uint32_t low = column.back();
                const std::uint32_t slot = pivot_slot[low];
                if (slot == kNone) {
                    pivot_slot[low] = static_cast<std::uint32_t>(slot_columns.size());
                    slot_owner.push_back(j);
                    slot_columns.push_back(column);
                    break;
                }
                symmetric_difference(column, slot_columns[slot], scratch);
                column.swap(scratch);
            }
        }
    }

    PersistenceDiagram diagram;
    diagram.degrees.resize(max_degree + 1);
    for (std::size_t i = 0; i < m; ++i) {
        if (!positive[i]) continue;
        const std::size_t q = filtration.dimension(i);
        const double birth = filtration.value(i);
        double death = std::numeric_limits<double>::infinity();
        if (pivot_slot[i] != kNone) death = filtration.value(slot_owner[pivot_slot[i]]);
        if (death == birth) continue;
        diagram.degrees[q].push_back({birth, death});
    }
    for (auto& intervals : diagram.degrees)
        std::sort(intervals.begin(), intervals.end(), [](const Interval& a, const Interval& b) {
            if (a.birth != b.birth) return a.birth < b.birth;
            return a.death < b.death;
        });
    return diagram;
}

std::vector<std::size_t> betti_numbers(const PointCloud& cloud, double scale,
                                       std::size_t max_degree) {
    const Filtration filtration = vr_filtration(cloud, max_degree + 1, scale);
    return persistent_homology(filtration, max_degree).infinite_counts();
}

std::vector<std::size_t> flag_betti(const FlagGraph& graph, std::size_t max_degree) {
    const Filtration filtration = flag_filtration(graph, max_degree + 1);
    return persistent_homology(filtration, max_degree).infinite_counts();
}

}  // namespace deltacore
