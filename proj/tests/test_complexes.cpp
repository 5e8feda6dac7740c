#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <functional>
#include <random>
#include <tuple>

#include "deltacore/filtration.hpp"
#include "deltacore/flag_graph.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace deltacore;

TEST_CASE("square cycle is its own core") {
    const auto square = FlagGraph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    const auto result = flag_core(square);
    CHECK(result.surviving == std::vector<index_t>{0, 1, 2, 3});
    CHECK(result.removed.empty());
    CHECK(result.core.size() == 4);
}

TEST_CASE("chorded square collapses to a vertex") {
    const auto chorded = FlagGraph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
    const auto result = flag_core(chorded);
    CHECK(result.surviving.size() == 1);
    CHECK(result.core.size() == 1);
    CHECK(result.core.adjacency[0] == std::vector<index_t>{0});
    CHECK(result.removed.size() == 3);
}

TEST_CASE("core reindexes surviving vertices by rank") {
    // A 5-cycle with one pendant vertex hanging off vertex 0: the pendant is
    // dominated, the cycle stays, and its labels compact to 0..4.
    const auto graph =
        FlagGraph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}});
    const auto result = flag_core(graph);
    CHECK(result.surviving == std::vector<index_t>{0, 1, 2, 3, 4});
    REQUIRE(result.core.size() == 5);
    for (index_t v = 0; v < 5; ++v)
        for (index_t w : result.core.adjacency[v]) CHECK(w < 5);
    CHECK(result.core.adjacency[0] == std::vector<index_t>{0, 1, 4});
}

TEST_CASE("threshold graph edges follow the metric") {
    const auto cloud = PointCloud::from_points({{0.0}, {1.0}, {2.5}});
    const auto graph = threshold_graph(cloud, 1.0);
    CHECK(graph.adjacency[0] == std::vector<index_t>{0, 1});
    CHECK(graph.adjacency[1] == std::vector<index_t>{0, 1});
    CHECK(graph.adjacency[2] == std::vector<index_t>{2});

    const auto coincident = PointCloud::from_points({{1.0}, {1.0}, {3.0}});
    const auto zero = threshold_graph(coincident, 0.0);
    CHECK(zero.adjacency[0] == std::vector<index_t>{0, 1});
    CHECK_THROWS_AS(threshold_graph(cloud, -0.5), std::invalid_argument);
}

TEST_CASE("closed adjacency validation") {
    CHECK_THROWS_AS(FlagGraph::from_closed_adjacency({{0, 1}, {1}}), std::invalid_argument);
    CHECK_THROWS_AS(FlagGraph::from_closed_adjacency({{1}, {0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(FlagGraph::from_closed_adjacency({{0, 0}}), std::invalid_argument);
    CHECK_NOTHROW(FlagGraph::from_closed_adjacency({{0, 1}, {0, 1}}));
}

TEST_CASE("clique counting matches binomials on complete graphs") {
    std::vector<std::pair<index_t, index_t>> edges;
    for (index_t a = 0; a < 6; ++a)
        for (index_t b = a + 1; b < 6; ++b) edges.push_back({a, b});
    const auto k6 = FlagGraph::from_edges(6, edges);
    CHECK(count_flag_simplices(k6, 5) == std::vector<std::size_t>{6, 15, 20, 15, 6, 1});
    CHECK(count_flag_simplices(k6, 2) == std::vector<std::size_t>{6, 15, 20});

    const auto square = FlagGraph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(count_flag_simplices(square, 3) == std::vector<std::size_t>{4, 4, 0, 0});
}

TEST_CASE("reduction table tracks both complexes") {
    std::mt19937_64 rng(8);
    const auto cloud = testsup::random_cloud(rng, 30, 3);
    const auto rows = core_reduction_table(cloud, {0.1, 0.3, 0.5}, 2);
    REQUIRE(rows.size() == 3);
    for (const auto& row : rows) {
        CHECK(row.simplices_after <= row.simplices_before);
        CHECK(row.reduction_pct ==
              doctest::Approx(100.0 * (1.0 - double(row.simplices_after) /
                                                 double(row.simplices_before))));
    }
    CHECK(rows[0].simplices_before <= rows[1].simplices_before);
    CHECK(rows[1].simplices_before <= rows[2].simplices_before);
    CHECK_THROWS_AS(core_reduction_table(cloud, {0.3, 0.1}, 2), std::invalid_argument);
}

TEST_CASE("rips filtration values are clique diameters") {
    std::mt19937_64 rng(21);
    const auto cloud = testsup::random_cloud(rng, 15, 2);
    const double threshold = delta_from_percentile(cloud, 60.0);
    const auto f = vr_filtration(cloud, 3, threshold);

    for (std::size_t i = 0; i < f.size(); ++i) {
        const auto verts = f.vertices(i);
        double diameter = 0.0;
        for (std::size_t a = 0; a < verts.size(); ++a)
            for (std::size_t b = a + 1; b < verts.size(); ++b)
                diameter = std::max(diameter, cloud.distance(verts[a], verts[b]));
        CHECK(f.value(i) == diameter);
        CHECK(f.value(i) <= threshold);
        CHECK(std::adjacent_find(verts.begin(), verts.end(), std::greater_equal<index_t>()) ==
              verts.end());
    }
}

TEST_CASE("rips filtration is canonically ordered") {
    std::mt19937_64 rng(22);
    const auto cloud = testsup::random_cloud(rng, 12, 3);
    const auto f = vr_filtration(cloud, 2, 0.8);
    for (std::size_t i = 1; i < f.size(); ++i) {
        const auto a = std::make_tuple(f.value(i - 1), f.dimension(i - 1));
        const auto b = std::make_tuple(f.value(i), f.dimension(i));
        CHECK(a <= b);
        if (a == b) {
            const auto va = f.vertices(i - 1);
            const auto vb = f.vertices(i);
            CHECK(std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end()));
        }
    }
}

TEST_CASE("rips skeleton sizes match clique counts") {
    std::mt19937_64 rng(23);
    const auto cloud = testsup::random_cloud(rng, 25, 3);
    const auto f = vr_filtration(cloud, 2, 0.5);
    const auto counts = simplex_count(f);
    CHECK(counts.per_dim == count_flag_simplices(threshold_graph(cloud, 0.5), 2));
    CHECK(counts.total == f.size());
}

TEST_CASE("flag filtration carries the complex at value zero") {
    const auto square = FlagGraph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    const auto f = flag_filtration(square, 2);
    CHECK(f.size() == 8);
    for (std::size_t i = 0; i < f.size(); ++i) CHECK(f.value(i) == 0.0);
}

TEST_CASE("explicit filtration construction rejects bad input") {
    using S = std::vector<std::pair<std::vector<index_t>, double>>;
    CHECK_THROWS_AS(Filtration::from_simplices(S{{{0, 1}, 1.0}}, 2, 10.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        Filtration::from_simplices(S{{{0}, 0.0}, {{1}, 0.0}, {{1, 0}, 1.0}}, 2, 10.0),
        std::invalid_argument);
    CHECK_THROWS_AS(Filtration::from_simplices(S{{{0}, 0.0}, {{0}, 1.0}}, 2, 10.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(Filtration::from_simplices(S{{{0}, 20.0}}, 2, 10.0), std::invalid_argument);
    CHECK_THROWS_AS(
        Filtration::from_simplices(S{{{0}, 1.0}, {{1}, 0.0}, {{0, 1}, 0.5}}, 2, 10.0),
        std::invalid_argument);
}

TEST_CASE("rips filtration input validation") {
    const auto cloud = PointCloud::from_points({{0.0}, {1.0}});
    CHECK_THROWS_AS(vr_filtration(cloud, 2, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(vr_filtration(PointCloud{}, 2, 1.0), std::invalid_argument);
}
