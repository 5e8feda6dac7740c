#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "deltacore/neighbor_graph.hpp"
#include "deltacore/point_cloud.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace deltacore;

TEST_CASE("point cloud construction and distances") {
    const auto cloud = PointCloud::from_points({{0.0, 0.0}, {3.0, 4.0}, {0.0, 1.0}});
    CHECK(cloud.size() == 3);
    CHECK(cloud.dimension() == 2);
    CHECK(cloud.distance(0, 1) == doctest::Approx(5.0));
    CHECK(cloud.distance(1, 0) == cloud.distance(0, 1));
    CHECK(cloud.distance(2, 2) == 0.0);
    CHECK(cloud.diameter() == doctest::Approx(5.0));

    CHECK_THROWS_AS(PointCloud::from_points({{0.0}, {1.0, 2.0}}), std::invalid_argument);
    CHECK_THROWS_AS(PointCloud::from_points({{}}), std::invalid_argument);
}

TEST_CASE("distance matrix clouds") {
    const std::vector<std::vector<double>> matrix = {
        {0.0, 1.0, 4.0}, {1.0, 0.0, 2.0}, {4.0, 2.0, 0.0}};
    const auto cloud = PointCloud::from_distance_matrix(matrix);
    CHECK(cloud.metric() == Metric::precomputed_matrix);
    CHECK(cloud.distance(0, 2) == 4.0);
    CHECK(cloud.diameter() == 4.0);

    CHECK_THROWS_AS(PointCloud::from_distance_matrix({{0.0, 1.0}, {2.0, 0.0}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(PointCloud::from_distance_matrix({{1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(PointCloud::from_distance_matrix({{0.0, -1.0}, {-1.0, 0.0}}),
                    std::invalid_argument);
}

TEST_CASE("subset preserves the metric") {
    std::mt19937_64 rng(2);
    const auto cloud = testsup::random_cloud(rng, 25, 3);
    const std::vector<index_t> picks = {20, 3, 3, 11};
    const auto sub = cloud.subset(picks);
    REQUIRE(sub.size() == 4);
    for (index_t i = 0; i < 4; ++i)
        for (index_t j = 0; j < 4; ++j)
            CHECK(sub.distance(i, j) == cloud.distance(picks[i], picks[j]));
}

TEST_CASE("percentile delta uses the nearest rank") {
    const auto cloud = PointCloud::from_points({{0.0}, {1.0}, {3.0}});
    // Pair distances sorted: 1, 2, 3.
    CHECK(delta_from_percentile(cloud, 1.0) == 1.0);
    CHECK(delta_from_percentile(cloud, 50.0) == 2.0);
    CHECK(delta_from_percentile(cloud, 66.7) == 3.0);
    CHECK(delta_from_percentile(cloud, 100.0) == 3.0);
    CHECK_THROWS_AS(delta_from_percentile(cloud, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(delta_from_percentile(cloud, 101.0), std::invalid_argument);
    CHECK_THROWS_AS(delta_from_percentile(PointCloud::from_points({{1.0}}), 50.0),
                    std::invalid_argument);
}

TEST_CASE("neighborhoods are closed, sorted and symmetric") {
    std::mt19937_64 rng(31);
    const auto cloud = testsup::random_cloud(rng, 40, 3);
    const auto graph = neighborhoods(cloud, 0.4);
    REQUIRE(graph.size() == 40);
    for (index_t i = 0; i < graph.size(); ++i) {
        const auto& nbrs = graph.neighborhoods[i];
        CHECK(std::is_sorted(nbrs.begin(), nbrs.end()));
        CHECK(std::binary_search(nbrs.begin(), nbrs.end(), i));
        for (index_t j : nbrs) {
            CHECK(cloud.distance(i, j) <= 0.4);
            const auto& back = graph.neighborhoods[j];
            CHECK(std::binary_search(back.begin(), back.end(), i));
        }
    }
}

TEST_CASE("kd tree and brute force agree") {
    std::mt19937_64 rng(77);
    for (const double delta : {0.05, 0.3, 0.9, 2.0}) {
        const auto cloud = testsup::random_cloud(rng, 60, 3);
        const auto fast = neighborhoods(cloud, delta, NeighborSearch::kd_tree);
        const auto slow = neighborhoods(cloud, delta, NeighborSearch::brute_force);
        REQUIRE(fast.size() == slow.size());
        for (index_t i = 0; i < fast.size(); ++i)
            CHECK(fast.neighborhoods[i] == slow.neighborhoods[i]);
    }
}

TEST_CASE("neighborhood search rejects bad arguments") {
    const auto cloud = PointCloud::from_points({{0.0}, {1.0}});
    CHECK_THROWS_AS(neighborhoods(cloud, 0.0), std::invalid_argument);
    const auto matrix = PointCloud::from_distance_matrix({{0.0, 1.0}, {1.0, 0.0}});
    CHECK_THROWS_AS(neighborhoods(matrix, 0.5, NeighborSearch::kd_tree), std::invalid_argument);
    CHECK_NOTHROW(neighborhoods(matrix, 0.5));
}
