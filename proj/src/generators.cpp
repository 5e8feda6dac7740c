#include "deltacore/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "deltacore/io.hpp"

namespace deltacore {

namespace {

constexpr double kTorusMajor = 2.0;
constexpr double kTorusMinor = 1.0;
constexpr double kClusterSigma = 0.12;
constexpr double kClusterCenters[3][3] = {
    {0.25, 0.25, 0.3},
    {0.7, 0.6, 0.25},
    {0.4, 0.75, 0.7},
};

void require_positive(index_t n) {
    if (n == 0) throw std::invalid_argument("n must be positive");
}

void add_noise(std::vector<std::vector<double>>& points, double noise, std::mt19937_64& rng) {
    if (noise <= 0.0) return;
    std::normal_distribution<double> gauss(0.0, noise);
    for (auto& p : points)
        for (double& x : p) x += gauss(rng);
}

}  // namespace

PointCloud generate_sphere(index_t n, double noise, std::uint64_t seed) {
    require_positive(n);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<std::vector<double>> points;
    points.reserve(n);
    for (index_t i = 0; i < n; ++i) {
        double x = 0.0, y = 0.0, z = 0.0, norm = 0.0;
        do {
            x = gauss(rng);
            y = gauss(rng);
            z = gauss(rng);
            norm = std::sqrt(x * x + y * y + z * z);
        } while (norm < 1e-12);
        points.push_back({x / norm, y / norm, z / norm});
    }
    add_noise(points, noise, rng);
    return PointCloud::from_points(std::move(points));
}

PointCloud generate_torus(index_t n, double noise, std::uint64_t seed) {
    require_positive(n);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    std::vector<std::vector<double>> points;
    points.reserve(n);
    for (index_t i = 0; i < n; ++i) {
        const double u = angle(rng);
        const double v = angle(rng);
        const double ring = kTorusMajor + kTorusMinor * std::cos(v);
        points.push_back({ring * std::cos(u), ring * std::sin(u), kTorusMinor * std::sin(v)});
    }
    add_noise(points, noise, rng);
    return PointCloud::from_points(std::move(points));
}

PointCloud generate_cube_heterogeneous(index_t n, double noise, std::uint64_t seed) {
    require_positive(n);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::normal_distribution<double> spread(0.0, kClusterSigma);
    std::vector<std::vector<double>> points;
    points.reserve(n);

    const index_t background = n / 3;
    for (index_t i = 0; i < background; ++i) points.push_back({unit(rng), unit(rng), unit(rng)});

    const index_t clustered = n - background;
    for (index_t c = 0; c < 3; ++c) {
        const index_t count = clustered / 3 + (c < clustered % 3 ? 1 : 0);
        for (index_t i = 0; i < count; ++i)
            points.push_back({kClusterCenters[c][0] + spread(rng),
                              kClusterCenters[c][1] + spread(rng),
                              kClusterCenters[c][2] + spread(rng)});
    }
    add_noise(points, noise, rng);
    for (auto& p : points)
        for (double& x : p) x = std::clamp(x, 0.0, 1.0);
    return PointCloud::from_points(std::move(points));
}

PointCloud generate_shape(std::string_view shape, index_t n, double noise, std::uint64_t seed) {
    if (shape == "sphere") return generate_sphere(n, noise, seed);
    if (shape == "torus") return generate_torus(n, noise, seed);
    if (shape == "cube-heterogeneous") return generate_cube_heterogeneous(n, noise, seed);
    throw std::invalid_argument("unknown shape: " + std::string(shape));
}

std::string shape_metadata(std::string_view shape, index_t n, double noise, std::uint64_t seed) {
    std::string geometry;
    if (shape == "sphere") {
        geometry = "unit sphere S^2, normalized Gaussian triples";
    } else if (shape == "torus") {
        geometry = "torus, major radius 2, minor radius 1, uniform angles";
    } else if (shape == "cube-heterogeneous") {
        geometry = "unit cube, one-third uniform background plus 3 Gaussian clusters, sigma 0.12";
    } else {
        throw std::invalid_argument("unknown shape: " + std::string(shape));
    }
    return geometry + "; n=" + std::to_string(n) + " noise=" + format_double(noise) +
           " seed=" + std::to_string(seed);
}

}  // namespace deltacore
