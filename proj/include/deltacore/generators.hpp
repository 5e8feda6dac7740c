#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "deltacore/point_cloud.hpp"

namespace deltacore {

// Synthetic samples for benchmarks. All are deterministic given the seed.

/// n points uniform on the unit sphere in R^3 (normalized Gaussian triples),
/// plus iid Gaussian coordinate noise of standard deviation `noise`.
PointCloud generate_sphere(index_t n, double noise, std::uint64_t seed);

/// n points on the torus with major radius 2 and minor radius 1, angles
/// uniform, plus Gaussian coordinate noise.
PointCloud generate_torus(index_t n, double noise, std::uint64_t seed);

/// Density-varying sample in the unit cube: half uniform background, half in
/// three Gaussian clusters, plus Gaussian coordinate noise; all coordinates
/// clamped to [0, 1].
PointCloud generate_cube_heterogeneous(index_t n, double noise, std::uint64_t seed);

/// Dispatch by shape name: "sphere", "torus", or "cube-heterogeneous".
/// Throws std::invalid_argument for unknown names.
PointCloud generate_shape(std::string_view shape, index_t n, double noise, std::uint64_t seed);

/// One-line description of the generator's fixed geometry, recorded as a
/// comment in emitted point files.
std::string shape_metadata(std::string_view shape, index_t n, double noise, std::uint64_t seed);

}  // namespace deltacore
