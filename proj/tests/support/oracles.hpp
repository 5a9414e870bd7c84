#pragma once

// Independent oracles for the test suites. Everything here deliberately
// avoids the library's computation paths: IoU by counting raster cell
// centers, point-in-polygon by ray casting, inversions by pair
// enumeration.

#include <cstdint>
#include <random>
#include <vector>

#include "trackeval/geometry.hpp"

namespace oracles {

// IoU of two boxes estimated on a `resolution` x `resolution` grid spanning
// the union's bounding extent, counting cell centers.
double raster_rect_iou(const trackeval::BoundingBox& a,
                       const trackeval::BoundingBox& b, int resolution);

// Same idea for quads; membership tested by ray casting against each quad.
double raster_quad_iou(const trackeval::QuadAnnotation& a,
                       const trackeval::QuadAnnotation& b, int resolution);

// Crossing-number point-in-polygon test.
bool point_in_polygon(double x, double y,
                      const std::array<trackeval::Point, 4>& polygon);

// O(n^2) inversion count by direct pair enumeration.
std::uint64_t brute_inversions(const std::vector<int>& values);

// Normalized Kendall-tau distance between two orderings of the same task
// set: discordant pairs / C(n,2). Computed directly from rank positions.
double kendall_tau_distance(const std::vector<std::string>& order_a,
                            const std::vector<std::string>& order_b);

// Deterministic generators.
trackeval::BoundingBox random_box(std::mt19937& rng);
trackeval::QuadAnnotation random_convex_quad(std::mt19937& rng);
trackeval::QuadAnnotation random_convex_quad_near(std::mt19937& rng,
                                                  const trackeval::QuadAnnotation& other);
std::vector<double> random_series(std::mt19937& rng, std::size_t min_len,
                                  std::size_t max_len);
std::vector<int> random_permutation(std::mt19937& rng, std::size_t n);

}  // namespace oracles
