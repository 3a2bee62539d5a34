#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "burau/orbits.hpp"
#include "burau/stats.hpp"

namespace burau {

inline constexpr const char* kPrincipalColor = "#00008b";
inline constexpr const char* kSingletonColor = "#000000";

// Fill color for an orbit class: principal pinned to dark blue, the rest
// hashed from (n, m) to a hue.
std::string orbit_color(const OrbitClass& c);

// Rational grid points (i/den, j/den) with x_lo <= i <= x_hi, y_lo <= j <= y_hi.
struct OrbitMapSpec {
    std::int64_t den = 1;
    std::int64_t x_lo = -10, x_hi = 10;
    std::int64_t y_lo = -10, y_hi = 10;
    int size_px = 600;
    std::uint64_t max_points = 250000;
};

using AffinePoint = std::pair<Fraction, Fraction>;

std::vector<AffinePoint> grid_points(const OrbitMapSpec& spec);

// Colors each point [x:y:1] by its orbit class. Throws std::invalid_argument
// when the point count exceeds spec.max_points.
std::string plot_orbits(const OrbitMapSpec& spec);
std::string plot_orbit_points(const std::vector<AffinePoint>& points, const OrbitMapSpec& spec);

// Ratio against d as a polyline, with a reference line at 3/4.
std::string plot_density(const DensityCurve& curve, int width_px = 640, int height_px = 400);

}  // namespace burau
