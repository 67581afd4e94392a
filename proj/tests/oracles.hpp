#pragma once

// Floating-point re-implementations used only as independent checks on the
// exact code paths.

#include <array>
#include <vector>

#include "ftpoly/crystal_group.hpp"

namespace oracle {

using Point = std::array<double, 3>;

// Affine map as 9 matrix entries (row-major) and 3 translation entries.
struct Affine {
  std::array<double, 12> m{};
  Point apply(const Point& p) const;
};

Affine shadow(const ftpoly::Isometry& s);
Point shadow(const ftpoly::Vec3Q& p);

// Orbit of p by breadth-first search on points, applying generators directly
// to points, pruned at radius + slack and deduplicated with tolerance tol.
std::vector<Point> orbit(const std::vector<Affine>& gens, const Point& p, double radius, double slack, double tol);

// Multisets compared after sorting, coordinates within tol.
bool same_points(std::vector<Point> a, std::vector<Point> b, double tol);

// Reflection p -> p - 2 (n.p - d) n in doubles.
Point reflect(const Point& n, double d, const Point& p);

// Group generated by the given elements, closed by brute force (finite groups
// only; gives up past `limit` elements).
std::vector<ftpoly::Isometry> closure(const std::vector<ftpoly::Isometry>& gens, std::size_t limit = 10000);

}  // namespace oracle
