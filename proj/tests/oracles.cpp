#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <set>

namespace oracle {

Point Affine::apply(const Point& p) const {
  return {m[0] * p[0] + m[1] * p[1] + m[2] * p[2] + m[9], m[3] * p[0] + m[4] * p[1] + m[5] * p[2] + m[10],
          m[6] * p[0] + m[7] * p[1] + m[8] * p[2] + m[11]};
}

Affine shadow(const ftpoly::Isometry& s) { return {s.shadow()}; }

Point shadow(const ftpoly::Vec3Q& p) { return {p[0].to_double(), p[1].to_double(), p[2].to_double()}; }

namespace {

double norm(const Point& p) { return std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]); }

using Cell = std::array<long long, 3>;

Cell cell_of(const Point& p, double h) {
  return {static_cast<long long>(std::floor(p[0] / h)), static_cast<long long>(std::floor(p[1] / h)),
          static_cast<long long>(std::floor(p[2] / h))};
}

}  // namespace

std::vector<Point> orbit(const std::vector<Affine>& gens, const Point& p, double radius, double slack, double tol) {
  // Spatial hash with cells of size 1; neighbours searched in adjacent cells.
  std::map<Cell, std::vector<Point>> grid;
  auto find = [&](const Point& q) {
    const Cell c = cell_of(q, 1.0);
    for (long long dx = -1; dx <= 1; ++dx) {
      for (long long dy = -1; dy <= 1; ++dy) {
        for (long long dz = -1; dz <= 1; ++dz) {
          auto it = grid.find({c[0] + dx, c[1] + dy, c[2] + dz});
          if (it == grid.end()) continue;
          for (const auto& r : it->second) {
            if (std::abs(r[0] - q[0]) < tol && std::abs(r[1] - q[1]) < tol && std::abs(r[2] - q[2]) < tol) return true;
          }
        }
      }
    }
    return false;
  };
  std::deque<Point> queue{p};
  grid[cell_of(p, 1.0)].push_back(p);
  while (!queue.empty()) {
    Point q = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      Point r = g.apply(q);
      if (norm(r) > radius + slack || find(r)) continue;
      grid[cell_of(r, 1.0)].push_back(r);
      queue.push_back(r);
    }
  }
  std::vector<Point> out;
  for (const auto& [c, pts] : grid) {
    for (const auto& q : pts) {
      if (norm(q) <= radius + 1e-9) out.push_back(q);
    }
  }
  return out;
}

bool same_points(std::vector<Point> a, std::vector<Point> b, double tol) {
  if (a.size() != b.size()) return false;
  auto key = [tol](const Point& p) {
    return std::array<long long, 3>{std::llround(p[0] / (tol * 10)), std::llround(p[1] / (tol * 10)),
                                    std::llround(p[2] / (tol * 10))};
  };
  auto less = [&](const Point& x, const Point& y) { return key(x) < key(y); };
  std::sort(a.begin(), a.end(), less);
  std::sort(b.begin(), b.end(), less);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < 3; ++k) {
      if (std::abs(a[i][k] - b[i][k]) > tol) return false;
    }
  }
  return true;
}

Point reflect(const Point& n, double d, const Point& p) {
  const double s = n[0] * p[0] + n[1] * p[1] + n[2] * p[2] - d;
  return {p[0] - 2 * s * n[0], p[1] - 2 * s * n[1], p[2] - 2 * s * n[2]};
}

std::vector<ftpoly::Isometry> closure(const std::vector<ftpoly::Isometry>& gens, std::size_t limit) {
  std::set<ftpoly::Isometry> seen{ftpoly::Isometry::identity()};
  std::deque<ftpoly::Isometry> queue{ftpoly::Isometry::identity()};
  while (!queue.empty() && seen.size() <= limit) {
    auto s = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      auto t = ftpoly::compose(g, s);
      if (seen.insert(t).second) queue.push_back(t);
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace oracle
