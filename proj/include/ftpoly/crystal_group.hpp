#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ftpoly/isometry.hpp"

namespace ftpoly {

// A group given by a finite list of generating isometries.
struct GroupSpec {
  std::vector<Isometry> generators;
  // Upper bound on the diameter of a fundamental chamber. Zero when unknown;
  // it only ever widens the BFS excursion slack.
  Rational chamber_diameter;

  GroupSpec() = default;
  explicit GroupSpec(std::vector<Isometry> gens, Rational chamber_diam = Rational(0));
};

// Ball of the given radius around the origin. Claims are only made inside
// the core ball of radius (radius - margin).
struct Window {
  Rational radius;
  Rational margin;

  Window(Rational r, Rational m);

  Rational core_radius() const { return radius - margin; }
  bool contains(const Vec3Q& p) const;
  bool in_core(const Vec3Q& p) const;
  Window scaled_radius(const Rational& r) const { return Window(r, margin); }
};

// norm_sq(p) <= r^2, decided exactly.
bool within_radius(const Vec3Q& p, const Rational& r);
// Smallest non-negative integer not below |p|.
Rational ceil_norm(const Vec3Q& p);

// Every element s with |s(anchor) - center| <= radius, in canonical order.
//
// Breadth-first search over words, extending on the right (s -> s * gen), so
// the anchor image moves by at most D = max |gen(anchor) - anchor| per step.
// Words whose anchor image leaves radius + slack are pruned, with
// slack = max(2 D, chamber_diameter). A minimal gallery from the base chamber
// to any chamber meeting the ball never leaves the ball enlarged by one
// chamber diameter, which is what makes the pruning safe when the anchor lies
// in the closed base chamber.
//
// max_word_length = 0 means unbounded; otherwise a search still growing at
// that depth throws StabilizerExhaustedError.
std::vector<Isometry> enumerate_by_image(const GroupSpec& g, const Vec3Q& anchor, const Vec3Q& center,
                                         const Rational& radius, std::size_t max_word_length = 0);

// All elements s with |s(0)| <= w.radius.
std::vector<Isometry> enumerate_elements(const GroupSpec& g, const Window& w);

// Default cap on BFS depth for stabilizer searches. Exhausting the excursion
// ball around the pi/6 corner of the honeypie slice takes 22 layers.
inline constexpr std::size_t kStabilizerWordCap = 48;

// Finite stabilizer of p, verified to be closed under composition and
// inversion. Throws StabilizerExhaustedError if the bounded search does not
// finish within max_word_length.
std::vector<Isometry> point_stabilizer(const GroupSpec& g, const Vec3Q& p,
                                       std::size_t max_word_length = kStabilizerWordCap);

// Images of p inside the window, exact-deduplicated, in canonical order.
std::vector<Vec3Q> orbit_points(const GroupSpec& g, const Vec3Q& p, const Window& w);

class LatticeBasis {
 public:
  LatticeBasis(Vec3Q b1, Vec3Q b2, Vec3Q b3);

  const std::array<Vec3Q, 3>& vectors() const { return basis_; }
  // Coefficients c with v = c0 b1 + c1 b2 + c2 b3.
  std::array<QSqrt3, 3> coordinates(const Vec3Q& v) const;
  bool is_lattice_vector(const Vec3Q& v) const;

 private:
  std::array<Vec3Q, 3> basis_;
  Mat3Q inverse_;
};

// Basis of the pure translations found in the window: the three shortest
// independent ones, refined by Hermite normalization until every enumerated
// translation is an integer combination. Throws WindowTooSmallError.
LatticeBasis translation_lattice(const GroupSpec& g, const Window& w);

struct LatticeClass {
  Vec3Q representative;  // lexicographically least member
  std::vector<Vec3Q> members;
};

// Coordinates of p with their integer parts dropped; equal keys mean p - p'
// is a lattice vector.
std::array<QSqrt3, 3> lattice_class_key(const Vec3Q& p, const LatticeBasis& lattice);

// Classes of V under v ~ v' iff v - v' is a lattice vector, ordered by
// representative.
std::vector<LatticeClass> lattice_class_partition(const std::vector<Vec3Q>& points, const LatticeBasis& lattice);

}  // namespace ftpoly
