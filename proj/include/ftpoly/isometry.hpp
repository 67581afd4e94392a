#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "ftpoly/qsqrt3.hpp"

namespace ftpoly {

// Affine isometry p -> q * p + t with q exactly orthogonal.
//
// Composition convention: compose(a, b) applies b first, so that
// compose(g2, g3) applied to u is g2(g3(u)), reading a word right to left.
class Isometry {
 public:
  enum class Kind { kIdentity, kPureTranslation, kOther };

  Isometry() : q_(Mat3Q::identity()) {}
  // Throws InvariantError unless q^T q = I and det q = +-1.
  Isometry(Mat3Q q, Vec3Q t);

  static Isometry identity() { return Isometry(); }
  static Isometry translation(const Vec3Q& t);

  const Mat3Q& linear() const { return q_; }
  const Vec3Q& shift() const { return t_; }

  Vec3Q apply(const Vec3Q& p) const { return q_ * p + t_; }
  Vec3Q apply_linear(const Vec3Q& v) const { return q_ * v; }

  // +1 or -1.
  int determinant_sign() const { return q_.det().sign(); }
  bool is_orthogonal() const;
  Kind classify() const;

  friend bool operator==(const Isometry& x, const Isometry& y) = default;
  friend std::strong_ordering operator<=>(const Isometry& x, const Isometry& y) {
    if (auto r = x.q_ <=> y.q_; r != 0) return r;
    return x.t_ <=> y.t_;
  }
  std::size_t hash() const { return hash_combine(q_.hash(), t_.hash()); }

  // 9 matrix entries (row-major) then 3 translation entries.
  std::array<std::string, 12> to_strings() const;
  static Isometry from_strings(const std::array<std::string, 12>& s);

  // Double-precision shadow, for diagnostics and oracles only.
  std::array<double, 12> shadow() const;

 private:
  struct Unchecked {};
  Isometry(Mat3Q q, Vec3Q t, Unchecked) : q_(std::move(q)), t_(std::move(t)) {}

  friend Isometry compose(const Isometry& a, const Isometry& b);
  friend Isometry inverse(const Isometry& a);

  Mat3Q q_;
  Vec3Q t_;
};

Isometry compose(const Isometry& a, const Isometry& b);
Isometry inverse(const Isometry& a);

// Composes a word left to right as written: compose_word({g2, g3}) = g2 g3.
Isometry compose_word(const std::vector<Isometry>& word);

struct IsometryHash {
  std::size_t operator()(const Isometry& a) const { return a.hash(); }
};

// Plane n . p = d with |n| = 1 exactly.
struct PlaneQ {
  Vec3Q normal;
  QSqrt3 offset;

  // Throws InvariantError when norm_sq(normal) != 1.
  PlaneQ(Vec3Q n, QSqrt3 d);

  // Signed value n . p - d.
  QSqrt3 evaluate(const Vec3Q& p) const { return dot(normal, p) - offset; }
  bool contains(const Vec3Q& p) const { return evaluate(p).is_zero(); }
};

// p -> p - 2 (n . p - d) n.
Isometry reflection_through_plane(const PlaneQ& plane);

}  // namespace ftpoly
