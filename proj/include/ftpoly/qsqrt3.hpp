#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <string>
#include <string_view>

#include "ftpoly/rational.hpp"

namespace ftpoly {

// Exact element a + b*sqrt(3) of the field Q(sqrt3).
class QSqrt3 {
 public:
  QSqrt3() = default;
  QSqrt3(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  QSqrt3(std::int64_t a) : a_(a) {}         // NOLINT(google-explicit-constructor)
  QSqrt3(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static QSqrt3 sqrt3() { return {Rational(0), Rational(1)}; }

  // Accepts the serialized form "p/q+r/s*sqrt3" as well as looser variants
  // such as "sqrt3", "-1/2*sqrt3", "3/4-sqrt3" and terminating decimals.
  static QSqrt3 parse(std::string_view text);

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt3_part() const { return b_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  // Sign of the real number a + b*sqrt3, decided with rational comparisons.
  int sign() const;

  QSqrt3 conjugate() const { return {a_, -b_}; }
  // Field norm a^2 - 3 b^2.
  Rational norm() const { return a_ * a_ - Rational(3) * b_ * b_; }

  QSqrt3 operator-() const { return {-a_, -b_}; }
  friend QSqrt3 operator+(const QSqrt3& x, const QSqrt3& y) { return {x.a_ + y.a_, x.b_ + y.b_}; }
  friend QSqrt3 operator-(const QSqrt3& x, const QSqrt3& y) { return {x.a_ - y.a_, x.b_ - y.b_}; }
  friend QSqrt3 operator*(const QSqrt3& x, const QSqrt3& y);
  friend QSqrt3 operator/(const QSqrt3& x, const QSqrt3& y);
  QSqrt3& operator+=(const QSqrt3& y) { return *this = *this + y; }
  QSqrt3& operator-=(const QSqrt3& y) { return *this = *this - y; }
  QSqrt3& operator*=(const QSqrt3& y) { return *this = *this * y; }

  friend bool operator==(const QSqrt3& x, const QSqrt3& y) = default;
  // Canonical (structural) order: lexicographic on (a, b). Not the real order;
  // use compare_value for that.
  friend std::strong_ordering operator<=>(const QSqrt3& x, const QSqrt3& y);

  double to_double() const;
  std::string to_string() const;
  std::size_t hash() const;

 private:
  Rational a_;
  Rational b_;
};

// Real-order comparison: sign(x - y).
inline int compare_value(const QSqrt3& x, const QSqrt3& y) { return (x - y).sign(); }

struct Vec3Q {
  std::array<QSqrt3, 3> c;

  Vec3Q() = default;
  Vec3Q(QSqrt3 x, QSqrt3 y, QSqrt3 z) : c{std::move(x), std::move(y), std::move(z)} {}

  const QSqrt3& x() const { return c[0]; }
  const QSqrt3& y() const { return c[1]; }
  const QSqrt3& z() const { return c[2]; }
  const QSqrt3& operator[](std::size_t i) const { return c[i]; }
  QSqrt3& operator[](std::size_t i) { return c[i]; }

  bool is_zero() const { return c[0].is_zero() && c[1].is_zero() && c[2].is_zero(); }

  friend Vec3Q operator+(const Vec3Q& p, const Vec3Q& q) {
    return {p.c[0] + q.c[0], p.c[1] + q.c[1], p.c[2] + q.c[2]};
  }
  friend Vec3Q operator-(const Vec3Q& p, const Vec3Q& q) {
    return {p.c[0] - q.c[0], p.c[1] - q.c[1], p.c[2] - q.c[2]};
  }
  Vec3Q operator-() const { return {-c[0], -c[1], -c[2]}; }
  friend Vec3Q operator*(const QSqrt3& s, const Vec3Q& p) {
    return {s * p.c[0], s * p.c[1], s * p.c[2]};
  }

  friend bool operator==(const Vec3Q& p, const Vec3Q& q) = default;
  friend std::strong_ordering operator<=>(const Vec3Q& p, const Vec3Q& q) {
    for (std::size_t i = 0; i < 3; ++i) {
      if (auto r = p.c[i] <=> q.c[i]; r != 0) return r;
    }
    return std::strong_ordering::equal;
  }

  std::array<double, 3> to_double() const {
    return {c[0].to_double(), c[1].to_double(), c[2].to_double()};
  }
  std::string to_string() const;
  std::size_t hash() const;
};

QSqrt3 dot(const Vec3Q& p, const Vec3Q& q);
Vec3Q cross(const Vec3Q& p, const Vec3Q& q);
inline QSqrt3 norm_sq(const Vec3Q& p) { return dot(p, p); }

// Row-major 3x3 matrix over Q(sqrt3).
struct Mat3Q {
  std::array<QSqrt3, 9> m;

  static Mat3Q identity();
  static Mat3Q diagonal(const QSqrt3& a, const QSqrt3& b, const QSqrt3& c);
  static Mat3Q from_columns(const Vec3Q& c0, const Vec3Q& c1, const Vec3Q& c2);

  const QSqrt3& operator()(std::size_t r, std::size_t c) const { return m[3 * r + c]; }
  QSqrt3& operator()(std::size_t r, std::size_t c) { return m[3 * r + c]; }

  Mat3Q transpose() const;
  QSqrt3 det() const;
  // Throws ArithmeticError for a singular matrix.
  Mat3Q inverse() const;

  friend Mat3Q operator*(const Mat3Q& x, const Mat3Q& y);
  friend Vec3Q operator*(const Mat3Q& x, const Vec3Q& v);

  friend bool operator==(const Mat3Q& x, const Mat3Q& y) = default;
  friend std::strong_ordering operator<=>(const Mat3Q& x, const Mat3Q& y) {
    for (std::size_t i = 0; i < 9; ++i) {
      if (auto r = x.m[i] <=> y.m[i]; r != 0) return r;
    }
    return std::strong_ordering::equal;
  }
  std::size_t hash() const;
};

struct QSqrt3Hash {
  std::size_t operator()(const QSqrt3& x) const { return x.hash(); }
};
struct Vec3QHash {
  std::size_t operator()(const Vec3Q& v) const { return v.hash(); }
};

inline std::size_t hash_combine(std::size_t seed, std::size_t h) {
  return seed ^ (h + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace ftpoly
