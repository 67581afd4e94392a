#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ftpoly {

// Exact rational number in lowest terms with a positive denominator.
//
// Values that fit in 64-bit numerator/denominator are kept inline and all
// arithmetic on them goes through 128-bit intermediates; anything larger is
// promoted to a GMP rational. The representation is normalized after every
// operation, so a value is "small" iff it fits, which makes equality and
// hashing structural.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t n, std::int64_t d);

  static Rational parse(std::string_view text);

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_integer() const;
  int sign() const;

  Rational operator-() const;
  friend Rational operator+(const Rational& x, const Rational& y);
  friend Rational operator-(const Rational& x, const Rational& y);
  friend Rational operator*(const Rational& x, const Rational& y);
  friend Rational operator/(const Rational& x, const Rational& y);
  Rational& operator+=(const Rational& y) { return *this = *this + y; }
  Rational& operator-=(const Rational& y) { return *this = *this - y; }
  Rational& operator*=(const Rational& y) { return *this = *this * y; }
  Rational& operator/=(const Rational& y) { return *this = *this / y; }

  friend bool operator==(const Rational& x, const Rational& y);
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y);

  // Largest integer not exceeding the value.
  Rational floor() const;
  Rational denominator() const;
  Rational abs() const { return sign() < 0 ? -*this : *this; }

  double to_double() const;
  std::string to_string() const;
  std::size_t hash() const;

  // True when the value is held in the inline 64-bit representation.
  bool is_small() const { return !big_; }

 private:
  mpq_class to_mpq() const;
  static Rational from_mpq(const mpq_class& q);
  static Rational from_wide(__int128 n, __int128 d);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

struct RationalHash {
  std::size_t operator()(const Rational& r) const { return r.hash(); }
};

}  // namespace ftpoly
