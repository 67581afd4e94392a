#include "ftpoly/qsqrt3.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <vector>

#include "ftpoly/errors.hpp"

namespace ftpoly {

QSqrt3 operator*(const QSqrt3& x, const QSqrt3& y) {
  if (x.b_.is_zero() && y.b_.is_zero()) return QSqrt3(x.a_ * y.a_);
  if (x.b_.is_zero()) return {x.a_ * y.a_, x.a_ * y.b_};
  if (y.b_.is_zero()) return {x.a_ * y.a_, x.b_ * y.a_};
  return {x.a_ * y.a_ + Rational(3) * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_};
}

QSqrt3 operator/(const QSqrt3& x, const QSqrt3& y) {
  if (y.is_zero()) throw ArithmeticError("division by zero in Q(sqrt3)");
  if (y.b_.is_zero()) return {x.a_ / y.a_, x.b_ / y.a_};
  // x / y = x * conj(y) / N(y); N(y) != 0 because sqrt3 is irrational.
  Rational n = y.norm();
  QSqrt3 num = x * y.conjugate();
  return {num.a_ / n, num.b_ / n};
}

int QSqrt3::sign() const {
  const int sa = a_.sign();
  const int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: the term with larger magnitude wins; a^2 == 3 b^2 is
  // impossible for nonzero rationals.
  return (a_ * a_ > Rational(3) * b_ * b_) ? sa : sb;
}

std::strong_ordering operator<=>(const QSqrt3& x, const QSqrt3& y) {
  if (auto r = x.a_ <=> y.a_; r != 0) return r;
  return x.b_ <=> y.b_;
}

double QSqrt3::to_double() const { return a_.to_double() + b_.to_double() * std::numbers::sqrt3; }

std::string QSqrt3::to_string() const {
  if (b_.is_zero()) return a_.to_string();
  std::string s;
  if (!a_.is_zero()) {
    s = a_.to_string();
    if (b_.sign() > 0) s += "+";
  }
  s += b_.to_string() + "*sqrt3";
  return s;
}

std::size_t QSqrt3::hash() const { return hash_combine(a_.hash(), b_.hash()); }

namespace {

std::string strip(std::string_view t) {
  std::string out;
  for (char ch : t) {
    if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
  }
  return out;
}

}  // namespace

QSqrt3 QSqrt3::parse(std::string_view text) {
  const std::string s = strip(text);
  if (s.empty()) throw ParseError("empty Q(sqrt3) literal");
  // Split into signed terms at every '+'/'-' except a leading sign or one
  // directly after '*' or '/'.
  std::vector<std::string> terms;
  std::string cur;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char ch = s[i];
    if ((ch == '+' || ch == '-') && i > 0 && s[i - 1] != '*' && s[i - 1] != '/') {
      terms.push_back(cur);
      cur.clear();
    }
    cur.push_back(ch);
  }
  terms.push_back(cur);

  Rational a;
  Rational b;
  for (std::string term : terms) {
    if (term.empty() || term == "+" || term == "-") throw ParseError("bad Q(sqrt3) literal '" + s + "'");
    bool neg = false;
    if (term[0] == '+' || term[0] == '-') {
      neg = term[0] == '-';
      term = term.substr(1);
    }
    const std::string marker = "sqrt3";
    auto pos = term.find(marker);
    if (pos == std::string::npos) {
      Rational v = Rational::parse(term);
      a += neg ? -v : v;
      continue;
    }
    if (pos + marker.size() != term.size()) throw ParseError("bad Q(sqrt3) literal '" + s + "'");
    std::string coeff = term.substr(0, pos);
    Rational v(1);
    if (!coeff.empty()) {
      if (coeff.back() != '*') throw ParseError("bad Q(sqrt3) literal '" + s + "'");
      coeff.pop_back();
      v = Rational::parse(coeff);
    }
    b += neg ? -v : v;
  }
  return {a, b};
}

QSqrt3 dot(const Vec3Q& p, const Vec3Q& q) {
  return p.c[0] * q.c[0] + p.c[1] * q.c[1] + p.c[2] * q.c[2];
}

Vec3Q cross(const Vec3Q& p, const Vec3Q& q) {
  return {p.c[1] * q.c[2] - p.c[2] * q.c[1], p.c[2] * q.c[0] - p.c[0] * q.c[2],
          p.c[0] * q.c[1] - p.c[1] * q.c[0]};
}

std::string Vec3Q::to_string() const {
  return "(" + c[0].to_string() + ", " + c[1].to_string() + ", " + c[2].to_string() + ")";
}

std::size_t Vec3Q::hash() const {
  return hash_combine(hash_combine(c[0].hash(), c[1].hash()), c[2].hash());
}

Mat3Q Mat3Q::identity() { return diagonal(1, 1, 1); }

Mat3Q Mat3Q::diagonal(const QSqrt3& a, const QSqrt3& b, const QSqrt3& c) {
  Mat3Q out;
  out(0, 0) = a;
  out(1, 1) = b;
  out(2, 2) = c;
  return out;
}

Mat3Q Mat3Q::from_columns(const Vec3Q& c0, const Vec3Q& c1, const Vec3Q& c2) {
  Mat3Q out;
  for (std::size_t r = 0; r < 3; ++r) {
    out(r, 0) = c0[r];
    out(r, 1) = c1[r];
    out(r, 2) = c2[r];
  }
  return out;
}

Mat3Q Mat3Q::transpose() const {
  Mat3Q out;
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) out(r, c) = (*this)(c, r);
  }
  return out;
}

QSqrt3 Mat3Q::det() const {
  const Mat3Q& a = *this;
  return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
         a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
         a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

Mat3Q Mat3Q::inverse() const {
  const QSqrt3 d = det();
  if (d.is_zero()) throw ArithmeticError("singular matrix");
  const Mat3Q& a = *this;
  Mat3Q adj;
  adj(0, 0) = a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1);
  adj(0, 1) = a(0, 2) * a(2, 1) - a(0, 1) * a(2, 2);
  adj(0, 2) = a(0, 1) * a(1, 2) - a(0, 2) * a(1, 1);
  adj(1, 0) = a(1, 2) * a(2, 0) - a(1, 0) * a(2, 2);
  adj(1, 1) = a(0, 0) * a(2, 2) - a(0, 2) * a(2, 0);
  adj(1, 2) = a(0, 2) * a(1, 0) - a(0, 0) * a(1, 2);
  adj(2, 0) = a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0);
  adj(2, 1) = a(0, 1) * a(2, 0) - a(0, 0) * a(2, 1);
  adj(2, 2) = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  for (auto& e : adj.m) e = e / d;
  return adj;
}

Mat3Q operator*(const Mat3Q& x, const Mat3Q& y) {
  Mat3Q out;
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) {
      out(r, c) = x(r, 0) * y(0, c) + x(r, 1) * y(1, c) + x(r, 2) * y(2, c);
    }
  }
  return out;
}

Vec3Q operator*(const Mat3Q& x, const Vec3Q& v) {
  return {x(0, 0) * v[0] + x(0, 1) * v[1] + x(0, 2) * v[2],
          x(1, 0) * v[0] + x(1, 1) * v[1] + x(1, 2) * v[2],
          x(2, 0) * v[0] + x(2, 1) * v[1] + x(2, 2) * v[2]};
}

std::size_t Mat3Q::hash() const {
  std::size_t h = 0;
  for (const auto& e : m) h = hash_combine(h, e.hash());
  return h;
}

}  // namespace ftpoly
