#include "ftpoly/isometry.hpp"

#include "ftpoly/errors.hpp"

namespace ftpoly {

Isometry::Isometry(Mat3Q q, Vec3Q t) : q_(std::move(q)), t_(std::move(t)) {
  if (!is_orthogonal()) throw InvariantError("isometry linear part is not orthogonal");
}

Isometry Isometry::translation(const Vec3Q& t) { return Isometry(Mat3Q::identity(), t, Unchecked{}); }

bool Isometry::is_orthogonal() const {
  if (q_.transpose() * q_ != Mat3Q::identity()) return false;
  const QSqrt3 d = q_.det();
  return d == QSqrt3(1) || d == QSqrt3(-1);
}

Isometry::Kind Isometry::classify() const {
  if (q_ != Mat3Q::identity()) return Kind::kOther;
  return t_.is_zero() ? Kind::kIdentity : Kind::kPureTranslation;
}

std::array<std::string, 12> Isometry::to_strings() const {
  std::array<std::string, 12> out;
  for (std::size_t i = 0; i < 9; ++i) out[i] = q_.m[i].to_string();
  for (std::size_t i = 0; i < 3; ++i) out[9 + i] = t_[i].to_string();
  return out;
}

Isometry Isometry::from_strings(const std::array<std::string, 12>& s) {
  Mat3Q q;
  Vec3Q t;
  for (std::size_t i = 0; i < 9; ++i) q.m[i] = QSqrt3::parse(s[i]);
  for (std::size_t i = 0; i < 3; ++i) t[i] = QSqrt3::parse(s[9 + i]);
  return Isometry(std::move(q), std::move(t));
}

std::array<double, 12> Isometry::shadow() const {
  std::array<double, 12> out{};
  for (std::size_t i = 0; i < 9; ++i) out[i] = q_.m[i].to_double();
  for (std::size_t i = 0; i < 3; ++i) out[9 + i] = t_[i].to_double();
  return out;
}

Isometry compose(const Isometry& a, const Isometry& b) {
  // a(b(p)) = qa (qb p + tb) + ta.
  return Isometry(a.q_ * b.q_, a.q_ * b.t_ + a.t_, Isometry::Unchecked{});
}

Isometry inverse(const Isometry& a) {
  Mat3Q qt = a.q_.transpose();
  Vec3Q t = -(qt * a.t_);
  return Isometry(std::move(qt), std::move(t), Isometry::Unchecked{});
}

Isometry compose_word(const std::vector<Isometry>& word) {
  Isometry out;
  for (const auto& g : word) out = compose(out, g);
  return out;
}

PlaneQ::PlaneQ(Vec3Q n, QSqrt3 d) : normal(std::move(n)), offset(std::move(d)) {
  if (norm_sq(normal) != QSqrt3(1)) {
    throw InvariantError("plane normal " + normal.to_string() + " is not a unit vector");
  }
}

Isometry reflection_through_plane(const PlaneQ& plane) {
  const Vec3Q& n = plane.normal;
  Mat3Q q = Mat3Q::identity();
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) q(r, c) -= QSqrt3(2) * n[r] * n[c];
  }
  Vec3Q t = (QSqrt3(2) * plane.offset) * n;
  return Isometry(std::move(q), std::move(t));
}

}  // namespace ftpoly
