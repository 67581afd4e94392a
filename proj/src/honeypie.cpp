#include "ftpoly/honeypie.hpp"

#include <algorithm>
#include <cctype>

#include "ftpoly/errors.hpp"

namespace ftpoly {

std::string corner_name(Corner c) {
  switch (c) {
    case Corner::kC30: return "c30";
    case Corner::kC90: return "c90";
    case Corner::kC60: return "c60";
  }
  return "?";
}

Corner parse_corner(const std::string& text) {
  std::string s = text;
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char ch) { return std::tolower(ch); });
  if (s == "c30") return Corner::kC30;
  if (s == "c90") return Corner::kC90;
  if (s == "c60") return Corner::kC60;
  throw ParseError("unknown corner '" + text + "' (expected c30, c90 or c60)");
}

void HoneypieConfig::validate() const {
  if (c.sign() <= 0) throw InvariantError("slice height must be positive, got " + c.to_string());
  if (scale.sign() <= 0) throw InvariantError("footprint scale must be positive, got " + scale.to_string());
}

namespace {

Vec3Q xyz(QSqrt3 x, QSqrt3 y, QSqrt3 z) { return {std::move(x), std::move(y), std::move(z)}; }

}  // namespace

std::vector<PlaneQ> honeypie_planes(const HoneypieConfig& cfg) {
  cfg.validate();
  const QSqrt3 half(Rational(1, 2));
  const QSqrt3 half_root3(Rational(0), Rational(1, 2));
  const QSqrt3 s(cfg.scale);

  // Footprint walls: la through (0,0),(1,0); lb through (0,0),(3/4,sqrt3/4);
  // lc through (1,0),(3/4,sqrt3/4).
  PlaneQ la(xyz(0, 1, 0), QSqrt3(0));
  PlaneQ lb(xyz(-half, half_root3, 0), QSqrt3(0));
  PlaneQ lc(xyz(half_root3, half, 0), half_root3 * s);

  PlaneQ h1 = lc, h2 = lb, h3 = la;
  switch (cfg.corner) {
    case Corner::kC90: h1 = lc; h2 = lb; h3 = la; break;
    case Corner::kC30: h1 = la; h2 = lb; h3 = lc; break;
    case Corner::kC60: h1 = la; h2 = lc; h3 = lb; break;
  }
  if (cfg.swap_walls) std::swap(h1, h2);

  return {PlaneQ(xyz(0, 0, 1), QSqrt3(0)), h1, h2, h3, PlaneQ(xyz(0, 0, 1), QSqrt3(cfg.c))};
}

GroupSpec honeypie_generators(const HoneypieConfig& cfg) {
  std::vector<Isometry> gens;
  for (const auto& plane : honeypie_planes(cfg)) gens.push_back(reflection_through_plane(plane));
  // The slice's diameter is below scale + c.
  return GroupSpec(std::move(gens), cfg.scale + cfg.c);
}

GroupSpec honeypie_planar_generators(const HoneypieConfig& cfg) {
  const auto planes = honeypie_planes(cfg);
  std::vector<Isometry> gens;
  for (std::size_t i = 1; i <= 3; ++i) gens.push_back(reflection_through_plane(planes[i]));
  return GroupSpec(std::move(gens), cfg.scale);
}

Vec3Q base_point(const HoneypieConfig& cfg) {
  cfg.validate();
  const QSqrt3 s(cfg.scale);
  switch (cfg.corner) {
    case Corner::kC30: return xyz(0, 0, 0);
    case Corner::kC60: return xyz(s, 0, 0);
    case Corner::kC90: break;
  }
  return xyz(QSqrt3(Rational(3, 4)) * s, QSqrt3(Rational(0), Rational(1, 4)) * s, 0);
}

NamedPoints named_points(const HoneypieConfig& cfg) {
  const GroupSpec g = honeypie_generators(cfg);
  const auto& gm = g.generators;
  NamedPoints n;
  n.u = base_point(cfg);
  n.v = compose(gm[2], gm[3]).apply(n.u);
  n.w = gm[3].apply(n.u);
  n.x = gm[1].apply(n.w);
  n.y = gm[1].apply(n.v);
  const Isometry up = gm[4];
  const Isometry down = compose(gm[0], gm[4]);
  n.v1 = up.apply(n.v);
  n.w1 = up.apply(n.w);
  n.x1 = up.apply(n.x);
  n.y1 = up.apply(n.y);
  n.v2 = down.apply(n.v);
  n.w2 = down.apply(n.w);
  n.x2 = down.apply(n.x);
  n.y2 = down.apply(n.y);
  return n;
}

}  // namespace ftpoly
