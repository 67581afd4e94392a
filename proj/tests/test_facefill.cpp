#include <doctest.h>

#include <algorithm>
#include <set>

#include "ftpoly/errors.hpp"
#include "ftpoly/facefill.hpp"
#include "ftpoly/verify.hpp"

using namespace ftpoly;

namespace {

const S1Construction& s1() {
  static const S1Construction s = construct_s1({}, Window(Rational(5), Rational(2)));
  return s;
}

std::vector<Vec3Q> reversed(std::vector<Vec3Q> v) {
  std::reverse(v.begin(), v.end());
  return v;
}

const AngleClass& by_label(const std::vector<AngleClass>& classes, const std::string& label) {
  for (const auto& c : classes) {
    if (c.label == label) return c;
  }
  FAIL("missing class " << label);
  throw 0;
}

}  // namespace

TEST_CASE("fewer than three edges is degenerate") {
  auto n = named_points({});
  std::vector<Edge> two{Edge(n.u, n.v), Edge(n.u, n.w)};
  CHECK_THROWS_AS(enumerate_vertex_figures(two, {Isometry::identity()}), DegenerateVertexFigureError);
}

TEST_CASE("a three-edge star has a single figure with a single class") {
  HoneypieConfig cfg;
  cfg.corner = Corner::kC60;
  auto g = honeypie_generators(cfg);
  auto n = named_points(cfg);
  auto stab = point_stabilizer(g, n.u);
  auto st = star(stab, n.u, n.v);
  REQUIRE(st.size() == 3);
  auto figs = enumerate_vertex_figures(st, stab);
  REQUIRE(figs.all.size() == 1);
  REQUIRE(figs.alternating.size() == 1);
  auto classes = angle_classes(figs.alternating[0], stab);
  REQUIRE(classes.size() == 1);
  CHECK(classes[0].label == "alpha");
}

TEST_CASE("planar star: three figures, all alternating") {
  auto g = honeypie_generators({});
  auto n = named_points({});
  auto stab = point_stabilizer(g, n.u);
  auto figs = enumerate_vertex_figures(star(stab, n.u, n.v), stab);
  CHECK(figs.all.size() == 3);
  CHECK(figs.alternating.size() == 3);
  // Canonical forms are pairwise distinct and fixed points of canonicalization.
  std::set<std::vector<Vec3Q>> seen;
  for (const auto& vf : figs.all) {
    CHECK(canonical_figure(vf, stab) == vf);
    seen.insert(vf.cycle);
  }
  CHECK(seen.size() == 3);
}

TEST_CASE("planar 60/120 figure closes into a twelve-vertex face") {
  auto g = honeypie_planar_generators({});
  auto n = named_points({});
  auto stab = point_stabilizer(g, n.u);
  auto figs = enumerate_vertex_figures(star(stab, n.u, n.v), stab);
  Window w(Rational(6), Rational(2));
  int closed_figures = 0;
  for (const auto& vf : figs.alternating) {
    auto classes = angle_classes(vf, stab);
    std::set<QSqrt3> cosines;
    for (const auto& c : classes) cosines.insert(c.cos_value);
    if (cosines != std::set<QSqrt3>{Rational(1, 2), Rational(-1, 2)}) continue;
    ++closed_figures;
    FaceContext ctx(g, vf, edge_orbit(g, Edge(n.u, n.v), w), w);
    auto f = ctx.trace(vf.cycle[0], n.u, vf.cycle[1]);
    CHECK(f.closed);
    CHECK(f.path.size() == 12);
    for (const auto& p : f.path) CHECK(p.z().is_zero());
  }
  CHECK(closed_figures == 1);
}

TEST_CASE("leveled star: every cyclic order passes alternation") {
  const auto& s = s1();
  CHECK(s.star.size() == 8);
  CHECK(s.stabilizer.size() == 8);
  CHECK(s.figures.all.size() == 420);
  CHECK(s.figures.alternating.size() == 420);
}

TEST_CASE("S1 figure and its three angle classes") {
  const auto& s = s1();
  const auto& n = s.points;
  CHECK(s.figure.cycle == std::vector<Vec3Q>{n.x1, n.x2, n.w1, n.w2, n.v1, n.v2, n.y1, n.y2});
  REQUIRE(s.classes.size() == 3);
  CHECK(classes_alternate(s.classes));
  const auto& a = by_label(s.classes, "alpha");
  const auto& b1 = by_label(s.classes, "beta1");
  const auto& b2 = by_label(s.classes, "beta2");
  CHECK(a.side == AngleSide::kAlpha);
  CHECK(b1.side == AngleSide::kBeta);
  CHECK(a.cos_value == QSqrt3(Rational(-13, 19)));
  CHECK(b1.cos_value == QSqrt3(Rational(-35, 38)));
  CHECK(b2.cos_value == QSqrt3(Rational(-29, 38)));
  CHECK(a.positions.size() == 4);
  CHECK(a.contains(n.x1, n.x2, s.figure));
  CHECK(b1.contains(n.x1, n.y2, s.figure));
  CHECK(b2.contains(n.y1, n.v2, s.figure));
}

TEST_CASE("alternation is read off the assigned sides") {
  AngleClass a, b;
  a.side = AngleSide::kAlpha;
  b.side = AngleSide::kBeta;
  CHECK(classes_alternate({a, b}));
  AngleClass c;
  c.side = AngleSide::kNone;
  CHECK_FALSE(classes_alternate({a, c}));
  CHECK_FALSE(classes_alternate({}));
}

TEST_CASE("non-alternating figures get neutral labels") {
  HoneypieConfig cfg;
  cfg.corner = Corner::kC30;
  auto g = honeypie_generators(cfg);
  auto n = named_points(cfg);
  auto stab = point_stabilizer(g, n.u);
  auto figs = enumerate_vertex_figures(star(stab, n.u, n.v), stab);
  std::size_t neutral = 0;
  for (const auto& vf : figs.all) {
    auto classes = angle_classes(vf, stab);
    if (classes_alternate(classes)) continue;
    ++neutral;
    for (const auto& c : classes) {
      CHECK(c.label.starts_with("c"));
      CHECK(c.side == AngleSide::kNone);
    }
  }
  CHECK(neutral > 0);
  CHECK(neutral + figs.alternating.size() == figs.all.size());
}

TEST_CASE("spiral face") {
  const auto& f = s1().spiral;
  CHECK(f.truncated);
  CHECK_FALSE(f.closed);
  REQUIRE(f.path.size() >= 3);
  // Strictly monotone in z with a drop of 2c per edge.
  const QSqrt3 step = f.path[1].z() - f.path[0].z();
  CHECK((step == QSqrt3(2) || step == QSqrt3(-2)));
  for (std::size_t i = 1; i < f.path.size(); ++i) CHECK(f.path[i].z() - f.path[i - 1].z() == step);
}

TEST_CASE("tracing methods agree and reversing the angle reverses the face") {
  const auto& s = s1();
  const auto& n = s.points;
  auto g = honeypie_generators({});
  Window w(Rational(5), Rational(2));
  FaceContext ctx(g, s.figure, edge_orbit(g, Edge(n.u, n.v1), w), w);
  for (std::size_t i = 0; i < s.figure.cycle.size(); ++i) {
    const auto& p = s.figure.cycle[i];
    const auto& q = s.figure.cycle[(i + 1) % s.figure.cycle.size()];
    auto t = ctx.trace(p, n.u, q, TraceMethod::kTransport);
    auto r = ctx.trace(p, n.u, q, TraceMethod::kRaw);
    CHECK(t == r);
    auto back = ctx.trace(q, n.u, p, TraceMethod::kBoth);
    CHECK(back.path == reversed(t.path));
  }
}

TEST_CASE("an angle outside the figure is not classified") {
  const auto& s = s1();
  const auto& n = s.points;
  auto g = honeypie_generators({});
  Window w(Rational(5), Rational(2));
  FaceContext ctx(g, s.figure, edge_orbit(g, Edge(n.u, n.v1), w), w);
  CHECK_FALSE(ctx.classify_angle(n.x1, n.u, n.v1).has_value());
  CHECK(ctx.classify_angle(n.x1, n.u, n.x2).has_value());
  auto local = ctx.local_figure(n.u);
  CHECK(std::set<Vec3Q>(local.begin(), local.end()) == std::set<Vec3Q>(s.figure.cycle.begin(), s.figure.cycle.end()));
  // Only the rotations of the stabilizer preserve the spiral figure.
  CHECK(ctx.orientation_preserving_only());
}

TEST_CASE("face orbit deduplicates") {
  const auto& P = s1().polyhedron;
  std::set<std::vector<Vec3Q>> canon;
  for (const auto& f : P.faces()) canon.insert(f.canonical_path());
  CHECK(canon.size() == P.faces().size());
  for (const auto& f : P.faces()) CHECK(f.truncated);
}

TEST_CASE("window too small for a polyhedron") {
  const auto& s = s1();
  auto g = honeypie_generators({});
  CHECK_THROWS_AS(build_polyhedron(g, s.points.u, s.points.v1, s.figure, Window(Rational(2), Rational(1))),
                  WindowTooSmallError);
}

TEST_CASE("corner selection picks only the pinned configuration") {
  auto cands = corner_selection();
  REQUIRE(cands.size() == 6);
  int selected = 0;
  for (const auto& c : cands) {
    if (!c.selected) continue;
    ++selected;
    CHECK(c.config.corner == Corner::kC90);
    CHECK_FALSE(c.config.swap_walls);
    CHECK(c.planar_star_size == 4);
    CHECK(c.planar_figure_classes == 3);
  }
  CHECK(selected == 1);
  for (const auto& c : cands) {
    if (c.config.corner == Corner::kC30) CHECK(c.stabilizer_order == 24);
    if (c.config.corner == Corner::kC60) CHECK(c.planar_star_size == 3);
  }
}
