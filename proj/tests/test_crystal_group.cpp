#include <doctest.h>

#include <algorithm>
#include <set>

#include "ftpoly/errors.hpp"
#include "ftpoly/honeypie.hpp"
#include "oracles.hpp"

using namespace ftpoly;

namespace {

const GroupSpec& group() {
  static const GroupSpec g = honeypie_generators({});
  return g;
}

Vec3Q origin() { return {}; }

std::vector<Isometry> fixing(const std::vector<Isometry>& gens, const Vec3Q& p) {
  std::vector<Isometry> out;
  for (const auto& s : gens) {
    if (s.apply(p) == p) out.push_back(s);
  }
  return out;
}

}  // namespace

TEST_CASE("window membership is exact") {
  Window w(Rational(2), Rational(1));
  CHECK(w.contains(Vec3Q(2, 0, 0)));
  CHECK_FALSE(w.contains(Vec3Q(2, Rational(1, 1000), 0)));
  CHECK(w.in_core(Vec3Q(QSqrt3(Rational(0), Rational(1, 2)), Rational(1, 2), 0)));  // norm exactly 1
  CHECK(ceil_norm(Vec3Q(3, 4, 0)) == Rational(5));
  CHECK(ceil_norm(Vec3Q(1, 1, 0)) == Rational(2));
  CHECK_THROWS_AS(Window(Rational(1), Rational(2)), InvariantError);
}

TEST_CASE("stabilizers of the slice corners agree with the generated parabolic subgroups") {
  auto gens = group().generators;
  for (Corner c : {Corner::kC30, Corner::kC90, Corner::kC60}) {
    HoneypieConfig cfg;
    cfg.corner = c;
    Vec3Q p = base_point(cfg);
    auto stab = point_stabilizer(group(), p);
    auto oracle_set = oracle::closure(fixing(gens, p));
    CHECK(stab == oracle_set);
  }
  HoneypieConfig c30;
  c30.corner = Corner::kC30;
  CHECK(point_stabilizer(group(), base_point(c30)).size() == 24);
  CHECK(point_stabilizer(group(), named_points({}).u).size() == 8);
}

TEST_CASE("interior point has trivial stabilizer") {
  Vec3Q p(Rational(1, 2), Rational(1, 10), Rational(1, 3));
  auto stab = point_stabilizer(group(), p);
  REQUIRE(stab.size() == 1);
  CHECK(stab[0] == Isometry::identity());
}

TEST_CASE("stabilizer search reports exhaustion under a tight cap") {
  CHECK_THROWS_AS(point_stabilizer(group(), origin(), 5), StabilizerExhaustedError);
}

TEST_CASE("orbit-stabilizer recount") {
  Window w(Rational(6), Rational(2));
  auto elements = enumerate_elements(group(), w);
  auto orbit = orbit_points(group(), origin(), w);
  auto stab = point_stabilizer(group(), origin());
  CHECK(elements.size() == orbit.size() * stab.size());
  CHECK(elements.size() == 3768);
  CHECK(std::is_sorted(elements.begin(), elements.end()));
  CHECK(std::adjacent_find(elements.begin(), elements.end()) == elements.end());
  for (const auto& s : elements) CHECK(w.contains(s.apply(origin())));
}

TEST_CASE("enumeration is exactly the ball, for a radius grown step by step") {
  auto u = named_points({}).u;
  auto small = enumerate_by_image(group(), u, u, Rational(3));
  auto large = enumerate_by_image(group(), u, u, Rational(4));
  std::set<Isometry> big(large.begin(), large.end());
  for (const auto& s : small) CHECK(big.count(s) == 1);
  std::size_t inside = 0;
  for (const auto& s : large) inside += within_radius(s.apply(u) - u, Rational(3)) ? 1 : 0;
  CHECK(inside == small.size());
}

TEST_CASE("orbit matches the floating-point point-BFS oracle") {
  auto gens = group().generators;
  std::vector<oracle::Affine> fg;
  for (const auto& s : gens) fg.push_back(oracle::shadow(s));
  auto u = named_points({}).u;
  for (int r : {4, 8}) {
    Window w{Rational(r), Rational(1)};
    std::vector<oracle::Point> exact;
    for (const auto& p : orbit_points(group(), u, w)) exact.push_back(oracle::shadow(p));
    auto shadow = oracle::orbit(fg, oracle::shadow(u), r, 3.0, 1e-9);
    CHECK(oracle::same_points(exact, shadow, 1e-9));
  }
}

TEST_CASE("translation lattice") {
  auto lat = translation_lattice(group(), Window(Rational(6), Rational(2)));
  std::multiset<QSqrt3> lengths;
  for (const auto& b : lat.vectors()) lengths.insert(dot(b, b));
  CHECK(lengths == std::multiset<QSqrt3>{3, 3, 4});
  for (const auto& b : lat.vectors()) {
    bool realized = false;
    for (const auto& s : enumerate_by_image(group(), origin(), b, Rational(0))) {
      realized = realized || s.classify() == Isometry::Kind::kPureTranslation;
    }
    CHECK(realized);
  }

  SUBCASE("stable when the window doubles") {
    auto wide = translation_lattice(group(), Window(Rational(12), Rational(2)));
    for (const auto& b : wide.vectors()) CHECK(lat.is_lattice_vector(b));
    for (const auto& b : lat.vectors()) CHECK(wide.is_lattice_vector(b));
  }
}

TEST_CASE("window too small for a lattice") {
  CHECK_THROWS_AS(translation_lattice(group(), Window(Rational(1), Rational(1, 2))), WindowTooSmallError);
}

TEST_CASE("lattice classes of the base-point orbit") {
  Window w(Rational(6), Rational(2));
  auto lat = translation_lattice(group(), w);
  auto orbit = orbit_points(group(), named_points({}).u, w);
  CHECK(orbit.size() == 498);
  std::vector<Vec3Q> layer;
  for (const auto& p : orbit) {
    if (p.z().is_zero()) layer.push_back(p);
  }
  CHECK(layer.size() == 126);
  auto classes = lattice_class_partition(layer, lat);
  CHECK(classes.size() == 3);
  std::size_t total = 0;
  for (const auto& c : classes) {
    total += c.members.size();
    for (const auto& m : c.members) CHECK(lat.is_lattice_vector(m - c.representative));
  }
  CHECK(total == layer.size());
  // Representatives are pairwise inequivalent.
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (std::size_t j = i + 1; j < classes.size(); ++j) {
      CHECK_FALSE(lat.is_lattice_vector(classes[i].representative - classes[j].representative));
    }
  }
  CHECK(lattice_class_partition(orbit, lat).size() == 3);
}
