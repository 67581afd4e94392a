#include "ftpoly/crystal_group.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_set>

#include "ftpoly/errors.hpp"

namespace ftpoly {

GroupSpec::GroupSpec(std::vector<Isometry> gens, Rational chamber_diam)
    : generators(std::move(gens)), chamber_diameter(std::move(chamber_diam)) {
  if (generators.empty()) throw InvariantError("group needs at least one generator");
  for (const auto& gen : generators) {
    if (!gen.is_orthogonal()) throw InvariantError("generator is not an isometry");
  }
}

Window::Window(Rational r, Rational m) : radius(std::move(r)), margin(std::move(m)) {
  if (margin.sign() <= 0 || margin >= radius) {
    throw InvariantError("window needs 0 < margin < radius (radius " + radius.to_string() + ", margin " +
                         margin.to_string() + ")");
  }
}

bool within_radius(const Vec3Q& p, const Rational& r) {
  return compare_value(norm_sq(p), QSqrt3(r * r)) <= 0;
}

bool Window::contains(const Vec3Q& p) const { return within_radius(p, radius); }
bool Window::in_core(const Vec3Q& p) const { return within_radius(p, core_radius()); }

Rational ceil_norm(const Vec3Q& p) {
  const QSqrt3 n2 = norm_sq(p);
  auto guess = static_cast<std::int64_t>(std::ceil(std::sqrt(std::max(0.0, n2.to_double()))));
  // Repair a floating guess so that the exact predicate holds.
  while (guess > 0 && compare_value(n2, QSqrt3(Rational((guess - 1) * (guess - 1)))) <= 0) --guess;
  while (compare_value(n2, QSqrt3(Rational(guess * guess))) > 0) ++guess;
  return Rational(guess);
}

std::vector<Isometry> enumerate_by_image(const GroupSpec& g, const Vec3Q& anchor, const Vec3Q& center,
                                         const Rational& radius, std::size_t max_word_length) {
  std::vector<Vec3Q> gen_images;
  Rational step(0);
  for (const auto& gen : g.generators) {
    gen_images.push_back(gen.apply(anchor));
    step = std::max(step, ceil_norm(gen_images.back() - anchor));
  }
  const Rational slack = std::max(Rational(2) * step, g.chamber_diameter);
  const Rational prune = radius + slack;

  std::unordered_set<Isometry, IsometryHash> seen;
  std::vector<Isometry> frontier{Isometry::identity()};
  seen.insert(frontier.front());
  std::size_t depth = 0;
  while (!frontier.empty()) {
    if (max_word_length != 0 && depth >= max_word_length) {
      throw StabilizerExhaustedError("stabilizer search exhausted: still growing at word length " +
                                     std::to_string(depth));
    }
    std::vector<Isometry> next;
    for (const auto& s : frontier) {
      for (std::size_t i = 0; i < g.generators.size(); ++i) {
        // (s * gen)(anchor) = s(gen(anchor)); test before composing.
        if (!within_radius(s.apply(gen_images[i]) - center, prune)) continue;
        Isometry t = compose(s, g.generators[i]);
        if (seen.insert(t).second) next.push_back(std::move(t));
      }
    }
    frontier = std::move(next);
    ++depth;
  }

  std::vector<Isometry> out;
  for (const auto& s : seen) {
    if (within_radius(s.apply(anchor) - center, radius)) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Isometry> enumerate_elements(const GroupSpec& g, const Window& w) {
  return enumerate_by_image(g, Vec3Q{}, Vec3Q{}, w.radius);
}

std::vector<Isometry> point_stabilizer(const GroupSpec& g, const Vec3Q& p, std::size_t max_word_length) {
  std::vector<Isometry> stab = enumerate_by_image(g, p, p, Rational(0), max_word_length);
  std::unordered_set<Isometry, IsometryHash> members(stab.begin(), stab.end());
  for (const auto& a : stab) {
    if (!members.contains(inverse(a))) throw InconsistencyError("stabilizer not closed under inverses");
    for (const auto& b : stab) {
      if (!members.contains(compose(a, b))) throw InconsistencyError("stabilizer not closed under composition");
    }
  }
  return stab;
}

std::vector<Vec3Q> orbit_points(const GroupSpec& g, const Vec3Q& p, const Window& w) {
  std::unordered_set<Vec3Q, Vec3QHash> pts;
  for (const auto& s : enumerate_by_image(g, p, Vec3Q{}, w.radius)) pts.insert(s.apply(p));
  std::vector<Vec3Q> out(pts.begin(), pts.end());
  std::sort(out.begin(), out.end());
  return out;
}

LatticeBasis::LatticeBasis(Vec3Q b1, Vec3Q b2, Vec3Q b3) : basis_{std::move(b1), std::move(b2), std::move(b3)} {
  Mat3Q m = Mat3Q::from_columns(basis_[0], basis_[1], basis_[2]);
  if (m.det().is_zero()) throw InvariantError("lattice basis is not linearly independent");
  inverse_ = m.inverse();
}

std::array<QSqrt3, 3> LatticeBasis::coordinates(const Vec3Q& v) const {
  Vec3Q c = inverse_ * v;
  return {c[0], c[1], c[2]};
}

bool LatticeBasis::is_lattice_vector(const Vec3Q& v) const {
  for (const auto& c : coordinates(v)) {
    if (!c.sqrt3_part().is_zero() || !c.rational_part().is_integer()) return false;
  }
  return true;
}

namespace {

using IntVec = std::array<Rational, 3>;

// Row-style Hermite reduction of integer vectors; returns a basis of the
// Z-module they span (assumed rank 3).
std::vector<IntVec> hermite_basis(std::vector<IntVec> rows) {
  std::vector<IntVec> basis;
  for (std::size_t col = 0; col < 3; ++col) {
    while (true) {
      // Pivot: row with the smallest nonzero |entry| in this column.
      std::size_t pivot = rows.size();
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][col].is_zero()) continue;
        if (pivot == rows.size() || rows[i][col].abs() < rows[pivot][col].abs()) pivot = i;
      }
      if (pivot == rows.size()) break;
      bool reduced = false;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i == pivot || rows[i][col].is_zero()) continue;
        Rational q = (rows[i][col] / rows[pivot][col]).floor();
        for (std::size_t k = 0; k < 3; ++k) rows[i][k] -= q * rows[pivot][k];
        reduced = true;
      }
      bool alone = std::none_of(rows.begin(), rows.end(), [&](const IntVec& r) {
        return &r != &rows[pivot] && !r[col].is_zero();
      });
      if (alone) {
        basis.push_back(rows[pivot]);
        rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(pivot));
        break;
      }
      if (!reduced) break;
    }
  }
  return basis;
}

}  // namespace

LatticeBasis translation_lattice(const GroupSpec& g, const Window& w) {
  std::vector<Vec3Q> translations;
  for (const auto& s : enumerate_elements(g, w)) {
    if (s.classify() == Isometry::Kind::kPureTranslation) translations.push_back(s.shift());
  }
  // Shortest first; ties broken by canonical order.
  std::vector<std::pair<QSqrt3, Vec3Q>> keyed;
  for (const auto& t : translations) keyed.emplace_back(norm_sq(t), t);
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) {
    int c = compare_value(x.first, y.first);
    if (c != 0) return c < 0;
    return x.second < y.second;
  });

  std::vector<Vec3Q> picked;
  for (const auto& [n, t] : keyed) {
    if (picked.empty()) {
      picked.push_back(t);
    } else if (picked.size() == 1) {
      if (!cross(picked[0], t).is_zero()) picked.push_back(t);
    } else if (!dot(cross(picked[0], picked[1]), t).is_zero()) {
      picked.push_back(t);
      break;
    }
  }
  if (picked.size() < 3) {
    throw WindowTooSmallError("window too small: found only " + std::to_string(picked.size()) +
                              " independent translations");
  }

  LatticeBasis basis(picked[0], picked[1], picked[2]);
  for (int round = 0; round < 8; ++round) {
    std::vector<std::array<QSqrt3, 3>> coords;
    bool all_integer = true;
    for (const auto& t : translations) {
      auto c = basis.coordinates(t);
      for (const auto& x : c) {
        if (!x.sqrt3_part().is_zero()) throw InconsistencyError("translation outside the rational span of the lattice");
        if (!x.rational_part().is_integer()) all_integer = false;
      }
      coords.push_back(c);
    }
    if (all_integer) return basis;

    // Common denominator, then Hermite-reduce the integer coefficient rows.
    Rational denom(1);
    for (const auto& c : coords) {
      for (const auto& x : c) {
        Rational d = x.rational_part() * denom;
        if (!d.is_integer()) denom *= d.denominator();
      }
    }
    std::vector<IntVec> rows;
    for (std::size_t i = 0; i < 3; ++i) {
      IntVec r{Rational(0), Rational(0), Rational(0)};
      r[i] = denom;
      rows.push_back(r);
    }
    for (const auto& c : coords) {
      rows.push_back({c[0].rational_part() * denom, c[1].rational_part() * denom, c[2].rational_part() * denom});
    }
    auto hb = hermite_basis(rows);
    if (hb.size() != 3) throw InconsistencyError("translation module is not of rank 3");
    std::array<Vec3Q, 3> nb;
    for (std::size_t i = 0; i < 3; ++i) {
      Vec3Q v;
      for (std::size_t k = 0; k < 3; ++k) v = v + QSqrt3(hb[i][k] / denom) * basis.vectors()[k];
      nb[i] = v;
    }
    basis = LatticeBasis(nb[0], nb[1], nb[2]);
  }
  throw InconsistencyError("lattice refinement did not converge");
}

std::array<QSqrt3, 3> lattice_class_key(const Vec3Q& p, const LatticeBasis& lattice) {
  auto c = lattice.coordinates(p);
  std::array<QSqrt3, 3> key;
  for (std::size_t i = 0; i < 3; ++i) {
    const Rational& a = c[i].rational_part();
    key[i] = QSqrt3(a - a.floor(), c[i].sqrt3_part());
  }
  return key;
}

std::vector<LatticeClass> lattice_class_partition(const std::vector<Vec3Q>& points, const LatticeBasis& lattice) {
  if (points.empty()) throw InvariantError("lattice_class_partition needs a nonempty point set");
  std::map<std::array<QSqrt3, 3>, std::vector<Vec3Q>> groups;
  for (const auto& p : points) groups[lattice_class_key(p, lattice)].push_back(p);
  std::vector<LatticeClass> out;
  for (auto& [key, members] : groups) {
    std::sort(members.begin(), members.end());
    out.push_back({members.front(), members});
  }
  std::sort(out.begin(), out.end(),
            [](const LatticeClass& a, const LatticeClass& b) { return a.representative < b.representative; });
  return out;
}

}  // namespace ftpoly
