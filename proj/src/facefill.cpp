#include "ftpoly/facefill.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

#include "ftpoly/errors.hpp"

namespace ftpoly {

namespace {

template <typename T>
bool same_cycle(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.size() != b.size()) return false;
  const std::size_t n = a.size();
  if (n == 0) return true;
  for (std::size_t shift = 0; shift < n; ++shift) {
    if (!(b[shift] == a[0])) continue;
    bool fwd = true;
    bool bwd = true;
    for (std::size_t i = 0; i < n && (fwd || bwd); ++i) {
      if (!(b[(shift + i) % n] == a[i])) fwd = false;
      if (!(b[(shift + n - i) % n] == a[i])) bwd = false;
    }
    if (fwd || bwd) return true;
  }
  return false;
}

// Least sequence over rotations and reflections.
template <typename T>
std::vector<T> least_rotation(const std::vector<T>& seq) {
  std::vector<T> best = seq;
  std::vector<T> rev(seq.rbegin(), seq.rend());
  for (auto cur : {seq, rev}) {
    for (std::size_t i = 0; i < cur.size(); ++i) {
      std::rotate(cur.begin(), cur.begin() + 1, cur.end());
      if (cur < best) best = cur;
    }
  }
  return best;
}

std::pair<Vec3Q, Vec3Q> unordered(const Vec3Q& a, const Vec3Q& b) {
  return a < b ? std::pair{a, b} : std::pair{b, a};
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

std::string side_label(const char* base, std::size_t count, std::size_t k) {
  return count == 1 ? std::string(base) : std::string(base) + std::to_string(k + 1);
}

Vec3Q common_endpoint(const std::vector<Edge>& edges) {
  const Edge& e0 = edges.front();
  for (const Vec3Q* cand : {&e0.a, &e0.b}) {
    if (std::all_of(edges.begin(), edges.end(), [&](const Edge& e) { return e.has(*cand); })) return *cand;
  }
  throw InvariantError("star edges do not share an endpoint");
}

}  // namespace

bool AngleClass::contains(const Vec3Q& a, const Vec3Q& b, const VertexFigure& vf) const {
  const std::size_t n = vf.cycle.size();
  for (std::size_t i : positions) {
    const Vec3Q& x = vf.cycle[i];
    const Vec3Q& y = vf.cycle[(i + 1) % n];
    if ((x == a && y == b) || (x == b && y == a)) return true;
  }
  return false;
}

std::vector<Isometry> figure_symmetries(const VertexFigure& vf, const std::vector<Isometry>& stabilizer) {
  std::vector<Isometry> out;
  for (const auto& s : stabilizer) {
    if (s.apply(vf.center) != vf.center) throw InvariantError("element does not fix the figure's center");
    std::vector<Vec3Q> image;
    for (const auto& p : vf.cycle) image.push_back(s.apply(p));
    if (same_cycle(vf.cycle, image)) out.push_back(s);
  }
  return out;
}

std::vector<AngleClass> angle_classes(const VertexFigure& vf, const std::vector<Isometry>& stabilizer) {
  const std::size_t n = vf.cycle.size();
  if (n < 3) throw DegenerateVertexFigureError("vertex figure needs at least 3 points, got " + std::to_string(n));
  const auto& c = vf.cycle;
  const auto& u = vf.center;
  std::map<std::pair<Vec3Q, Vec3Q>, std::size_t> position_of;
  for (std::size_t i = 0; i < n; ++i) position_of.emplace(unordered(c[i], c[(i + 1) % n]), i);

  UnionFind uf(n);
  for (const auto& s : figure_symmetries(vf, stabilizer)) {
    for (std::size_t i = 0; i < n; ++i) {
      auto it = position_of.find(unordered(s.apply(c[i]), s.apply(c[(i + 1) % n])));
      if (it == position_of.end()) throw InconsistencyError("figure symmetry does not preserve its angles");
      uf.unite(i, it->second);
    }
  }

  std::map<std::size_t, AngleClass> by_root;
  for (std::size_t i = 0; i < n; ++i) by_root[uf.find(i)].positions.push_back(i);
  std::vector<AngleClass> classes;
  for (auto& [root, cls] : by_root) {
    const std::size_t i = cls.positions.front();
    cls.p = c[i];
    cls.q = c[(i + 1) % n];
    const Vec3Q a = cls.p - u;
    const Vec3Q b = cls.q - u;
    if (norm_sq(a) != norm_sq(b)) throw InvariantError("vertex figure points are not equidistant from the center");
    cls.cos_value = dot(a, b) / norm_sq(a);
    classes.push_back(std::move(cls));
  }

  // Sides by position parity.
  bool alternating = classes.size() == 1;
  if (!alternating && n % 2 == 0) {
    alternating = std::all_of(classes.begin(), classes.end(), [](const AngleClass& cls) {
      return std::all_of(cls.positions.begin(), cls.positions.end(),
                         [&](std::size_t i) { return i % 2 == cls.positions.front() % 2; });
    });
  }
  if (!alternating) {
    for (std::size_t k = 0; k < classes.size(); ++k) {
      classes[k].label = "c" + std::to_string(k + 1);
      classes[k].side = AngleSide::kNone;
    }
    return classes;
  }
  if (classes.size() == 1) {
    classes[0].label = "alpha";
    classes[0].side = AngleSide::kAlpha;
    return classes;
  }

  std::vector<AngleClass> parity[2];
  for (auto& cls : classes) parity[cls.positions.front() % 2].push_back(std::move(cls));
  auto by_cos = [](const AngleClass& x, const AngleClass& y) {
    int r = compare_value(x.cos_value, y.cos_value);
    if (r != 0) return r < 0;
    return x.positions.front() < y.positions.front();
  };
  for (auto& side : parity) std::sort(side.begin(), side.end(), by_cos);
  std::size_t alpha = 0;
  if (parity[0].size() != parity[1].size()) {
    alpha = parity[0].size() < parity[1].size() ? 0 : 1;
  } else {
    int r = compare_value(parity[0].back().cos_value, parity[1].back().cos_value);
    alpha = r >= 0 ? 0 : 1;
  }
  std::vector<AngleClass> out;
  for (std::size_t k = 0; k < parity[alpha].size(); ++k) {
    parity[alpha][k].label = side_label("alpha", parity[alpha].size(), k);
    parity[alpha][k].side = AngleSide::kAlpha;
    out.push_back(std::move(parity[alpha][k]));
  }
  auto& beta = parity[1 - alpha];
  for (std::size_t k = 0; k < beta.size(); ++k) {
    beta[k].label = side_label("beta", beta.size(), k);
    beta[k].side = AngleSide::kBeta;
    out.push_back(std::move(beta[k]));
  }
  return out;
}

std::vector<AngleClass> angle_classes(const VertexFigure& vf, const GroupSpec& g) {
  return angle_classes(vf, point_stabilizer(g, vf.center));
}

bool classes_alternate(const std::vector<AngleClass>& classes) {
  return !classes.empty() &&
         std::none_of(classes.begin(), classes.end(), [](const AngleClass& c) { return c.side == AngleSide::kNone; });
}

VertexFigure canonical_figure(const VertexFigure& vf, const std::vector<Isometry>& stabilizer) {
  VertexFigure best{vf.center, least_rotation(vf.cycle)};
  for (const auto& s : stabilizer) {
    std::vector<Vec3Q> image;
    for (const auto& p : vf.cycle) image.push_back(s.apply(p));
    auto cand = least_rotation(image);
    if (cand < best.cycle) best.cycle = std::move(cand);
  }
  return best;
}

VertexFigureEnumeration enumerate_vertex_figures(const std::vector<Edge>& star_edges,
                                                 const std::vector<Isometry>& stabilizer) {
  const std::size_t n = star_edges.size();
  if (n < 3) throw DegenerateVertexFigureError("star has " + std::to_string(n) + " edges; a vertex figure needs 3");
  if (n > 10) throw InvariantError("star has " + std::to_string(n) + " edges; enumeration is limited to 10");
  const Vec3Q u = common_endpoint(star_edges);
  std::vector<Vec3Q> ends = star_endpoints(star_edges, u);
  std::sort(ends.begin(), ends.end());

  // Stabilizer as permutations of endpoint indices.
  std::vector<std::vector<std::size_t>> perms;
  for (const auto& s : stabilizer) {
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) {
      auto it = std::lower_bound(ends.begin(), ends.end(), s.apply(ends[i]));
      if (it == ends.end() || *it != s.apply(ends[i])) throw InvariantError("stabilizer does not preserve the star");
      perm[i] = static_cast<std::size_t>(it - ends.begin());
    }
    perms.push_back(std::move(perm));
  }

  std::set<std::vector<std::size_t>> reps;
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  do {
    if (order[1] > order[n - 1]) continue;  // reflection of an order already visited
    std::vector<std::size_t> best = least_rotation(order);
    for (const auto& perm : perms) {
      std::vector<std::size_t> image(n);
      for (std::size_t i = 0; i < n; ++i) image[i] = perm[order[i]];
      auto cand = least_rotation(image);
      if (cand < best) best = std::move(cand);
    }
    reps.insert(std::move(best));
  } while (std::next_permutation(order.begin() + 1, order.end()));

  VertexFigureEnumeration out;
  for (const auto& rep : reps) {
    VertexFigure vf{u, {}};
    for (std::size_t i : rep) vf.cycle.push_back(ends[i]);
    if (classes_alternate(angle_classes(vf, stabilizer))) out.alternating.push_back(vf);
    out.all.push_back(std::move(vf));
  }
  return out;
}

FaceContext::FaceContext(const GroupSpec& g, const VertexFigure& vf, SkeletonGraph graph, const Window& w)
    : vf_(vf), graph_(std::move(graph)), window_(w) {
  const Vec3Q& u = vf_.center;
  const auto stab = point_stabilizer(g, u);
  const auto sym = figure_symmetries(vf_, stab);
  if (sym.size() != stab.size()) {
    std::vector<Isometry> proper;
    for (const auto& s : stab) {
      if (s.determinant_sign() > 0) proper.push_back(s);
    }
    if (sym != proper) {
      throw InvariantError("the figure's symmetries (" + std::to_string(sym.size()) + " of " +
                           std::to_string(stab.size()) + " stabilizer elements) are not a supported subgroup");
    }
    proper_only_ = true;
  }
  classes_ = angle_classes(vf_, stab);
  const std::size_t n = vf_.cycle.size();
  for (std::size_t k = 0; k < classes_.size(); ++k) {
    for (std::size_t i : classes_[k].positions) pair_class_.emplace(unordered(vf_.cycle[i], vf_.cycle[(i + 1) % n]), k);
  }

  Rational reach = w.radius;
  for (const auto& p : vf_.cycle) reach = std::max(reach, w.radius + ceil_norm(p - u));
  const auto& verts = graph_.vertices();
  std::vector<char> have(verts.size(), 0);
  first_carrier_.assign(verts.size(), Isometry());
  last_carrier_.assign(verts.size(), Isometry());
  for (const auto& s : enumerate_by_image(g, u, Vec3Q{}, reach)) {
    if (!compatible(s)) continue;
    auto idx = graph_.index_of(s.apply(u));
    if (!idx) continue;
    if (!have[*idx]) first_carrier_[*idx] = s;
    have[*idx] = 1;
    last_carrier_[*idx] = s;
  }
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (!have[i]) throw InconsistencyError("no compatible element carries the base point to " + verts[i].to_string());
  }
}

bool FaceContext::compatible(const Isometry& s) const { return !proper_only_ || s.determinant_sign() > 0; }

const Isometry& FaceContext::carrier(const Vec3Q& b, bool last) const {
  auto idx = graph_.index_of(b);
  if (!idx) throw InconsistencyError(b.to_string() + " is not a vertex of the skeleton");
  return last ? last_carrier_[*idx] : first_carrier_[*idx];
}

std::vector<Vec3Q> FaceContext::local_figure(const Vec3Q& b) const {
  const Isometry& s = carrier(b, false);
  std::vector<Vec3Q> out;
  for (const auto& p : vf_.cycle) out.push_back(s.apply(p));
  return out;
}

std::optional<std::size_t> FaceContext::classify_angle(const Vec3Q& a, const Vec3Q& b, const Vec3Q& c) const {
  const Isometry back = inverse(carrier(b, true));
  auto it = pair_class_.find(unordered(back.apply(a), back.apply(c)));
  if (it == pair_class_.end()) return std::nullopt;
  return it->second;
}

namespace {

[[noreturn]] void no_step(const Vec3Q& prev, const Vec3Q& cur, std::size_t count) {
  if (count == 0) {
    throw AlternationViolatedError("no edge at " + cur.to_string() + " (arriving from " + prev.to_string() +
                                   ") continues the alternation");
  }
  throw FaceFillingNotUniqueError("face filling is ambiguous at " + cur.to_string() + " (arriving from " +
                                  prev.to_string() + "): " + std::to_string(count) + " candidates");
}

}  // namespace

Vec3Q FaceContext::step_transport(const Vec3Q& prev, const Vec3Q& cur, AngleSide last) const {
  const auto local = local_figure(cur);
  const std::size_t n = local.size();
  auto it = std::find(local.begin(), local.end(), prev);
  if (it == local.end()) {
    throw InconsistencyError(prev.to_string() + " is not in the vertex figure at " + cur.to_string());
  }
  const std::size_t i = static_cast<std::size_t>(it - local.begin());
  std::vector<Vec3Q> cands;
  // Angle positions: (i, i+1) is position i, (i-1, i) is position i-1.
  for (auto [pos, other] : {std::pair{i, (i + 1) % n}, std::pair{(i + n - 1) % n, (i + n - 1) % n}}) {
    std::size_t cls = pair_class_.at(unordered(vf_.cycle[pos], vf_.cycle[(pos + 1) % n]));
    if (classes_[cls].side != last) cands.push_back(local[other]);
  }
  if (cands.size() != 1) no_step(prev, cur, cands.size());
  return cands.front();
}

Vec3Q FaceContext::step_raw(const Vec3Q& prev, const Vec3Q& cur, AngleSide last) const {
  const auto idx = graph_.index_of(cur);
  std::vector<Vec3Q> cands;
  for (std::size_t j : graph_.neighbors(*idx)) {
    const Vec3Q& c = graph_.vertices()[j];
    if (c == prev) continue;
    auto cls = classify_angle(prev, cur, c);
    if (cls && classes_[*cls].side != last) cands.push_back(c);
  }
  if (cands.size() != 1) no_step(prev, cur, cands.size());
  return cands.front();
}

Vec3Q FaceContext::step(const Vec3Q& prev, const Vec3Q& cur, AngleSide last, TraceMethod method) const {
  switch (method) {
    case TraceMethod::kTransport: return step_transport(prev, cur, last);
    case TraceMethod::kRaw: return step_raw(prev, cur, last);
    case TraceMethod::kBoth: break;
  }
  Vec3Q a = step_transport(prev, cur, last);
  Vec3Q b = step_raw(prev, cur, last);
  if (a != b) {
    throw InconsistencyError("tracing methods disagree at " + cur.to_string() + ": " + a.to_string() + " vs " +
                             b.to_string());
  }
  return a;
}

Face FaceContext::trace(const Vec3Q& p, const Vec3Q& b, const Vec3Q& q, TraceMethod method) const {
  if (!window_.contains(b)) throw InvariantError("trace must start inside the window");
  auto cls = classify_angle(p, b, q);
  if (!cls) throw InvariantError("start pair is not an angle of the vertex figure");
  for (const auto& cl : classes_) {
    if (cl.side == AngleSide::kNone) throw AlternationViolatedError("vertex figure angles do not alternate");
  }
  const AngleSide side0 = classes_[*cls].side;
  const std::size_t cap = graph_.vertices().size() * vf_.cycle.size() + 16;

  auto side_of = [&](const Vec3Q& a, const Vec3Q& m, const Vec3Q& c) {
    auto k = classify_angle(a, m, c);
    if (!k) throw InconsistencyError("traced angle is not an angle of the figure");
    return classes_[*k].side;
  };

  // Walks from (prev, cur) until leaving the window or returning to p - b.
  auto walk = [&](Vec3Q prev, Vec3Q cur, AngleSide side, bool& closed) {
    std::vector<Vec3Q> path{cur};
    closed = false;
    for (std::size_t k = 0; k < cap; ++k) {
      if (!window_.contains(cur)) return path;
      Vec3Q next = step(prev, cur, side, method);
      side = side_of(prev, cur, next);
      prev = std::move(cur);
      cur = std::move(next);
      if (prev == p && cur == b) {
        closed = true;
        return path;
      }
      path.push_back(cur);
    }
    throw InconsistencyError("face trace did not terminate");
  };

  Face f;
  bool closed = false;
  std::vector<Vec3Q> fwd = walk(b, q, side0, closed);
  if (closed) {
    f.path.push_back(b);
    f.path.insert(f.path.end(), fwd.begin(), fwd.end());
    f.closed = true;
    return f;
  }
  bool closed_back = false;
  std::vector<Vec3Q> bwd = walk(b, p, side0, closed_back);
  if (closed_back) throw InconsistencyError("face closes in one direction only");
  f.path.assign(bwd.rbegin(), bwd.rend());
  f.path.push_back(b);
  f.path.insert(f.path.end(), fwd.begin(), fwd.end());
  f.truncated = true;
  return f;
}

std::vector<Face> FaceContext::face_orbit(const Face& f) const {
  const std::size_t n = f.path.size();
  std::set<std::size_t> wanted;
  for (std::size_t k = 0; k < n; ++k) {
    if (!f.closed && (k == 0 || k + 1 == n)) continue;
    auto cls = classify_angle(f.path[(k + n - 1) % n], f.path[k], f.path[(k + 1) % n]);
    if (!cls) throw InvariantError("face is not traced on this vertex figure");
    wanted.insert(*cls);
  }
  std::vector<std::size_t> position_class(vf_.cycle.size());
  for (std::size_t k = 0; k < classes_.size(); ++k) {
    for (std::size_t i : classes_[k].positions) position_class[i] = k;
  }

  auto key = [&](const Vec3Q& a, const Vec3Q& m, const Vec3Q& c) {
    std::size_t ia = *graph_.index_of(a), im = *graph_.index_of(m), ic = *graph_.index_of(c);
    return ia < ic ? AngleKey{ia, im, ic} : AngleKey{ic, im, ia};
  };
  std::unordered_set<AngleKey, AngleHash> done;
  std::vector<Face> faces;
  const std::size_t q = vf_.cycle.size();
  for (const auto& b : graph_.vertices()) {
    if (!window_.contains(b)) continue;
    const auto local = local_figure(b);
    for (std::size_t i = 0; i < q; ++i) {
      if (!wanted.contains(position_class[i])) continue;
      const Vec3Q& a = local[i];
      const Vec3Q& c = local[(i + 1) % q];
      if (done.contains(key(a, b, c))) continue;
      Face face = trace(a, b, c);
      const std::size_t m = face.path.size();
      for (std::size_t k = 0; k < m; ++k) {
        if (!face.closed && (k == 0 || k + 1 == m)) continue;
        if (!done.insert(key(face.path[(k + m - 1) % m], face.path[k], face.path[(k + 1) % m])).second) {
          throw InconsistencyError("an angle lies on two traced faces");
        }
      }
      faces.push_back(std::move(face));
    }
  }
  std::sort(faces.begin(), faces.end(),
            [](const Face& x, const Face& y) { return x.canonical_path() < y.canonical_path(); });
  return faces;
}

Face trace_face(const FaceContext& ctx, const Vec3Q& p, const Vec3Q& b, const Vec3Q& q, TraceMethod method) {
  return ctx.trace(p, b, q, method);
}

std::vector<Face> face_orbit(const FaceContext& ctx, const Face& f) { return ctx.face_orbit(f); }

namespace {

void require_window(const Vec3Q& u, const Vec3Q& v, const Window& w) {
  const Rational core = w.core_radius();
  if (compare_value(norm_sq(v - u), QSqrt3(core * core)) >= 0) {
    throw WindowTooSmallError("core window radius " + core.to_string() + " does not exceed the edge length");
  }
}

}  // namespace

Polyhedron build_polyhedron(const GroupSpec& g, const Vec3Q& u, const Vec3Q& v, const VertexFigure& vf,
                            const Window& w) {
  require_window(u, v, w);
  if (vf.center != u) throw InvariantError("vertex figure is not centered at the base point");
  FaceContext ctx(g, vf, edge_orbit(g, Edge(u, v), w), w);
  Face f = ctx.trace(vf.cycle[0], u, vf.cycle[1]);
  auto faces = ctx.face_orbit(f);
  return Polyhedron(ctx.graph().vertices(), ctx.graph().edges(), std::move(faces));
}

VertexFigure select_spiral_figure(const VertexFigureEnumeration& figures, const NamedPoints& n,
                                  const std::vector<Isometry>& stabilizer) {
  std::vector<VertexFigure> matches;
  for (const auto& vf : figures.alternating) {
    const auto classes = angle_classes(vf, stabilizer);
    if (classes.size() != 3) continue;
    for (const auto& s : stabilizer) {
      VertexFigure image{vf.center, {}};
      for (const auto& p : vf.cycle) image.cycle.push_back(s.apply(p));
      // Labels are preserved by conjugation, positions by the pointwise map.
      auto has = [&](const std::string& label, const Vec3Q& a, const Vec3Q& b) {
        return std::any_of(classes.begin(), classes.end(), [&](const AngleClass& c) {
          return c.label == label && c.contains(a, b, image);
        });
      };
      if (has("alpha", n.x1, n.x2) && has("beta1", n.x1, n.y2) && has("beta2", n.y1, n.v2)) {
        // Rotate so that the alpha angle x1 - u - x2 comes first.
        auto& cyc = image.cycle;
        auto it = std::find(cyc.begin(), cyc.end(), n.x1);
        std::rotate(cyc.begin(), it, cyc.end());
        if (cyc[1] != n.x2) std::reverse(cyc.begin() + 1, cyc.end());
        matches.push_back(std::move(image));
        break;
      }
    }
  }
  if (matches.size() != 1) {
    throw InconsistencyError(std::to_string(matches.size()) +
                             " vertex figures match the three quoted angles; expected exactly one");
  }
  return matches.front();
}

S1Construction construct_s1(const HoneypieConfig& cfg, const Window& w) {
  S1Construction s;
  s.config = cfg;
  const GroupSpec g = honeypie_generators(cfg);
  s.points = named_points(cfg);
  const Vec3Q& u = s.points.u;
  require_window(u, s.points.v1, w);
  s.stabilizer = point_stabilizer(g, u);
  s.star = star(s.stabilizer, u, s.points.v1);
  s.figures = enumerate_vertex_figures(s.star, s.stabilizer);
  s.figure = select_spiral_figure(s.figures, s.points, s.stabilizer);
  s.classes = angle_classes(s.figure, s.stabilizer);
  FaceContext ctx(g, s.figure, edge_orbit(g, Edge(u, s.points.v1), w), w);
  s.spiral = ctx.trace(s.points.x1, u, s.points.x2);
  auto faces = ctx.face_orbit(s.spiral);
  s.polyhedron = Polyhedron(ctx.graph().vertices(), ctx.graph().edges(), std::move(faces));
  return s;
}

Polyhedron build_s1(const HoneypieConfig& cfg, const Window& w) { return construct_s1(cfg, w).polyhedron; }

std::vector<ConfigurationCandidate> corner_selection(const Rational& c, const Rational& scale) {
  std::vector<ConfigurationCandidate> out;
  for (Corner corner : {Corner::kC30, Corner::kC90, Corner::kC60}) {
    for (bool swap : {false, true}) {
      ConfigurationCandidate cand;
      cand.config.c = c;
      cand.config.scale = scale;
      cand.config.corner = corner;
      cand.config.swap_walls = swap;
      const GroupSpec g = honeypie_generators(cand.config);
      const NamedPoints n = named_points(cand.config);
      const auto stab = point_stabilizer(g, n.u);
      cand.stabilizer_order = stab.size();
      const auto planar = star(stab, n.u, n.v);
      cand.planar_star_size = planar.size();
      try {
        cand.planar_figure_classes = enumerate_vertex_figures(planar, stab).alternating.size();
        select_spiral_figure(enumerate_vertex_figures(star(stab, n.u, n.v1), stab), n, stab);
        cand.spiral_figure_found = true;
      } catch (const Error&) {
        // Degenerate or oversized stars simply do not qualify.
      }
      cand.selected = cand.planar_star_size == 4 && cand.planar_figure_classes == 3 && cand.spiral_figure_found;
      out.push_back(cand);
    }
  }
  return out;
}

}  // namespace ftpoly
