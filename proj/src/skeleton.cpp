#include "ftpoly/skeleton.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

#include "ftpoly/errors.hpp"

namespace ftpoly {

Edge::Edge(Vec3Q p, Vec3Q q) {
  if (p == q) throw InvariantError("degenerate edge at " + p.to_string());
  if (q < p) std::swap(p, q);
  a = std::move(p);
  b = std::move(q);
}

SkeletonGraph::SkeletonGraph(std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  for (const auto& e : edges_) {
    vertices_.push_back(e.a);
    vertices_.push_back(e.b);
  }
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
  for (std::size_t i = 0; i < vertices_.size(); ++i) index_.emplace(vertices_[i], i);
  adjacency_.assign(vertices_.size(), {});
  for (const auto& e : edges_) {
    std::size_t i = index_.at(e.a);
    std::size_t j = index_.at(e.b);
    adjacency_[i].push_back(j);
    adjacency_[j].push_back(i);
  }
  for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
}

std::optional<std::size_t> SkeletonGraph::index_of(const Vec3Q& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool SkeletonGraph::has_edge(const Vec3Q& p, const Vec3Q& q) const {
  auto i = index_of(p);
  auto j = index_of(q);
  if (!i || !j) return false;
  return std::binary_search(adjacency_[*i].begin(), adjacency_[*i].end(), *j);
}

std::size_t SkeletonGraph::degree(const Vec3Q& p) const {
  auto i = index_of(p);
  return i ? adjacency_[*i].size() : 0;
}

SkeletonGraph edge_orbit(const GroupSpec& g, const Edge& e, const Window& w) {
  // Both endpoints must share a point orbit.
  const Rational reach = ceil_norm(e.a) + ceil_norm(e.b) + Rational(1);
  const auto orbit_a = orbit_points(g, e.a, Window(reach, Rational(1, 2)));
  if (!std::binary_search(orbit_a.begin(), orbit_a.end(), e.b)) {
    throw NotVertexTransitiveError("edge endpoints " + e.a.to_string() + " and " + e.b.to_string() +
                                   " lie in different point orbits");
  }
  const Rational length = ceil_norm(e.b - e.a);
  std::vector<Edge> images;
  for (const auto& s : enumerate_by_image(g, e.a, Vec3Q{}, w.radius + length)) {
    Vec3Q p = s.apply(e.a);
    Vec3Q q = s.apply(e.b);
    if (w.contains(p) || w.contains(q)) images.emplace_back(std::move(p), std::move(q));
  }
  return SkeletonGraph(std::move(images));
}

std::vector<Edge> star(const std::vector<Isometry>& stabilizer, const Vec3Q& u, const Vec3Q& v) {
  std::set<Edge> out;
  for (const auto& s : stabilizer) out.emplace(u, s.apply(v));
  return {out.begin(), out.end()};
}

std::vector<Edge> star(const GroupSpec& g, const Vec3Q& u, const Vec3Q& v) {
  return star(point_stabilizer(g, u), u, v);
}

std::vector<Vec3Q> star_endpoints(const std::vector<Edge>& edges, const Vec3Q& u) {
  std::vector<Vec3Q> out;
  for (const auto& e : edges) {
    if (!e.has(u)) throw InvariantError("star edge does not contain the base point");
    out.push_back(e.other(u));
  }
  return out;
}

std::vector<StarClassResult> star_class_invariance(const GroupSpec& g, const Vec3Q& u,
                                                   const std::vector<LatticeClass>& partition,
                                                   const LatticeBasis& lattice, const Window& w) {
  const auto stab = point_stabilizer(g, u);
  auto signature = [&](const Vec3Q& v) {
    std::vector<std::array<QSqrt3, 3>> sig;
    for (const auto& s : stab) sig.push_back(lattice_class_key(s.apply(v), lattice));
    return sig;
  };
  std::vector<StarClassResult> out;
  for (const auto& cls : partition) {
    StarClassResult r;
    // Representative: least member other than u inside the core.
    std::vector<Vec3Q> members;
    for (const auto& p : cls.members) {
      if (p != u && w.in_core(p)) members.push_back(p);
    }
    if (members.empty()) continue;
    r.representative = members.front();
    r.star_size = star(stab, u, r.representative).size();
    const auto ref = signature(r.representative);
    for (const auto& p : members) {
      ++r.members_checked;
      if (signature(p) != ref) {
        r.pass = false;
        r.witness = p;
        break;
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::string ConnectivityResult::describe(const Window& w) const {
  const std::string where = " in core window of radius " + w.core_radius().to_string();
  if (connected_in_core) return "connected" + where;
  return "disconnected" + where + ": " + witness->to_string() + " not reached";
}

ConnectivityResult connectivity_check(const SkeletonGraph& graph, const Vec3Q& start, const Window& w) {
  ConnectivityResult r;
  const auto& verts = graph.vertices();
  std::vector<char> seen(verts.size(), 0);
  if (auto s = graph.index_of(start)) {
    std::deque<std::size_t> queue{*s};
    seen[*s] = 1;
    while (!queue.empty()) {
      std::size_t i = queue.front();
      queue.pop_front();
      ++r.reached;
      for (std::size_t j : graph.neighbors(i)) {
        if (!seen[j]) {
          seen[j] = 1;
          queue.push_back(j);
        }
      }
    }
  }
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (!seen[i] && w.in_core(verts[i])) {
      r.connected_in_core = false;
      r.witness = verts[i];
      break;
    }
  }
  return r;
}

}  // namespace ftpoly
