#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ftpoly/crystal_group.hpp"

namespace ftpoly {

// Unordered segment, stored with the lexicographically smaller endpoint first.
struct Edge {
  Vec3Q a;
  Vec3Q b;

  Edge() = default;
  Edge(Vec3Q p, Vec3Q q);  // throws InvariantError when p == q

  bool has(const Vec3Q& p) const { return a == p || b == p; }
  const Vec3Q& other(const Vec3Q& p) const { return a == p ? b : a; }

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge& x, const Edge& y) {
    if (auto r = x.a <=> y.a; r != 0) return r;
    return x.b <=> y.b;
  }
  std::size_t hash() const { return hash_combine(a.hash(), b.hash()); }
};

struct EdgeHash {
  std::size_t operator()(const Edge& e) const { return e.hash(); }
};

class SkeletonGraph {
 public:
  SkeletonGraph() = default;
  // Vertices are the endpoints of the edges; duplicates are dropped.
  explicit SkeletonGraph(std::vector<Edge> edges);

  const std::vector<Vec3Q>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::optional<std::size_t> index_of(const Vec3Q& p) const;
  bool has_edge(const Vec3Q& p, const Vec3Q& q) const;
  // Neighbour indices of vertex i, sorted.
  const std::vector<std::size_t>& neighbors(std::size_t i) const { return adjacency_[i]; }
  std::size_t degree(const Vec3Q& p) const;

 private:
  std::vector<Vec3Q> vertices_;
  std::vector<Edge> edges_;
  std::unordered_map<Vec3Q, std::size_t, Vec3QHash> index_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

// Images of e with at least one endpoint in the window. Throws
// NotVertexTransitiveError when the endpoints lie in different point orbits.
SkeletonGraph edge_orbit(const GroupSpec& g, const Edge& e, const Window& w);

// Stabilizer orbit of [u v], sorted. Every edge has u as an endpoint.
std::vector<Edge> star(const GroupSpec& g, const Vec3Q& u, const Vec3Q& v);
// Same, with a precomputed stabilizer of u.
std::vector<Edge> star(const std::vector<Isometry>& stabilizer, const Vec3Q& u, const Vec3Q& v);
// Far endpoints of a star at u, in edge order.
std::vector<Vec3Q> star_endpoints(const std::vector<Edge>& edges, const Vec3Q& u);

struct StarClassResult {
  Vec3Q representative;
  std::size_t members_checked = 0;
  std::size_t star_size = 0;  // literal size of the representative's star
  bool pass = true;
  std::optional<Vec3Q> witness;  // member whose star disagrees
};

// Checks that the star Q_v at u depends only on the lattice class of v.
//
// Stars of one lattice class need not be congruent edge sets: a vertical
// translate of a planar neighbour yields a star that leaves the plane. The
// check is therefore made modulo the lattice: the star of v is summarized by
// the sequence of lattice classes of s(v) for s running over the stabilizer
// of u in canonical order, and every class member in the core window must
// produce the representative's sequence.
std::vector<StarClassResult> star_class_invariance(const GroupSpec& g, const Vec3Q& u,
                                                   const std::vector<LatticeClass>& partition,
                                                   const LatticeBasis& lattice, const Window& w);

struct ConnectivityResult {
  bool connected_in_core = true;
  std::optional<Vec3Q> witness;  // unreached core vertex
  std::size_t reached = 0;
  std::string describe(const Window& w) const;
};

// Breadth-first reachability from start over the whole windowed graph; passes
// when every core vertex is reached. This is a necessary condition only.
ConnectivityResult connectivity_check(const SkeletonGraph& graph, const Vec3Q& start, const Window& w);

}  // namespace ftpoly
