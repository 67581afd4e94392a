#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "ftpoly/skeleton.hpp"

namespace ftpoly {

// A polygon given by its vertex path. A closed face lists each vertex once
// and wraps around; a truncated face is the part of an infinite face that
// meets the window, from cut point to cut point (both outside the window).
struct Face {
  std::vector<Vec3Q> path;
  bool closed = false;
  bool truncated = false;

  std::vector<Edge> edges() const;
  // Orientation- and rotation-free form used for deduplication.
  std::vector<Vec3Q> canonical_path() const;

  friend bool operator==(const Face&, const Face&) = default;
};

// Index triple (p, b, q) of an angle at b, with p < q.
using AngleKey = std::tuple<std::size_t, std::size_t, std::size_t>;

struct AngleHash {
  std::size_t operator()(const AngleKey& k) const {
    return hash_combine(hash_combine(std::get<0>(k), std::get<1>(k)), std::get<2>(k));
  }
};

// Windowed incidence structure (V, E, F). Vertices and edges are kept in
// canonical order; faces in the order given.
class Polyhedron {
 public:
  Polyhedron() = default;
  // Throws InvariantError when a face uses an edge outside E or an edge has an
  // endpoint outside V.
  Polyhedron(std::vector<Vec3Q> vertices, std::vector<Edge> edges, std::vector<Face> faces);

  const std::vector<Vec3Q>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Face>& faces() const { return faces_; }

  std::optional<std::size_t> vertex_index(const Vec3Q& p) const;
  std::optional<std::size_t> edge_index(const Edge& e) const;
  // Faces containing edge i, with multiplicity.
  const std::vector<std::size_t>& faces_of_edge(std::size_t i) const { return edge_faces_[i]; }
  // Edges at vertex i.
  const std::vector<std::size_t>& edges_at(std::size_t i) const { return vertex_edges_[i]; }
  // Face angles: key -> face index, for every interior vertex of every face.
  const std::unordered_map<AngleKey, std::size_t, AngleHash>& angles() const { return angles_; }
  // Angle occurrences at vertex i as (key, face).
  const std::vector<std::pair<AngleKey, std::size_t>>& angles_at(std::size_t i) const { return vertex_angles_[i]; }

  friend bool operator==(const Polyhedron& x, const Polyhedron& y) {
    return x.vertices_ == y.vertices_ && x.edges_ == y.edges_ && x.faces_ == y.faces_;
  }

  AngleKey angle_key(std::size_t p, std::size_t b, std::size_t q) const {
    return p < q ? AngleKey{p, b, q} : AngleKey{q, b, p};
  }

 private:
  std::vector<Vec3Q> vertices_;
  std::vector<Edge> edges_;
  std::vector<Face> faces_;
  std::unordered_map<Vec3Q, std::size_t, Vec3QHash> vertex_index_;
  std::unordered_map<Edge, std::size_t, EdgeHash> edge_index_;
  std::vector<std::vector<std::size_t>> edge_faces_;
  std::vector<std::vector<std::size_t>> vertex_edges_;
  std::unordered_map<AngleKey, std::size_t, AngleHash> angles_;
  std::vector<std::vector<std::pair<AngleKey, std::size_t>>> vertex_angles_;
};

}  // namespace ftpoly
