#include "ftpoly/polyhedron.hpp"

#include <algorithm>

#include "ftpoly/errors.hpp"

namespace ftpoly {

std::vector<Edge> Face::edges() const {
  std::vector<Edge> out;
  if (path.size() < 2) return out;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) out.emplace_back(path[i], path[i + 1]);
  if (closed) out.emplace_back(path.back(), path.front());
  return out;
}

std::vector<Vec3Q> Face::canonical_path() const {
  const std::vector<Vec3Q> rev(path.rbegin(), path.rend());
  if (!closed) return std::min(path, rev);
  std::vector<Vec3Q> best = path;
  for (const auto* seq : {&path, &rev}) {
    std::vector<Vec3Q> rot = *seq;
    for (std::size_t i = 0; i < rot.size(); ++i) {
      std::rotate(rot.begin(), rot.begin() + 1, rot.end());
      best = std::min(best, rot);
    }
  }
  return best;
}

Polyhedron::Polyhedron(std::vector<Vec3Q> vertices, std::vector<Edge> edges, std::vector<Face> faces)
    : faces_(std::move(faces)) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  vertices_ = std::move(vertices);
  edges_ = std::move(edges);
  for (std::size_t i = 0; i < vertices_.size(); ++i) vertex_index_.emplace(vertices_[i], i);
  vertex_edges_.assign(vertices_.size(), {});
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    edge_index_.emplace(edges_[i], i);
    for (const auto* p : {&edges_[i].a, &edges_[i].b}) {
      auto it = vertex_index_.find(*p);
      if (it == vertex_index_.end()) throw InvariantError("edge endpoint " + p->to_string() + " is not a vertex");
      vertex_edges_[it->second].push_back(i);
    }
  }
  edge_faces_.assign(edges_.size(), {});
  vertex_angles_.assign(vertices_.size(), {});
  for (std::size_t f = 0; f < faces_.size(); ++f) {
    const Face& face = faces_[f];
    for (const auto& e : face.edges()) {
      auto it = edge_index_.find(e);
      if (it == edge_index_.end()) {
        throw InvariantError("face " + std::to_string(f) + " uses " + e.a.to_string() + " - " + e.b.to_string() +
                             ", which is not an edge");
      }
      edge_faces_[it->second].push_back(f);
    }
    const std::size_t n = face.path.size();
    std::vector<std::size_t> idx;
    for (const auto& p : face.path) idx.push_back(vertex_index_.at(p));
    const std::size_t first = face.closed ? 0 : 1;
    const std::size_t last = face.closed ? n : n - 1;
    for (std::size_t k = first; k < last && n >= 3; ++k) {
      std::size_t prev = idx[(k + n - 1) % n];
      std::size_t next = idx[(k + 1) % n];
      AngleKey key = angle_key(prev, idx[k], next);
      angles_.emplace(key, f);
      vertex_angles_[idx[k]].emplace_back(key, f);
    }
  }
}

std::optional<std::size_t> Polyhedron::vertex_index(const Vec3Q& p) const {
  auto it = vertex_index_.find(p);
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Polyhedron::edge_index(const Edge& e) const {
  auto it = edge_index_.find(e);
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

}  // namespace ftpoly
