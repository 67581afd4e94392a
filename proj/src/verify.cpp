#include "ftpoly/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "ftpoly/errors.hpp"

namespace ftpoly {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

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
  std::size_t components(const std::vector<std::size_t>& items) {
    std::set<std::size_t> roots;
    for (std::size_t i : items) roots.insert(find(i));
    return roots.size();
  }
};

std::vector<char> core_vertex_mask(const Polyhedron& p, const Window& w) {
  std::vector<char> mask(p.vertices().size(), 0);
  for (std::size_t i = 0; i < mask.size(); ++i) mask[i] = w.in_core(p.vertices()[i]) ? 1 : 0;
  return mask;
}

std::string edge_text(const Edge& e) { return "[" + e.a.to_string() + " " + e.b.to_string() + "]"; }

}  // namespace

AxiomReport verify_axioms(const Polyhedron& p, const Window& w) {
  AxiomReport r;
  r.core_radius = w.core_radius();
  const auto core = core_vertex_mask(p, w);
  const auto& edges = p.edges();
  std::vector<std::size_t> core_edges;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (core[*p.vertex_index(edges[i].a)] && core[*p.vertex_index(edges[i].b)]) core_edges.push_back(i);
  }
  r.core_vertices = static_cast<std::size_t>(std::count(core.begin(), core.end(), 1));
  r.core_edges = core_edges.size();

  // (1)
  for (std::size_t i : core_edges) {
    const std::size_t n = p.faces_of_edge(i).size();
    if (n != 2) {
      r.edge_two_faces = {false, "edge " + edge_text(edges[i]) + " lies in " + std::to_string(n) + (n == 1 ? " face" : " faces")};
      r.exposed_edge = edges[i];
      break;
    }
  }

  // (2) Occurrences of faces at b, joined when they share an edge at b, must
  // form a single cycle of length >= 3 covering every edge at b.
  for (std::size_t b = 0; b < core.size() && r.vertex_circuit.pass; ++b) {
    if (!core[b]) continue;
    const auto& occ = p.angles_at(b);
    std::map<std::size_t, std::vector<std::size_t>> by_neighbor;  // neighbour vertex -> occurrences
    for (std::size_t k = 0; k < occ.size(); ++k) {
      by_neighbor[std::get<0>(occ[k].first)].push_back(k);
      by_neighbor[std::get<2>(occ[k].first)].push_back(k);
    }
    std::string problem;
    if (occ.size() < 3) problem = std::to_string(occ.size()) + " face corners";
    if (problem.empty() && by_neighbor.size() != p.edges_at(b).size()) problem = "an edge carries no face";
    UnionFind uf(occ.size());
    for (const auto& [nb, list] : by_neighbor) {
      if (!problem.empty()) break;
      if (list.size() != 2) {
        problem = "edge to " + p.vertices()[nb].to_string() + " is shared by " + std::to_string(list.size()) +
                  " face corners";
      } else {
        uf.unite(list[0], list[1]);
      }
    }
    if (problem.empty() && !occ.empty()) {
      std::vector<std::size_t> all(occ.size());
      std::iota(all.begin(), all.end(), 0);
      if (uf.components(all) != 1) problem = "faces form " + std::to_string(uf.components(all)) + " circuits";
    }
    if (!problem.empty()) r.vertex_circuit = {false, "vertex " + p.vertices()[b].to_string() + ": " + problem};
  }

  // (3)
  UnionFind chain(edges.size());
  for (const auto& f : p.faces()) {
    const auto fe = f.edges();
    for (std::size_t k = 1; k < fe.size(); ++k) chain.unite(*p.edge_index(fe[0]), *p.edge_index(fe[k]));
  }
  for (std::size_t i : core_edges) {
    if (chain.find(i) != chain.find(core_edges.front())) {
      r.connected = {false, "edge " + edge_text(edges[i]) + " is not chained to " + edge_text(edges[core_edges.front()])};
      break;
    }
  }

  // (4)
  for (std::size_t b = 0; b < core.size(); ++b) {
    if (!core[b]) continue;
    std::set<std::size_t> faces;
    for (const auto& [key, f] : p.angles_at(b)) faces.insert(f);
    r.max_faces_per_vertex = std::max(r.max_faces_per_vertex, faces.size());
    if (faces.size() > p.edges_at(b).size() && r.locally_finite.pass) {
      r.locally_finite = {false, "vertex " + p.vertices()[b].to_string() + " meets " + std::to_string(faces.size()) +
                                     " faces but has degree " + std::to_string(p.edges_at(b).size())};
    }
  }
  return r;
}

std::string AxiomReport::describe() const {
  std::ostringstream out;
  out << "axioms in core window of radius " << core_radius.to_string() << " (" << core_vertices << " vertices, "
      << core_edges << " edges)\n";
  auto line = [&](const char* name, const AxiomResult& a) {
    out << "  " << name << ": " << (a.pass ? "pass" : "FAIL");
    if (!a.pass) out << " -- " << a.witness;
    out << "\n";
  };
  line("(1) edge in two faces", edge_two_faces);
  line("(2) vertex circuit", vertex_circuit);
  line("(3) connected", connected);
  line("(4) locally finite", locally_finite);
  out << "  max faces per core vertex: " << max_faces_per_vertex << "\n";
  return out.str();
}

SymmetryReport symmetry_report(const GroupSpec& g, const Polyhedron& p, const Window& w) {
  SymmetryReport r;
  r.core_radius = w.core_radius();
  const auto& verts = p.vertices();
  const auto& edges = p.edges();
  const auto& faces = p.faces();
  const auto core = core_vertex_mask(p, w);

  std::vector<std::size_t> core_vertices;
  for (std::size_t i = 0; i < core.size(); ++i) {
    if (core[i]) core_vertices.push_back(i);
  }
  std::vector<char> edge_core(edges.size(), 0);
  std::vector<std::size_t> core_edges;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (core[*p.vertex_index(edges[i].a)] && core[*p.vertex_index(edges[i].b)]) {
      edge_core[i] = 1;
      core_edges.push_back(i);
    }
  }

  // Faces with a core edge, the angle used to follow each, and core flags.
  std::vector<char> face_core(faces.size(), 0);
  std::vector<AngleKey> face_angle(faces.size());
  std::vector<Flag> flags;
  std::vector<AngleKey> flag_angle;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const auto& path = faces[f].path;
    const std::size_t n = path.size();
    std::vector<std::size_t> idx;
    for (const auto& v : path) idx.push_back(*p.vertex_index(v));
    const std::size_t m = faces[f].closed ? n : n - 1;
    for (std::size_t k = 0; k < m; ++k) {
      const std::size_t a = idx[k], b = idx[(k + 1) % n];
      const std::size_t e = *p.edge_index(Edge(path[k], path[(k + 1) % n]));
      if (!edge_core[e]) continue;
      // Both endpoints are core, hence interior points of the path.
      AngleKey at_a = p.angle_key(idx[(k + n - 1) % n], a, b);
      AngleKey at_b = p.angle_key(a, b, idx[(k + 2) % n]);
      if (!face_core[f]) face_angle[f] = at_a;
      face_core[f] = 1;
      flags.push_back({a, e, f});
      flag_angle.push_back(at_a);
      flags.push_back({b, e, f});
      flag_angle.push_back(at_b);
    }
  }
  std::vector<std::size_t> core_faces;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    if (face_core[f]) core_faces.push_back(f);
  }
  std::map<Flag, std::size_t> flag_index;
  for (std::size_t i = 0; i < flags.size(); ++i) flag_index.emplace(flags[i], i);

  // Vertices whose images are ever needed: core vertices and their neighbours.
  std::vector<std::size_t> relevant = core_vertices;
  for (std::size_t b : core_vertices) {
    for (std::size_t e : p.edges_at(b)) {
      relevant.push_back(*p.vertex_index(edges[e].a));
      relevant.push_back(*p.vertex_index(edges[e].b));
    }
  }
  std::sort(relevant.begin(), relevant.end());
  relevant.erase(std::unique(relevant.begin(), relevant.end()), relevant.end());
  std::vector<std::size_t> slot(verts.size(), kNone);
  for (std::size_t k = 0; k < relevant.size(); ++k) slot[relevant[k]] = k;

  UnionFind uv(verts.size()), ue(edges.size()), uf(faces.size()), ufl(flags.size());
  std::map<Mat3Q, std::vector<Vec3Q>> linear_images;
  const auto elements = enumerate_by_image(g, Vec3Q{}, Vec3Q{}, Rational(2) * w.core_radius());
  r.elements_examined = elements.size();
  std::vector<std::size_t> image(relevant.size());
  for (const auto& s : elements) {
    auto [it, fresh] = linear_images.try_emplace(s.linear());
    if (fresh) {
      for (std::size_t v : relevant) it->second.push_back(s.apply_linear(verts[v]));
    }
    const auto& lin = it->second;
    for (std::size_t k = 0; k < relevant.size(); ++k) {
      auto found = p.vertex_index(lin[k] + s.shift());
      image[k] = found ? *found : kNone;
    }
    auto img = [&](std::size_t v) { return image[slot[v]]; };

    bool touches = false;
    bool symmetric = true;
    for (std::size_t b : core_vertices) {
      const std::size_t ib = img(b);
      if (ib == kNone || !core[ib]) continue;
      touches = true;
      for (const auto& [key, f] : p.angles_at(b)) {
        const std::size_t ip = img(std::get<0>(key)), iq = img(std::get<2>(key));
        if (ip == kNone || iq == kNone || !p.angles().contains(p.angle_key(ip, ib, iq))) {
          symmetric = false;
          break;
        }
      }
      if (!symmetric) break;
    }
    if (!touches) continue;
    if (!symmetric) {
      ++r.elements_rejected;
      continue;
    }
    ++r.symmetries_used;

    for (std::size_t b : core_vertices) {
      const std::size_t ib = img(b);
      if (ib != kNone && core[ib]) uv.unite(b, ib);
    }
    auto image_edge = [&](std::size_t e) -> std::size_t {
      const std::size_t a = img(*p.vertex_index(edges[e].a)), b = img(*p.vertex_index(edges[e].b));
      if (a == kNone || b == kNone) return kNone;
      auto found = p.edge_index(Edge(verts[a], verts[b]));
      return found ? *found : kNone;
    };
    auto image_face = [&](const AngleKey& key) -> std::size_t {
      const auto& [x, b, y] = key;
      if (img(b) == kNone || !core[img(b)]) return kNone;
      auto found = p.angles().find(p.angle_key(img(x), img(b), img(y)));
      return found == p.angles().end() ? kNone : found->second;
    };
    for (std::size_t e : core_edges) {
      const std::size_t ie = image_edge(e);
      if (ie != kNone && edge_core[ie]) ue.unite(e, ie);
    }
    for (std::size_t f : core_faces) {
      const std::size_t jf = image_face(face_angle[f]);
      if (jf != kNone && face_core[jf]) uf.unite(f, jf);
    }
    for (std::size_t i = 0; i < flags.size(); ++i) {
      const std::size_t iv = img(flags[i].vertex);
      if (iv == kNone || !core[iv]) continue;
      const std::size_t ie = image_edge(flags[i].edge);
      const std::size_t jf = image_face(flag_angle[i]);
      if (ie == kNone || jf == kNone || !edge_core[ie]) continue;
      auto found = flag_index.find(Flag{iv, ie, jf});
      if (found != flag_index.end()) ufl.unite(i, found->second);
    }
  }

  r.core_vertices = core_vertices.size();
  r.core_edges = core_edges.size();
  r.core_faces = core_faces.size();
  r.core_flags = flags.size();
  r.vertex_orbits = uv.components(core_vertices);
  r.edge_orbits = ue.components(core_edges);
  r.face_orbits = uf.components(core_faces);
  std::vector<std::size_t> all_flags(flags.size());
  std::iota(all_flags.begin(), all_flags.end(), 0);
  r.flag_orbits = ufl.components(all_flags);
  std::set<std::size_t> seen;
  for (std::size_t i = 0; i < flags.size(); ++i) {
    if (seen.insert(ufl.find(i)).second) r.flag_representatives.push_back(flags[i]);
  }
  seen.clear();
  for (std::size_t e : core_edges) {
    if (seen.insert(ue.find(e)).second) r.edge_representatives.push_back(e);
  }
  return r;
}

std::string SymmetryReport::describe() const {
  std::ostringstream out;
  out << "orbits in core window of radius " << core_radius.to_string() << ": vertices " << vertex_orbits << "/"
      << core_vertices << ", edges " << edge_orbits << "/" << core_edges << ", faces " << face_orbits << "/"
      << core_faces << ", flags " << flag_orbits << "/" << core_flags << "\n"
      << "  elements examined " << elements_examined << ", symmetries used " << symmetries_used
      << ", non-symmetries rejected " << elements_rejected << "\n"
      << "  fully transitive: " << (fully_transitive() ? "yes" : "no") << "\n";
  return out.str();
}

TransitivityReport transitivity_report(const GroupSpec& g, const Polyhedron& p, const Window& w) {
  const auto r = symmetry_report(g, p, w);
  return {r.vertex_orbits, r.edge_orbits, r.face_orbits};
}

FlagOrbitReport flag_orbits(const SymmetryReport& r) {
  if (r.fully_transitive() && r.flag_orbits != 1 && r.flag_orbits != 2 && r.flag_orbits != 4) {
    throw InconsistencyError("fully transitive in core but " + std::to_string(r.flag_orbits) +
                             " flag orbits; expected 1, 2 or 4");
  }
  return {r.flag_orbits, r.core_flags, r.flag_representatives};
}

FlagOrbitReport flag_orbits(const GroupSpec& g, const Polyhedron& p, const Window& w) {
  return flag_orbits(symmetry_report(g, p, w));
}

}  // namespace ftpoly
