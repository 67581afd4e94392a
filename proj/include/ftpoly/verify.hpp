#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ftpoly/polyhedron.hpp"

namespace ftpoly {

struct AxiomResult {
  bool pass = true;
  std::string witness;  // empty on pass
};

// Claims about the core window only: core vertices lie within
// radius - margin, core edges have both endpoints there.
struct AxiomReport {
  Rational core_radius;
  std::size_t core_vertices = 0;
  std::size_t core_edges = 0;
  // (1) each core edge lies in exactly two faces.
  AxiomResult edge_two_faces;
  // (2) the faces at each core vertex form one circuit through shared edges.
  AxiomResult vertex_circuit;
  // (3) core edges are chained together through faces.
  AxiomResult connected;
  // (4) faces per core vertex are bounded, uniformly, by the vertex degree.
  AxiomResult locally_finite;
  std::size_t max_faces_per_vertex = 0;
  std::optional<Edge> exposed_edge;  // first edge failing (1)

  bool all_pass() const {
    return edge_two_faces.pass && vertex_circuit.pass && connected.pass && locally_finite.pass;
  }
  std::string describe() const;
};

AxiomReport verify_axioms(const Polyhedron& p, const Window& w);

// A flag as indices into the polyhedron: vertex, edge, face.
struct Flag {
  std::size_t vertex = 0;
  std::size_t edge = 0;
  std::size_t face = 0;
  friend auto operator<=>(const Flag&, const Flag&) = default;
};

// Orbits of core vertices, core edges, faces with a core edge, and flags on
// core edges, under the enumerated group elements that are symmetries of the
// polyhedron.
//
// An element is used when it maps some core vertex into the core and maps
// every face angle at such a vertex onto a face angle. Elements are taken
// with |s(0)| <= 2 (radius - margin), enough to relate any two core items.
struct SymmetryReport {
  Rational core_radius;
  std::size_t elements_examined = 0;
  std::size_t symmetries_used = 0;
  std::size_t elements_rejected = 0;  // relate core vertices but are not symmetries
  std::size_t core_vertices = 0, core_edges = 0, core_faces = 0, core_flags = 0;
  std::size_t vertex_orbits = 0, edge_orbits = 0, face_orbits = 0, flag_orbits = 0;
  std::vector<Flag> flag_representatives;
  std::vector<std::size_t> edge_representatives;

  bool fully_transitive() const { return vertex_orbits == 1 && edge_orbits == 1 && face_orbits == 1; }
  std::string describe() const;
};

SymmetryReport symmetry_report(const GroupSpec& g, const Polyhedron& p, const Window& w);

struct TransitivityReport {
  std::size_t vertex_orbits = 0, edge_orbits = 0, face_orbits = 0;
  bool fully_transitive() const { return vertex_orbits == 1 && edge_orbits == 1 && face_orbits == 1; }
};

TransitivityReport transitivity_report(const GroupSpec& g, const Polyhedron& p, const Window& w);

struct FlagOrbitReport {
  std::size_t count = 0;
  std::size_t core_flags = 0;
  std::vector<Flag> representatives;
};

// Throws InconsistencyError when the polyhedron is fully transitive in the
// core but the count is not 1, 2 or 4.
FlagOrbitReport flag_orbits(const GroupSpec& g, const Polyhedron& p, const Window& w);
FlagOrbitReport flag_orbits(const SymmetryReport& report);

}  // namespace ftpoly
