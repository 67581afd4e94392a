#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ftpoly/honeypie.hpp"
#include "ftpoly/polyhedron.hpp"

namespace ftpoly {

// Cyclic order on the far endpoints of a star at `center`: consecutive
// endpoints share a face.
struct VertexFigure {
  Vec3Q center;
  std::vector<Vec3Q> cycle;

  friend bool operator==(const VertexFigure&, const VertexFigure&) = default;
};

enum class AngleSide { kAlpha, kBeta, kNone };

// Angles cycle[i] - center - cycle[i+1] related by a stabilizer element that
// preserves the figure.
struct AngleClass {
  std::string label;  // "alpha", "beta1", ...
  AngleSide side = AngleSide::kNone;
  QSqrt3 cos_value;
  std::vector<std::size_t> positions;  // i for the angle between cycle[i] and cycle[i+1]
  Vec3Q p, q;                          // representative endpoints

  bool contains(const Vec3Q& a, const Vec3Q& b, const VertexFigure& vf) const;
};

// Elements of `stabilizer` mapping the figure to itself (as a cycle, up to
// rotation and reflection).
std::vector<Isometry> figure_symmetries(const VertexFigure& vf, const std::vector<Isometry>& stabilizer);

// Classes of the figure's angles under figure_symmetries.
//
// When the classes alternate (one class, or even length with disjoint class
// sets on even and odd positions), the side with fewer classes is alpha, ties
// going to the side holding the largest cosine; classes inside a side are
// numbered by increasing cosine. Non-alternating figures get labels "c1", ...
// and side kNone.
std::vector<AngleClass> angle_classes(const VertexFigure& vf, const std::vector<Isometry>& stabilizer);
std::vector<AngleClass> angle_classes(const VertexFigure& vf, const GroupSpec& g);

bool classes_alternate(const std::vector<AngleClass>& classes);

struct VertexFigureEnumeration {
  std::vector<VertexFigure> all;          // every cyclic order modulo symmetry
  std::vector<VertexFigure> alternating;  // those passing the alternation rule
};

// Throws DegenerateVertexFigureError for fewer than 3 edges and InvariantError
// above 10 (the search is factorial).
VertexFigureEnumeration enumerate_vertex_figures(const std::vector<Edge>& star_edges,
                                                 const std::vector<Isometry>& stabilizer);

// Least representative over rotations, reflections and stabilizer images.
VertexFigure canonical_figure(const VertexFigure& vf, const std::vector<Isometry>& stabilizer);

enum class TraceMethod { kTransport, kRaw, kBoth };

// Everything needed to trace faces for one vertex figure: the skeleton, the
// figure, its angle classes and, for every vertex of the skeleton, elements of
// the figure-compatible subgroup carrying u to it.
//
// The figure-compatible subgroup is the whole group when every stabilizer
// element preserves the figure, and the orientation-preserving subgroup when
// exactly the proper rotations in the stabilizer do. Any other figure symmetry
// group throws InvariantError.
class FaceContext {
 public:
  FaceContext(const GroupSpec& g, const VertexFigure& vf, SkeletonGraph graph, const Window& w);

  const VertexFigure& figure() const { return vf_; }
  const std::vector<AngleClass>& classes() const { return classes_; }
  const SkeletonGraph& graph() const { return graph_; }
  const Window& window() const { return window_; }
  bool orientation_preserving_only() const { return proper_only_; }
  // Whether a group element belongs to the figure-compatible subgroup.
  bool compatible(const Isometry& s) const;

  // The figure transported to b.
  std::vector<Vec3Q> local_figure(const Vec3Q& b) const;
  // Class index of the angle a - b - c, if it is an angle of the local figure.
  std::optional<std::size_t> classify_angle(const Vec3Q& a, const Vec3Q& b, const Vec3Q& c) const;

  // Traces the face through the angle p - b - q (b inside the window).
  // Throws AlternationViolatedError, FaceFillingNotUniqueError, and
  // InconsistencyError when the two methods disagree under kBoth.
  Face trace(const Vec3Q& p, const Vec3Q& b, const Vec3Q& q, TraceMethod method = TraceMethod::kBoth) const;

  // Every face through an angle, at a window vertex, whose class occurs in f.
  std::vector<Face> face_orbit(const Face& f) const;

 private:
  Vec3Q step(const Vec3Q& prev, const Vec3Q& cur, AngleSide last, TraceMethod method) const;
  Vec3Q step_transport(const Vec3Q& prev, const Vec3Q& cur, AngleSide last) const;
  Vec3Q step_raw(const Vec3Q& prev, const Vec3Q& cur, AngleSide last) const;
  const Isometry& carrier(const Vec3Q& b, bool last) const;

  VertexFigure vf_;
  SkeletonGraph graph_;
  Window window_;
  std::vector<AngleClass> classes_;
  bool proper_only_ = false;
  // Class of each unordered endpoint pair at u that is an angle of the figure.
  std::map<std::pair<Vec3Q, Vec3Q>, std::size_t> pair_class_;
  // Per graph vertex: first and last compatible element (canonical order)
  // carrying u to it.
  std::vector<Isometry> first_carrier_;
  std::vector<Isometry> last_carrier_;
};

// Free-function forms.
Face trace_face(const FaceContext& ctx, const Vec3Q& p, const Vec3Q& b, const Vec3Q& q,
                TraceMethod method = TraceMethod::kBoth);
std::vector<Face> face_orbit(const FaceContext& ctx, const Face& f);

// Steps 2 and 3: skeleton from [u v], the face through the figure's first
// angle, and that face's orbit. Throws WindowTooSmallError when the window
// core does not reach past one edge length.
Polyhedron build_polyhedron(const GroupSpec& g, const Vec3Q& u, const Vec3Q& v, const VertexFigure& vf,
                            const Window& w);

struct S1Construction {
  HoneypieConfig config;
  NamedPoints points;
  std::vector<Isometry> stabilizer;
  std::vector<Edge> star;
  VertexFigureEnumeration figures;
  VertexFigure figure;
  std::vector<AngleClass> classes;
  Face spiral;  // face through the alpha angle x1 - u - x2
  Polyhedron polyhedron;
};

// Among alternating figures of the leveled star, the one (in a suitable
// stabilizer image) with exactly three classes where alpha holds x1-u-x2,
// beta1 holds x1-u-y2 and beta2 holds y1-u-v2. Throws InconsistencyError
// unless exactly one figure matches.
VertexFigure select_spiral_figure(const VertexFigureEnumeration& figures, const NamedPoints& n,
                                  const std::vector<Isometry>& stabilizer);

S1Construction construct_s1(const HoneypieConfig& cfg, const Window& w);
Polyhedron build_s1(const HoneypieConfig& cfg, const Window& w);

// Per-configuration counts used to pick the corner and wall labeling.
struct ConfigurationCandidate {
  HoneypieConfig config;
  std::size_t stabilizer_order = 0;
  std::size_t planar_star_size = 0;
  std::size_t planar_figure_classes = 0;  // alternating classes
  bool spiral_figure_found = false;
  bool selected = false;
};

// Tries every corner and both wall labelings. A configuration is selected
// when its planar star has 4 edges, that star has 3 vertex-figure classes,
// and the leveled star yields a unique figure matching the three quoted
// angles.
std::vector<ConfigurationCandidate> corner_selection(const Rational& c = Rational(1),
                                                     const Rational& scale = Rational(1));

}  // namespace ftpoly
