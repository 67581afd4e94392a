#include "ftpoly/fixtures.hpp"

#include <algorithm>

namespace ftpoly::fixtures {

namespace {

Vec3Q pt(QSqrt3 x, QSqrt3 y, QSqrt3 z) { return {std::move(x), std::move(y), std::move(z)}; }

Isometry linear_map(std::initializer_list<std::int64_t> rows) {
  Mat3Q q;
  std::size_t i = 0;
  for (auto v : rows) q.m[i++] = QSqrt3(v);
  return Isometry(q, Vec3Q{});
}

std::vector<Face> cube_faces(const Rational& s) {
  std::vector<Face> faces;
  // For each axis and sign, walk the square's corners in cyclic order.
  for (std::size_t axis = 0; axis < 3; ++axis) {
    for (int sign : {-1, 1}) {
      const std::size_t i = (axis + 1) % 3, j = (axis + 2) % 3;
      Face f;
      f.closed = true;
      for (auto [a, b] : {std::pair{-1, -1}, std::pair{1, -1}, std::pair{1, 1}, std::pair{-1, 1}}) {
        Vec3Q p;
        p[axis] = QSqrt3(s * Rational(sign));
        p[i] = QSqrt3(s * Rational(a));
        p[j] = QSqrt3(s * Rational(b));
        f.path.push_back(p);
      }
      faces.push_back(std::move(f));
    }
  }
  return faces;
}

std::vector<Edge> face_edges(const std::vector<Face>& faces) {
  std::vector<Edge> out;
  for (const auto& f : faces) {
    for (auto& e : f.edges()) out.push_back(e);
  }
  return out;
}

std::vector<Vec3Q> face_vertices(const std::vector<Face>& faces) {
  std::vector<Vec3Q> out;
  for (const auto& f : faces) out.insert(out.end(), f.path.begin(), f.path.end());
  return out;
}

}  // namespace

Polyhedron cube(const Rational& s) {
  auto faces = cube_faces(s);
  return Polyhedron(face_vertices(faces), face_edges(faces), faces);
}

Polyhedron cube_missing_face() {
  auto faces = cube_faces(Rational(1));
  auto edges = face_edges(faces);
  auto verts = face_vertices(faces);
  // Drop the z = +1 face (axis 2, sign +1).
  faces.erase(faces.begin() + 5);
  return Polyhedron(verts, edges, faces);
}

Polyhedron two_scale_cubes() {
  auto faces = cube_faces(Rational(1));
  auto big = cube_faces(Rational(2));
  faces.insert(faces.end(), big.begin(), big.end());
  return Polyhedron(face_vertices(faces), face_edges(faces), faces);
}

Polyhedron hexagonal_prism() {
  const QSqrt3 half(Rational(1, 2));
  const QSqrt3 h3(Rational(0), Rational(1, 2));
  const std::vector<std::pair<QSqrt3, QSqrt3>> ring = {{1, 0}, {half, h3}, {-half, h3}, {-1, 0}, {-half, -h3}, {half, -h3}};
  std::vector<Face> faces;
  for (auto z : {QSqrt3(Rational(-1, 2)), QSqrt3(Rational(1, 2))}) {
    Face f;
    f.closed = true;
    for (const auto& [x, y] : ring) f.path.push_back(pt(x, y, z));
    faces.push_back(std::move(f));
  }
  for (std::size_t k = 0; k < 6; ++k) {
    const auto& [x0, y0] = ring[k];
    const auto& [x1, y1] = ring[(k + 1) % 6];
    Face f;
    f.closed = true;
    f.path = {pt(x0, y0, Rational(-1, 2)), pt(x1, y1, Rational(-1, 2)), pt(x1, y1, Rational(1, 2)),
              pt(x0, y0, Rational(1, 2))};
    faces.push_back(std::move(f));
  }
  return Polyhedron(face_vertices(faces), face_edges(faces), faces);
}

GroupSpec cube_group() {
  return GroupSpec({linear_map({0, 1, 0, 1, 0, 0, 0, 0, 1}), linear_map({1, 0, 0, 0, 0, 1, 0, 1, 0}),
                    linear_map({-1, 0, 0, 0, 1, 0, 0, 0, 1})});
}

GroupSpec cube_rotation_group() {
  return GroupSpec({linear_map({0, -1, 0, 1, 0, 0, 0, 0, 1}), linear_map({1, 0, 0, 0, 0, -1, 0, 1, 0})});
}

GroupSpec hexagonal_prism_group() {
  const QSqrt3 half(Rational(1, 2));
  const QSqrt3 h3(Rational(0), Rational(1, 2));
  return GroupSpec({reflection_through_plane(PlaneQ(pt(0, 1, 0), 0)),
                    reflection_through_plane(PlaneQ(pt(-half, h3, 0), 0)),
                    reflection_through_plane(PlaneQ(pt(0, 0, 1), 0))});
}

Window fixture_window() { return Window(Rational(5), Rational(1)); }

}  // namespace ftpoly::fixtures
