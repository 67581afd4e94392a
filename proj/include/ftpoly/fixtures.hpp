#pragma once

#include "ftpoly/polyhedron.hpp"

namespace ftpoly {

// Small finite structures with known answers.
namespace fixtures {

// Cube with vertices (+-1, +-1, +-1) scaled by s.
Polyhedron cube(const Rational& s = Rational(1));
// The cube with its z = +s face removed; its four top edges lie in one face.
Polyhedron cube_missing_face();
// Cube of half-edge 1 together with the cube of half-edge 2.
Polyhedron two_scale_cubes();
// Prism over the regular hexagon with unit circumradius, height 1.
Polyhedron hexagonal_prism();

// Full symmetry group of the cube (order 48): swap x,y; swap y,z; negate x.
GroupSpec cube_group();
// Its rotation subgroup (order 24): quarter turns about z and about x.
GroupSpec cube_rotation_group();
// Symmetries of the hexagonal prism (order 24).
GroupSpec hexagonal_prism_group();

// Window holding the fixtures above entirely inside its core.
Window fixture_window();

}  // namespace fixtures
}  // namespace ftpoly
