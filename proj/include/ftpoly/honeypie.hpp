#pragma once

#include <string>
#include <vector>

#include "ftpoly/crystal_group.hpp"

namespace ftpoly {

// Corner of the triangular footprint carrying the base point, named by its
// wedge angle (pi/6, pi/2, pi/3).
enum class Corner { kC30, kC90, kC60 };

std::string corner_name(Corner c);
// Accepts "c30", "c90", "c60" (case-insensitive). Throws ParseError.
Corner parse_corner(const std::string& text);

// The slice is the prism over the triangle (0,0), (1,0), (3/4, sqrt3/4)
// (times scale) between z = 0 and z = c. The right angle sits at
// (3/4, sqrt3/4), the pi/6 corner at the origin.
struct HoneypieConfig {
  Rational c{1};
  Corner corner = Corner::kC90;
  Rational scale{1};
  // Exchanges which of the two walls through the corner is H1 and which is
  // H2. Off in the pinned configuration.
  bool swap_walls = false;

  void validate() const;  // throws InvariantError
};

// Bounding planes H0..H4. H0: z = 0 and H4: z = c; H1, H2 are the two
// vertical walls through the chosen corner, H3 the opposite wall.
std::vector<PlaneQ> honeypie_planes(const HoneypieConfig& cfg);

// Reflections gamma_0..gamma_4 through H0..H4, in that order.
GroupSpec honeypie_generators(const HoneypieConfig& cfg);

// The in-plane subgroup generated by gamma_1, gamma_2, gamma_3 (the walls
// only). Acts on H0 as the (2,3,6) triangle group.
GroupSpec honeypie_planar_generators(const HoneypieConfig& cfg);

// u = H0 n H1 n H2.
Vec3Q base_point(const HoneypieConfig& cfg);

struct NamedPoints {
  Vec3Q u;
  Vec3Q v, w, x, y;  // on H0
  // Copies on z = +2c (index 1) and z = -2c (index 2).
  Vec3Q v1, v2, w1, w2, x1, x2, y1, y2;
};

// v = g2 g3 (u), w = g3 (u), x = g1 (w), y = g1 (v); leveled copies through
// g4 and g0 g4.
//
// The word for w is taken as g3(u), not g3(v): with g3(v) the four points
// are not equidistant from u under any corner or wall labeling, while g3(u)
// makes them one stabilizer orbit.
NamedPoints named_points(const HoneypieConfig& cfg);

}  // namespace ftpoly
