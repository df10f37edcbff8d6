#pragma once

#include "homcode/cell_complex.hpp"

namespace homcode {
namespace builders {

// All builders produce code-admissible complexes with deterministic cell ids
// and orientations; numeric indices are zero-padded to three digits so that
// the lexicographic cell ordering agrees with numeric order.

// m vertices v###, m edges e### with boundary(e_i) = v_{i+1 mod m} - v_i.
CellComplex circle(long m);

// Path of m edges on m+1 vertices; the one fixture with nonempty boundary.
CellComplex interval(long m);

// p x q periodic grid: vertices v###_###, x-edges h###_###, y-edges u###_###,
// faces f###_### with loop-ordered boundaries. Euler characteristic 0.
CellComplex torus_grid(long p, long q);

// Surface of the unit cube: vertices vXYZ (coordinate bits), axis edges
// ex{y}{z} / ey{x}{z} / ez{x}{y} oriented along +x/+y/+z, and faces
// F, Ba, L, R, T, Bo oriented with outward normals (boundary lists are in
// loop order). chi = 2, H_2 generated by the sum of all faces.
CellComplex sphere_cube();

// Minimal 6-vertex, 10-triangle triangulation of the real projective plane
// (the hemi-icosahedron). Simplicial orientations; H_1(Z) = Z_2.
CellComplex projective_plane_min();

} // namespace builders
} // namespace homcode
