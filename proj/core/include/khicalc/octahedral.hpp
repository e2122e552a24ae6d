#pragma once

#include "khicalc/graded.hpp"

namespace khicalc {

// Explicit cone-level witnesses for the octahedral axiom applied to a
// composable pair X --f--> Y --g--> Z of maps of graded vector spaces
// (viewed as complexes with zero differentials).
//
// Flat block layouts:
//   cone(f)    = [Y | X{1}]
//   cone(g∘f)  = [Z | X{1}]
//   cone(g)    = [Z | Y{1}]
//   cone(psi)  = [Z | X{1} | Y{1} | X{2}]
// psi(y,x) = (g y, x), phi(z,x) = (z, f x), eta is the inclusion of cone(g),
// zeta(z,x,y,x') = (z, y + f x), delta(z,y) = (y, 0) is the connecting map
// of the fourth exact sequence, and `homotopy` D satisfies
// eta∘zeta - id = dD + Dd on cone(psi). All identities are verified
// exactly at construction.
struct OctahedralData {
    Matrix f, g;
    Matrix d_cone_f, d_cone_gf, d_cone_g, d_cone_psi;
    Matrix psi, phi, eta, zeta, delta;
    Matrix homotopy;
};

OctahedralData build_octahedron(const Matrix& f, const Matrix& g);
OctahedralData build_octahedron(const GradedMap& f, const GradedMap& g);

// Exactness of the induced fourth long exact sequence
//   H(cone f) -> H(cone gf) -> H(cone g) -> H(cone f){1} -> ...
// at every position (image = kernel as subspaces).
bool fourth_sequence_exactness(const OctahedralData& data);

} // namespace khicalc
