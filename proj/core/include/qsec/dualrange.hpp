#pragma once

#include <array>
#include <vector>

#include "qsec/canonical.hpp"

namespace qsec {

// Convex planar region given by its boundary vertices in counterclockwise
// order. The convex flag is set by verifying that consecutive edge turns
// never bend the wrong way beyond 1e-9.
struct PlanarRegion {
  std::vector<std::array<double, 2>> boundary;
  bool convex = false;
};

bool verify_convex(const PlanarRegion& region, double tol = 1e-9);

// Numerical range W(M) = { Tr(M rho) : rho a state } sampled with n support
// directions: for each angle the top eigenvector v of the hermitian part of
// e^{-i theta} M contributes the boundary point v* M v. Convex by the
// Toeplitz-Hausdorff theorem. M need not be hermitian or normal.
PlanarRegion numerical_range(const Mat3& m, int n);

// Support value of the projected state set in direction theta of the plane:
// (1/2) lambda_max(cos theta A + sin theta B).
double projection_support(const SectionPlane& plane, double theta);

// Orthogonal projection of the state set onto the plane, reconstructed from
// n supporting lines (consecutive support lines intersected, duplicate
// vertices merged).
PlanarRegion project_states(const SectionPlane& plane, int n);

// The section of the state set by the plane, as a polygon of n raycast hits
// in the same (x, y) coordinates as project_states.
PlanarRegion section_region(const SectionPlane& plane, int n);

// In-plane polar with the state-set normalization: u belongs to the dual iff
// 1/3 + 2 (u . v) >= 0 for every v in the region. Computed exactly as the
// intersection of the half-planes contributed by the boundary vertices.
// Throws OriginOutsideError unless the origin is strictly interior.
PlanarRegion polar_dual_2d(const PlanarRegion& region);

// Symmetric Hausdorff distance between the filled polygons' boundaries,
// measured vertex-to-edge both ways.
double hausdorff_distance(const PlanarRegion& a, const PlanarRegion& b);

struct DualityReport {
  double hausdorff = 0.0;
  double tol = 0.0;
  bool pass = false;
};

// Checks that the polar of the section equals the projection of the state
// set onto the same plane, within tol in Hausdorff distance.
DualityReport verify_section_projection_duality(const SectionPlane& plane, int n, double tol);

}  // namespace qsec
