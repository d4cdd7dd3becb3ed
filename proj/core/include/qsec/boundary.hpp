#pragma once

#include <array>
#include <vector>

#include "qsec/canonical.hpp"

namespace qsec {

// Boundary polynomial of the section with canonical parameters p:
//   p(x,y) = 3 det(I/3 + x A_std + y B_std)
//          = 1/9 - x^2 - y^2 + cy3 y^3 + cx2y x^2 y + cxy2 x y^2,
// the x^3 coefficient vanishing identically. The section of the state
// space is { (x,y) : I/3 + x A_std + y B_std psd }, whose boundary lies on
// the zero set of this cubic.
struct CubicCurve {
  double c0 = 1.0 / 9.0;
  double cx2 = -1.0, cy2 = -1.0;
  double cy3 = 0.0, cx2y = 0.0, cxy2 = 0.0;

  double evaluate(double x, double y) const;
  std::array<double, 2> gradient(double x, double y) const;
};

CubicCurve cubic_coefficients(const SectionParams& p);

// 3 det(I/3 + x A_std + y B_std) computed from the actual determinant;
// agrees with CubicCurve::evaluate to rounding and exists to validate it.
double evaluate_det(const SectionParams& p, double x, double y);

// Distance from the center to the section boundary along the unit traceless
// direction d (hs-norm 1): the largest t with I/3 + t d psd, equal to
// -1/(3 lambda_min(d)). Always lands in [1/(2 sqrt3), 1/sqrt3].
double raycast(const Herm3& d);

// Same along (cos theta) A_std + (sin theta) B_std for parameters p.
double raycast(const SectionParams& p, double theta);

struct BoundarySample {
  double theta = 0.0, t = 0.0, x = 0.0, y = 0.0;
};

// n boundary points at theta0 + 2 pi i / n, i = 0..n-1.
std::vector<BoundarySample> sample_boundary(const SectionParams& p, int n, double theta0 = 0.0);

enum class ShapeTag {
  CircularDisk,
  Ellipse,
  EllipseOnePureContact,
  CutEllipse,
  ParabolaChord,
  CutHyperbola,
  Triangle,
  GenericSmooth,
  GenericWithPureContacts,
};

const char* shape_name(ShapeTag tag);

struct ShapeClass {
  ShapeTag tag = ShapeTag::GenericSmooth;
  int pure_contacts = 0;   // boundary points on the pure-state sphere
  bool has_segment = false;  // boundary contains a straight segment
};

// Decision tree on the canonical parameters with absolute tolerance tol;
// ties resolve toward the more degenerate class. Shapes outside the named
// families are classified generic by their pure-contact count.
ShapeClass classify_shape(const SectionParams& p, double tol = 1e-9);

struct PureContact {
  enum class Kind { Corner, Tangential };
  double theta = 0.0;
  Kind kind = Kind::Corner;
};

// Boundary contacts with the pure-state sphere x^2 + y^2 = 1/3: angles where
// the raycast reaches 1/sqrt3 within tol. Corner contacts kink the radial
// profile, tangential ones touch it smoothly.
std::vector<PureContact> find_pure_states(const SectionParams& p, double tol = 1e-9);

// True when the boundary curve has no singular point: no pure contacts and
// the gradient of the boundary polynomial stays away from zero along the
// boundary.
bool is_smooth_boundary(const SectionParams& p, double tol = 1e-9);

// Residual of the pure-contact surface for phi = 0 sections with abc != 0:
//   R = 6 k a b c - (ab)^2 - (ac)^2 + 2 (bc)^2.
// R = 0 exactly when the section touches a pure state. Homogeneous of
// degree 4 in (k,a,b,c). Throws InapplicableRegimeError outside the regime.
double pure_state_surface_residual(const SectionParams& p);

}  // namespace qsec
