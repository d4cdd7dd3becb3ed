#pragma once

#include <vector>

#include "qsec/herm3.hpp"

namespace qsec {

// Orthonormal basis (under hs_inner) of a 2-plane of traceless hermitians.
struct SectionPlane {
  Herm3 A, B;
};

// Gram-Schmidt with validation: inputs must be traceless (1e-10 relative)
// and span a genuine 2-plane, else DegenerateSpanError.
SectionPlane orthonormalize_plane(const Herm3& a, const Herm3& b, double tol = 1e-12);

// Unit directions E in the plane with det E = 0. A traceless unit with a
// zero eigenvalue automatically has spectrum (1,-1,0), so these are the
// rank-2 directions. One unit per line (orientation unspecified), finite
// roots in ascending slope order. When the determinant vanishes identically
// on the plane, all_rank2 is set and units holds the single representative A.
struct Rank2Units {
  std::vector<Herm3> units;
  bool all_rank2 = false;
};
Rank2Units find_rank2_units(const SectionPlane& plane, double tol = 1e-10);

struct LineCount {
  int count = 0;     // number of rank-2 lines; 0 with all set
  bool all = false;  // every direction in the plane is rank-2
};
LineCount rank2_line_count(const SectionPlane& plane, double tol = 1e-10);

// (1/2) Tr( (i[A,B])^2 ), invariant of the plane up to the orthonormality
// of the basis. Equals 4a^2 + b^2 + c^2 = 3(a^2 - k^2) + 1 on canonical
// parameters.
double commutator_invariant(const SectionPlane& plane);

// Canonical parameter tuple (k, a, b, c, phi) describing the pair
//   A_std = diag(1,-1,0),
//   B_std = [ k            a e^{i phi}   b e^{i phi} ]
//           [ a e^{-i phi} k             c e^{i phi} ]
//           [ b e^{-i phi} c e^{-i phi}  -2k         ]
// with 3k^2 + a^2 + b^2 + c^2 = 1, k,a,b,c >= 0, b >= c, phi in [0,2pi),
// and phi = 0 whenever abc = 0.
struct SectionParams {
  double k = 0.0, a = 0.0, b = 0.0, c = 0.0, phi = 0.0;

  // Validates the constraints (normalization within 1e-10), snaps magnitudes
  // below 1e-14 to zero, reduces phi mod 2pi and zeroes it when abc
  // vanishes (any of a, b, c below 1e-12). Throws InputError on violation.
  static SectionParams make(double k, double a, double b, double c, double phi);
};

Herm3 canonical_A();                        // diag(1,-1,0), exact
Herm3 canonical_B(const SectionParams& p);  // exact template above

struct CanonicalResult {
  SectionParams params;  // winner: fuzzy-lex smallest candidate
  Herm3 A_std, B_std;    // exact templates for params
  // Unitary with U E U^+ ~ A_std and U F U^+ ~ B_std for some orthonormal
  // basis (E,F) of the input span; in particular U maps the span onto
  // span{A_std, B_std}.
  Mat3 U;
  // One tuple per rank-2 line (each line reduced over its orientation
  // choices), deduplicated and sorted; for an all-rank-2 plane the
  // representatives collapse to a single tuple.
  std::vector<SectionParams> candidates;
};

CanonicalResult canonicalize(const Herm3& a, const Herm3& b, double tol = kDefaultTol);

enum class Equivalence { Equivalent, Inequivalent, Undecided };

// Unitary equivalence of two planes. Invariant screens (commutator
// invariant, rank-2 line count, congruence class of the boundary cubic)
// certify Inequivalent; intersecting candidate sets certify Equivalent;
// anything else is Undecided.
Equivalence equivalence_check(const Herm3& a1, const Herm3& b1, const Herm3& a2,
                              const Herm3& b2, double tol = 1e-6);

}  // namespace qsec
