#include "qsec/canonical.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qsec/errors.hpp"
#include "poly3.hpp"

namespace qsec {

namespace {

constexpr double kTwoPi = 6.283185307179586;
constexpr double kZeroEntry = 1e-10;  // off-diagonal treated as absent in phase fixing
constexpr double kLineMerge = 1e-7;   // direction-space dedup of rank-2 lines
constexpr double kCandMerge = 1e-8;   // candidate dedup, hs distance of B templates
constexpr double kSortSlack = 1e-9;   // fuzzy lexicographic comparisons

double wrap_2pi(double x) {
  x = std::fmod(x, kTwoPi);
  if (x < 0.0) x += kTwoPi;
  if (x >= kTwoPi) x = 0.0;
  return x;
}

}  // namespace

SectionPlane orthonormalize_plane(const Herm3& a, const Herm3& b, double tol) {
  auto check_traceless = [](const Herm3& m, const char* which) {
    if (std::abs(m.trace()) > 1e-10 * std::max(1.0, m.mat().frobenius()))
      throw NonTracelessError(std::string(which) + " spanning matrix is not traceless");
  };
  check_traceless(a, "first");
  check_traceless(b, "second");
  double na = hs_norm(a);
  if (na <= tol) throw DegenerateSpanError("first spanning matrix is numerically zero");
  SectionPlane pl;
  pl.A = (1.0 / na) * a;
  Herm3 r = b - hs_inner(pl.A, b) * pl.A;
  double nr = hs_norm(r);
  if (nr <= tol * std::max(1.0, hs_norm(b)))
    throw DegenerateSpanError("spanning matrices do not span a 2-plane");
  pl.B = (1.0 / nr) * r;
  return pl;
}

Rank2Units find_rank2_units(const SectionPlane& plane, double tol) {
  const Herm3& A = plane.A;
  const Herm3& B = plane.B;
  // det(tA + B) is a cubic in t; interpolate its coefficients exactly from
  // four evaluations.
  auto det_at = [&](double t) { return det((t * A + B).mat()).real(); };
  double p0 = det_at(0.0), p1 = det_at(1.0), pm1 = det_at(-1.0), p2 = det_at(2.0);
  double d0 = p0;
  double d2 = 0.5 * (p1 + pm1) - p0;
  double s = 0.5 * (p1 - pm1);
  double d3 = (p2 - d0 - 4.0 * d2 - 2.0 * s) / 6.0;  // equals det A
  double d1 = s - d3;

  Rank2Units out;
  if (std::max({std::abs(d0), std::abs(d1), std::abs(d2), std::abs(d3)}) <= tol) {
    out.all_rank2 = true;
    out.units = {A};
    return out;
  }

  std::vector<Herm3> raw;
  for (double t : detail::cubic_roots(d3, d2, d1, d0, tol, 1.0)) {
    double n = std::sqrt(t * t + 1.0);
    raw.push_back((t / n) * A + (1.0 / n) * B);
  }
  // The direction t = infinity (E = A) is rank-2 iff the leading coefficient
  // vanishes; cubic_roots already degraded to a quadratic in that case.
  if (std::abs(d3) <= tol) raw.push_back(A);

  for (const Herm3& e : raw) {
    bool dup = false;
    for (const Herm3& u : out.units) {
      double d = std::min(hs_norm(e - u), hs_norm(e + u));
      if (d <= kLineMerge) {
        dup = true;
        break;
      }
    }
    if (!dup) out.units.push_back(e);
  }
  return out;
}

LineCount rank2_line_count(const SectionPlane& plane, double tol) {
  Rank2Units u = find_rank2_units(plane, tol);
  LineCount lc;
  lc.all = u.all_rank2;
  lc.count = u.all_rank2 ? 0 : static_cast<int>(u.units.size());
  return lc;
}

double commutator_invariant(const SectionPlane& plane) {
  Herm3 c = commutator_i(plane.A, plane.B);
  return hs_inner(c, c);
}

SectionParams SectionParams::make(double k, double a, double b, double c, double phi) {
  auto snap = [](double v) { return std::abs(v) < 1e-14 ? 0.0 : v; };
  k = snap(k);
  a = snap(a);
  b = snap(b);
  c = snap(c);
  if (a < -1e-12 || b < -1e-12 || c < -1e-12)
    throw InputError("a, b, c must be nonnegative");
  a = std::max(a, 0.0);
  b = std::max(b, 0.0);
  c = std::max(c, 0.0);
  if (k < -1e-10) throw InputError("k must be nonnegative");
  k = std::max(k, 0.0);
  if (c > b) {
    if (c > b + 1e-10) throw InputError("parameters must satisfy b >= c");
    c = b;
  }
  double n = 3.0 * k * k + a * a + b * b + c * c;
  if (std::abs(n - 1.0) > 1e-10)
    throw InputError("parameters violate 3k^2+a^2+b^2+c^2 = 1 (got " + std::to_string(n) + ")");
  if (a <= 1e-12 || b <= 1e-12 || c <= 1e-12) {
    phi = 0.0;
  } else {
    phi = wrap_2pi(phi);
    if (phi < 1e-14 || kTwoPi - phi < 1e-14) phi = 0.0;
  }
  SectionParams p;
  p.k = k;
  p.a = a;
  p.b = b;
  p.c = c;
  p.phi = phi;
  return p;
}

Herm3 canonical_A() { return Herm3::diag(1.0, -1.0, 0.0); }

Herm3 canonical_B(const SectionParams& p) {
  Mat3 m;
  m(0, 0) = p.k;
  m(1, 1) = p.k;
  m(2, 2) = -2.0 * p.k;
  cplx ph = std::polar(1.0, p.phi);
  m(0, 1) = p.a * ph;
  m(0, 2) = p.b * ph;
  m(1, 2) = p.c * ph;
  m(1, 0) = std::conj(m(0, 1));
  m(2, 0) = std::conj(m(0, 2));
  m(2, 1) = std::conj(m(1, 2));
  return Herm3::hermitian_part(m);
}

namespace {

struct RawParams {
  double k = 0, a = 0, b = 0, c = 0, phi = 0;
};

struct Variant {
  RawParams p;
  Mat3 U;
};

// Unitary whose rows are the adjoint eigenvectors of E in eigenvalue order
// (+1, -1, 0), so that U E U^+ = diag(1,-1,0) up to the accuracy of E's
// rank-2 property.
Mat3 eigenframe(const Herm3& e) {
  EigenSystem3 es = eigen_system(e);
  if (std::abs(es.w[0] - 1.0) > 1e-6 || std::abs(es.w[1]) > 1e-6 || std::abs(es.w[2] + 1.0) > 1e-6)
    throw NumericError("direction does not have spectrum (1,-1,0)");
  const Vec3c* order[3] = {&es.v[0], &es.v[2], &es.v[1]};
  Mat3 u;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      u(i, j) = std::conj((*order[i])[static_cast<std::size_t>(j)]);
  return u;
}

// Canonical data for one oriented choice (E, F): conjugate F into E's
// eigenframe, then fix the residual diagonal-phase freedom.
Variant build_variant(const Herm3& E, const Herm3& F) {
  Mat3 u0 = eigenframe(E);
  Herm3 bp = conjugate(u0, F);
  double k00 = bp(0, 0).real(), k11 = bp(1, 1).real();
  if (std::abs(k00 - k11) > 1e-7)
    throw NumericError("conjugated complement is not in canonical diagonal form");
  double k = 0.5 * (k00 + k11);
  cplx e01 = bp(0, 1), e02 = bp(0, 2), e12 = bp(1, 2);
  double a = std::abs(e01), b = std::abs(e02), c = std::abs(e12);
  double da = std::arg(e01), db = std::arg(e02), dc = std::arg(e12);
  bool za = a <= kZeroEntry, zb = b <= kZeroEntry, zc = c <= kZeroEntry;

  // Diagonal phases D = diag(1, e^{i d1}, e^{i d2}) move entry phases by
  // d_i - d_j; the combination arg01 + arg12 - arg02 is untouched and
  // becomes phi. With any vanishing entry the invariant is empty and the
  // remaining phases can be zeroed outright.
  double phi = 0.0, d1 = 0.0, d2 = 0.0;
  if (!za && !zb && !zc) {
    phi = wrap_2pi(da + dc - db);
    d1 = da - phi;
    d2 = db - phi;
  } else if (za && !zb && !zc) {
    d2 = db;
    d1 = db - dc;
  } else if (!za && zb && !zc) {
    d1 = da;
    d2 = da + dc;
  } else if (!za && !zb && zc) {
    d1 = da;
    d2 = db;
  } else if (!za) {  // only a
    d1 = da;
  } else if (!zb) {  // only b
    d2 = db;
  } else if (!zc) {  // only c
    d2 = dc;
  }

  Mat3 d;
  d(0, 0) = 1.0;
  d(1, 1) = std::polar(1.0, d1);
  d(2, 2) = std::polar(1.0, d2);

  Variant v;
  v.U = d * u0;
  auto tidy = [](double x) { return std::abs(x) < 1e-12 ? 0.0 : x; };
  v.p.k = tidy(k);
  v.p.a = tidy(a);
  v.p.b = tidy(b);
  v.p.c = tidy(c);
  v.p.phi = wrap_2pi(phi);
  if (v.p.phi < 1e-12 || kTwoPi - v.p.phi < 1e-12) v.p.phi = 0.0;
  return v;
}

// All admissible oriented variants of one rank-2 line: both orientations of
// E, and both orientations of the complement F filtered by k >= 0 (both
// survive in the |k| <~ 1e-10 band, where the sign of k is not resolvable).
std::vector<Variant> line_variants(const SectionPlane& pl, const Herm3& e_unit) {
  double ca = hs_inner(e_unit, pl.A);
  double cb = hs_inner(e_unit, pl.B);
  Herm3 f = (-cb) * pl.A + ca * pl.B;
  std::vector<Variant> out;
  for (int se = 0; se < 2; ++se)
    for (int sf = 0; sf < 2; ++sf) {
      Herm3 e = se ? -e_unit : e_unit;
      Herm3 ff = sf ? -f : f;
      Variant v = build_variant(e, ff);
      if (v.p.k >= -kZeroEntry) out.push_back(v);
    }
  return out;
}

// Reduce a line's variants: prefer b >= c, then the smallest phi.
Variant line_canonical(const std::vector<Variant>& vs) {
  const Variant* best = nullptr;
  for (const Variant& v : vs) {
    if (v.p.b < v.p.c - 1e-12) continue;
    if (!best || v.p.phi < best->p.phi - kSortSlack) best = &v;
  }
  if (!best) best = &vs.front();  // unreachable: the +-E pair swaps b and c
  return *best;
}

int fuzzy_cmp(double u, double v) {
  if (u < v - kSortSlack) return -1;
  if (u > v + kSortSlack) return 1;
  return 0;
}

// Deterministic candidate order: (k, a, b, c) ascending, then phi by
// decreasing cos and sin so that values near 0 come first and the wrap at
// 2pi does not split nearby phases.
bool fuzzy_less(const RawParams& x, const RawParams& y) {
  if (int r = fuzzy_cmp(x.k, y.k)) return r < 0;
  if (int r = fuzzy_cmp(x.a, y.a)) return r < 0;
  if (int r = fuzzy_cmp(x.b, y.b)) return r < 0;
  if (int r = fuzzy_cmp(x.c, y.c)) return r < 0;
  if (int r = fuzzy_cmp(-std::cos(x.phi), -std::cos(y.phi))) return r < 0;
  if (int r = fuzzy_cmp(-std::sin(x.phi), -std::sin(y.phi))) return r < 0;
  return false;
}

SectionParams to_params(const RawParams& r) {
  return SectionParams::make(r.k, r.a, r.b, r.c, r.phi);
}

// Distance between canonical tuples measured on the exact B templates, so
// a phase difference is weighted by the modulus it multiplies and tuples
// with a vanishing entry compare as equal regardless of that entry's phase.
double params_dist(const SectionParams& x, const SectionParams& y) {
  return hs_norm(canonical_B(x) - canonical_B(y));
}

}  // namespace

CanonicalResult canonicalize(const Herm3& a, const Herm3& b, double tol) {
  SectionPlane pl = orthonormalize_plane(a, b);
  Rank2Units lines = find_rank2_units(pl);
  std::vector<Herm3> reps = lines.units;
  if (lines.all_rank2) reps.push_back(pl.B);  // second representative as a cross-check

  std::vector<Variant> cands;
  for (const Herm3& e : reps) cands.push_back(line_canonical(line_variants(pl, e)));

  std::sort(cands.begin(), cands.end(),
            [](const Variant& x, const Variant& y) { return fuzzy_less(x.p, y.p); });
  std::vector<Variant> dedup;
  for (const Variant& v : cands) {
    bool dup = false;
    for (const Variant& u : dedup)
      if (params_dist(to_params(v.p), to_params(u.p)) <= kCandMerge) {
        dup = true;
        break;
      }
    if (!dup) dedup.push_back(v);
  }

  CanonicalResult res;
  res.params = to_params(dedup.front().p);
  res.A_std = canonical_A();
  res.B_std = canonical_B(res.params);
  res.U = dedup.front().U;
  for (const Variant& v : dedup) res.candidates.push_back(to_params(v.p));
  // tol is reserved for callers that need to loosen the structural
  // thresholds; the pipeline itself runs on the pinned constants above.
  (void)tol;
  return res;
}

namespace {

// The cubic part of the boundary polynomial in canonical coordinates,
// written as Re(P z^3 + Q z^2 conj(z)) with z = x + iy. (|P|, |Q|,
// cos(arg P - 3 arg Q)) is a complete invariant of the cubic under
// rotations and reflections of the plane.
struct CongruenceSig {
  double abs_p = 0.0, abs_q = 0.0;
  double cos_rel = 0.0;  // meaningful only when both moduli are away from 0
};

CongruenceSig congruence_signature(const SectionParams& p) {
  double cy3 = 3.0 * (2.0 * p.a * p.b * p.c * std::cos(p.phi) -
                      p.k * (1.0 - p.k * p.k - 3.0 * p.a * p.a));
  double cx2y = 6.0 * p.k;
  double cxy2 = 3.0 * (p.b * p.b - p.c * p.c);
  // x^3 coefficient is identically zero in canonical form.
  double p1 = -cxy2 / 4.0;
  double p2 = (cy3 - cx2y) / 4.0;
  double q1 = cxy2 / 4.0;
  double q2 = -(cx2y + 3.0 * cy3) / 4.0;
  CongruenceSig s;
  s.abs_p = std::hypot(p1, p2);
  s.abs_q = std::hypot(q1, q2);
  if (s.abs_p > 0.0 && s.abs_q > 0.0)
    s.cos_rel = std::cos(std::atan2(p2, p1) - 3.0 * std::atan2(q2, q1));
  return s;
}

}  // namespace

Equivalence equivalence_check(const Herm3& a1, const Herm3& b1, const Herm3& a2,
                              const Herm3& b2, double tol) {
  SectionPlane p1 = orthonormalize_plane(a1, b1);
  SectionPlane p2 = orthonormalize_plane(a2, b2);

  // Screens: each is an exact invariant, compared with a wide margin so a
  // true equivalence can never be screened out by rounding.
  double margin = 50.0 * tol;
  double inv1 = commutator_invariant(p1);
  double inv2 = commutator_invariant(p2);
  if (std::abs(inv1 - inv2) > margin * std::max(1.0, std::max(inv1, inv2)))
    return Equivalence::Inequivalent;

  LineCount l1 = rank2_line_count(p1);
  LineCount l2 = rank2_line_count(p2);
  if (l1.all != l2.all) return Equivalence::Inequivalent;
  if (!l1.all && l1.count != l2.count) return Equivalence::Inequivalent;

  CanonicalResult c1 = canonicalize(p1.A, p1.B, tol);
  CanonicalResult c2 = canonicalize(p2.A, p2.B, tol);

  CongruenceSig s1 = congruence_signature(c1.params);
  CongruenceSig s2 = congruence_signature(c2.params);
  if (std::abs(s1.abs_p - s2.abs_p) > margin) return Equivalence::Inequivalent;
  if (std::abs(s1.abs_q - s2.abs_q) > margin) return Equivalence::Inequivalent;
  double gate = 1000.0 * tol;
  if (std::min(s1.abs_p, s2.abs_p) > gate && std::min(s1.abs_q, s2.abs_q) > gate &&
      std::abs(s1.cos_rel - s2.cos_rel) > margin)
    return Equivalence::Inequivalent;

  for (const SectionParams& x : c1.candidates)
    for (const SectionParams& y : c2.candidates)
      if (params_dist(x, y) <= tol) return Equivalence::Equivalent;

  return Equivalence::Undecided;
}

}  // namespace qsec
