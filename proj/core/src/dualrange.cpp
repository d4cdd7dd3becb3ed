#include "qsec/dualrange.hpp"

#include <algorithm>
#include <cmath>

#include "qsec/boundary.hpp"
#include "qsec/errors.hpp"

namespace qsec {

namespace {

constexpr double kTwoPi = 6.283185307179586;

using Pt = std::array<double, 2>;

double cross(const Pt& a, const Pt& b) { return a[0] * b[1] - a[1] * b[0]; }
double dot(const Pt& a, const Pt& b) { return a[0] * b[0] + a[1] * b[1]; }
double norm(const Pt& a) { return std::hypot(a[0], a[1]); }

// Strips consecutive duplicates (closed polygon) within eps.
std::vector<Pt> dedupe(const std::vector<Pt>& pts, double eps) {
  std::vector<Pt> out;
  for (const Pt& p : pts) {
    if (!out.empty() && std::abs(p[0] - out.back()[0]) <= eps &&
        std::abs(p[1] - out.back()[1]) <= eps)
      continue;
    out.push_back(p);
  }
  while (out.size() > 1 && std::abs(out.front()[0] - out.back()[0]) <= eps &&
         std::abs(out.front()[1] - out.back()[1]) <= eps)
    out.pop_back();
  return out;
}

double point_segment_distance(const Pt& p, const Pt& a, const Pt& b) {
  Pt ab{b[0] - a[0], b[1] - a[1]};
  Pt ap{p[0] - a[0], p[1] - a[1]};
  double len2 = dot(ab, ab);
  double t = len2 > 0 ? std::clamp(dot(ap, ab) / len2, 0.0, 1.0) : 0.0;
  return std::hypot(ap[0] - t * ab[0], ap[1] - t * ab[1]);
}

double directed_hausdorff(const std::vector<Pt>& a, const std::vector<Pt>& b) {
  double worst = 0.0;
  for (const Pt& p : a) {
    double best = 1e300;
    for (std::size_t i = 0; i < b.size(); ++i) {
      best = std::min(best, point_segment_distance(p, b[i], b[(i + 1) % b.size()]));
      if (best == 0.0) break;
    }
    worst = std::max(worst, best);
  }
  return worst;
}

}  // namespace

bool verify_convex(const PlanarRegion& region, double tol) {
  const std::vector<Pt> pts = dedupe(region.boundary, 1e-14);
  if (pts.size() < 3) return true;  // segments and points are trivially convex
  const std::size_t n = pts.size();
  double sign = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Pt& a = pts[i];
    const Pt& b = pts[(i + 1) % n];
    const Pt& c = pts[(i + 2) % n];
    Pt e1{b[0] - a[0], b[1] - a[1]};
    Pt e2{c[0] - b[0], c[1] - b[1]};
    double l1 = norm(e1), l2 = norm(e2);
    if (l1 < 1e-14 || l2 < 1e-14) continue;
    double turn = cross(e1, e2) / (l1 * l2);
    if (std::abs(turn) <= tol) continue;  // colinear within tolerance
    if (sign == 0.0) {
      sign = turn > 0 ? 1.0 : -1.0;
    } else if (turn * sign < 0) {
      return false;
    }
  }
  return true;
}

PlanarRegion numerical_range(const Mat3& m, int n) {
  if (n < 3) throw InputError("numerical range needs at least 3 support directions");
  PlanarRegion out;
  out.boundary.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double theta = kTwoPi * i / n;
    cplx rot = std::polar(1.0, -theta);
    Mat3 rm = rot * m;
    Herm3 h = Herm3::hermitian_part(rm);
    EigenSystem3 es = eigen_system(h);
    const Vec3c& v = es.v[0];
    cplx z = dot_h(v, m * v);
    out.boundary.push_back({z.real(), z.imag()});
  }
  out.convex = verify_convex(out);
  return out;
}

double projection_support(const SectionPlane& plane, double theta) {
  Herm3 d = std::cos(theta) * plane.A + std::sin(theta) * plane.B;
  return 0.5 * eigenvalues(d).w[0];
}

PlanarRegion project_states(const SectionPlane& plane, int n) {
  if (n < 3) throw InputError("projection needs at least 3 support directions");
  std::vector<double> h(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) h[static_cast<std::size_t>(i)] = projection_support(plane, kTwoPi * i / n);

  // Vertex i sits on the support lines of directions i and i+1:
  //   x cos t + y sin t = h(t) for both angles.
  std::vector<Pt> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    int j = (i + 1) % n;
    double t1 = kTwoPi * i / n, t2 = kTwoPi * j / n;
    double c1 = std::cos(t1), s1 = std::sin(t1);
    double c2 = std::cos(t2), s2 = std::sin(t2);
    double det = c1 * s2 - s1 * c2;  // sin of the angular step, never zero
    double hi = h[static_cast<std::size_t>(i)], hj = h[static_cast<std::size_t>(j)];
    pts.push_back({(hi * s2 - hj * s1) / det, (c1 * hj - c2 * hi) / det});
  }
  PlanarRegion out;
  out.boundary = dedupe(pts, 1e-12);
  out.convex = verify_convex(out);
  return out;
}

PlanarRegion section_region(const SectionPlane& plane, int n) {
  if (n < 3) throw InputError("section polygon needs at least 3 samples");
  PlanarRegion out;
  out.boundary.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double theta = kTwoPi * i / n;
    Herm3 d = std::cos(theta) * plane.A + std::sin(theta) * plane.B;
    double t = raycast(d);
    out.boundary.push_back({t * std::cos(theta), t * std::sin(theta)});
  }
  out.convex = verify_convex(out);
  return out;
}

PlanarRegion polar_dual_2d(const PlanarRegion& region) {
  std::vector<Pt> pts = dedupe(region.boundary, 1e-14);
  if (pts.size() < 3) throw OriginOutsideError("region has an empty interior");

  // Counterclockwise orientation, so consecutive position vectors advance
  // in angle.
  double area2 = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) area2 += cross(pts[i], pts[(i + 1) % pts.size()]);
  if (area2 < 0) std::reverse(pts.begin(), pts.end());

  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i)
    if (cross(pts[i], pts[(i + 1) % n]) <= 0)
      throw OriginOutsideError("origin is not strictly inside the region");

  // Each boundary point v contributes the half-plane u.v >= -1/6. Candidate
  // dual vertices come from consecutive constraint pairs; infeasible ones
  // (cut off by some third constraint) are discarded.
  std::vector<Pt> cand;
  cand.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Pt& v1 = pts[i];
    const Pt& v2 = pts[(i + 1) % n];
    double det = cross(v1, v2);
    cand.push_back({(-1.0 / 6.0) * (v2[1] - v1[1]) / det, (-1.0 / 6.0) * (v1[0] - v2[0]) / det});
  }
  PlanarRegion out;
  for (const Pt& u : cand) {
    bool feasible = true;
    for (const Pt& v : pts) {
      if (dot(u, v) < -1.0 / 6.0 - 1e-12 * std::max(1.0, norm(u))) {
        feasible = false;
        break;
      }
    }
    if (feasible) out.boundary.push_back(u);
  }
  if (out.boundary.size() < 3)
    throw NumericError("polar dual degenerated to fewer than 3 vertices");
  out.boundary = dedupe(out.boundary, 1e-12);
  out.convex = verify_convex(out);
  return out;
}

double hausdorff_distance(const PlanarRegion& a, const PlanarRegion& b) {
  if (a.boundary.empty() || b.boundary.empty())
    throw InputError("hausdorff distance of an empty region");
  return std::max(directed_hausdorff(a.boundary, b.boundary),
                  directed_hausdorff(b.boundary, a.boundary));
}

DualityReport verify_section_projection_duality(const SectionPlane& plane, int n, double tol) {
  if (n < 64) throw InputError("duality check needs at least 64 samples");
  PlanarRegion section = section_region(plane, n);
  PlanarRegion dual = polar_dual_2d(section);
  PlanarRegion projection = project_states(plane, n);
  DualityReport rep;
  rep.hausdorff = hausdorff_distance(dual, projection);
  rep.tol = tol;
  rep.pass = rep.hausdorff <= tol;
  return rep;
}

}  // namespace qsec
