#pragma once

// Internal: real roots of low-degree polynomials with real coefficients.
// Closed forms plus a Newton polish; callers decide what "zero leading
// coefficient" means on their own scale and degrade the degree explicitly.

#include <algorithm>
#include <cmath>
#include <vector>

namespace qsec::detail {

// Roots of c2 x^2 + c1 x + c0 with c2 != 0 assumed, ascending. Uses the
// cancellation-free form q = -(c1 + sign(c1) sqrt(disc))/2.
inline std::vector<double> quadratic_roots(double c2, double c1, double c0) {
  double disc = c1 * c1 - 4.0 * c2 * c0;
  if (disc < 0.0) return {};
  double sq = std::sqrt(disc);
  if (disc == 0.0) return {-c1 / (2.0 * c2)};
  double q = -0.5 * (c1 + (c1 >= 0.0 ? sq : -sq));
  double r0 = q / c2;
  double r1 = (q != 0.0) ? c0 / q : -c1 / c2 - r0;
  if (r0 > r1) std::swap(r0, r1);
  return {r0, r1};
}

// Real roots of x^3 + p x + q (depressed cubic), ascending. Triple and
// double roots collapse to the distinct values.
inline std::vector<double> depressed_cubic_roots(double p, double q) {
  if (p == 0.0 && q == 0.0) return {0.0};
  double disc = -4.0 * p * p * p - 27.0 * q * q;
  if (disc >= 0.0) {
    // Three real roots (disc > 0) or a repeated root (disc == 0).
    if (p >= 0.0) {
      // Only possible with p == 0 (then q == 0, handled) or rounding noise;
      // treat as single root via Cardano below.
    } else {
      double m = 2.0 * std::sqrt(-p / 3.0);
      double arg = 3.0 * q / (p * m);
      arg = std::clamp(arg, -1.0, 1.0);
      double theta = std::acos(arg) / 3.0;
      constexpr double k2pi3 = 2.0943951023931953;  // 2 pi / 3
      std::vector<double> r = {m * std::cos(theta),
                               m * std::cos(theta - k2pi3),
                               m * std::cos(theta + k2pi3)};
      std::sort(r.begin(), r.end());
      if (disc == 0.0) {
        // Collapse the numerically coincident pair.
        std::vector<double> out;
        for (double x : r) {
          if (out.empty() || x - out.back() > 1e-14 * (1.0 + std::abs(x))) out.push_back(x);
        }
        return out;
      }
      return r;
    }
  }
  // One real root: Cardano with stable branch.
  double sq = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
  double u = -q / 2.0 + (q <= 0.0 ? sq : -sq);
  double cu = std::cbrt(u);
  double root = (cu != 0.0) ? cu - p / (3.0 * cu) : 0.0;
  return {root};
}

// One Newton step on f(x) = c3 x^3 + c2 x^2 + c1 x + c0, skipped when the
// derivative is too small to trust (multiple-root neighborhood).
inline double polish_cubic_root(double c3, double c2, double c1, double c0, double x) {
  double f = ((c3 * x + c2) * x + c1) * x + c0;
  double fp = (3.0 * c3 * x + 2.0 * c2) * x + c1;
  double scale = std::abs(c3 * x * x * x) + std::abs(c2 * x * x) + std::abs(c1 * x) + std::abs(c0);
  if (std::abs(fp) > 1e-8 * (scale + 1e-300) / (std::abs(x) + 1.0)) {
    double step = f / fp;
    if (std::abs(step) < 0.5 * (1.0 + std::abs(x))) x -= step;
  }
  return x;
}

// Real roots of c3 x^3 + c2 x^2 + c1 x + c0, ascending, deduplicated.
// lead_tol decides when the cubic (resp. quadratic) coefficient counts as
// zero; it is measured against scale.
inline std::vector<double> cubic_roots(double c3, double c2, double c1, double c0,
                                       double lead_tol, double scale) {
  if (std::abs(c3) <= lead_tol * scale) {
    if (std::abs(c2) <= lead_tol * scale) {
      if (std::abs(c1) <= lead_tol * scale) return {};  // constant
      return {-c0 / c1};
    }
    return quadratic_roots(c2, c1, c0);
  }
  // Depress: x = y - c2/(3 c3).
  double b = c2 / c3, c = c1 / c3, d = c0 / c3;
  double shift = b / 3.0;
  double p = c - b * b / 3.0;
  double q = 2.0 * b * b * b / 27.0 - b * c / 3.0 + d;
  std::vector<double> roots = depressed_cubic_roots(p, q);
  for (double& y : roots) {
    double x = y - shift;
    x = polish_cubic_root(c3, c2, c1, c0, x);
    y = x;
  }
  std::sort(roots.begin(), roots.end());
  std::vector<double> out;
  for (double x : roots) {
    if (out.empty() || x - out.back() > 1e-12 * (1.0 + std::abs(x))) out.push_back(x);
  }
  return out;
}

}  // namespace qsec::detail
