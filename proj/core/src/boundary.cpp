#include "qsec/boundary.hpp"

#include <algorithm>
#include <cmath>

#include "qsec/errors.hpp"

namespace qsec {

namespace {

constexpr double kTwoPi = 6.283185307179586;
constexpr double kS3 = 1.7320508075688772;
constexpr double kROut = 0.5773502691896258;   // 1/sqrt3
constexpr double kRIn = 0.28867513459481287;   // 1/(2 sqrt3)

}  // namespace

double CubicCurve::evaluate(double x, double y) const {
  return c0 + cx2 * x * x + cy2 * y * y + y * (cy3 * y * y + cx2y * x * x + cxy2 * x * y);
}

std::array<double, 2> CubicCurve::gradient(double x, double y) const {
  double gx = 2.0 * cx2 * x + 2.0 * cx2y * x * y + cxy2 * y * y;
  double gy = 2.0 * cy2 * y + 3.0 * cy3 * y * y + cx2y * x * x + 2.0 * cxy2 * x * y;
  return {gx, gy};
}

CubicCurve cubic_coefficients(const SectionParams& p) {
  CubicCurve c;
  c.cy3 = 3.0 * (2.0 * p.a * p.b * p.c * std::cos(p.phi) -
                 p.k * (1.0 - p.k * p.k - 3.0 * p.a * p.a));
  c.cx2y = 6.0 * p.k;
  c.cxy2 = 3.0 * (p.b * p.b - p.c * p.c);
  return c;
}

double evaluate_det(const SectionParams& p, double x, double y) {
  Herm3 m = x * canonical_A() + y * canonical_B(p);
  Mat3 rho = m.mat();
  rho(0, 0) += 1.0 / 3.0;
  rho(1, 1) += 1.0 / 3.0;
  rho(2, 2) += 1.0 / 3.0;
  return 3.0 * det(rho).real();
}

namespace {

double raycast_dir(const Herm3& d) {
  double wmin = eigenvalues(d).w[2];
  if (wmin >= 0.0) throw NumericError("direction has no negative eigenvalue");
  return -1.0 / (3.0 * wmin);
}

}  // namespace

double raycast(const Herm3& d) {
  if (std::abs(d.trace()) > 1e-10 * std::max(1.0, d.mat().frobenius()))
    throw NonTracelessError("raycast direction must be traceless");
  if (std::abs(hs_norm(d) - 1.0) > 1e-8)
    throw InputError("raycast direction must have unit norm");
  return raycast_dir(d);
}

double raycast(const SectionParams& p, double theta) {
  Herm3 d = std::cos(theta) * canonical_A() + std::sin(theta) * canonical_B(p);
  return raycast_dir(d);
}

std::vector<BoundarySample> sample_boundary(const SectionParams& p, int n, double theta0) {
  if (n < 1) throw InputError("sample count must be positive");
  Herm3 a = canonical_A();
  Herm3 b = canonical_B(p);
  std::vector<BoundarySample> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    BoundarySample s;
    s.theta = theta0 + kTwoPi * i / n;
    double ct = std::cos(s.theta), st = std::sin(s.theta);
    s.t = raycast_dir(ct * a + st * b);
    s.x = s.t * ct;
    s.y = s.t * st;
    out.push_back(s);
  }
  return out;
}

const char* shape_name(ShapeTag tag) {
  switch (tag) {
    case ShapeTag::CircularDisk: return "CircularDisk";
    case ShapeTag::Ellipse: return "Ellipse";
    case ShapeTag::EllipseOnePureContact: return "EllipseOnePureContact";
    case ShapeTag::CutEllipse: return "CutEllipse";
    case ShapeTag::ParabolaChord: return "ParabolaChord";
    case ShapeTag::CutHyperbola: return "CutHyperbola";
    case ShapeTag::Triangle: return "Triangle";
    case ShapeTag::GenericSmooth: return "GenericSmooth";
    case ShapeTag::GenericWithPureContacts: return "GenericWithPureContacts";
  }
  return "Unknown";
}

namespace {

ShapeClass named(ShapeTag tag) {
  ShapeClass s;
  s.tag = tag;
  switch (tag) {
    case ShapeTag::CircularDisk:
    case ShapeTag::Ellipse:
      s.pure_contacts = 0;
      s.has_segment = false;
      break;
    case ShapeTag::EllipseOnePureContact:
      s.pure_contacts = 1;
      s.has_segment = false;
      break;
    case ShapeTag::CutEllipse:
    case ShapeTag::ParabolaChord:
    case ShapeTag::CutHyperbola:
      s.pure_contacts = 2;
      s.has_segment = true;
      break;
    case ShapeTag::Triangle:
      s.pure_contacts = 3;
      s.has_segment = true;
      break;
    default:
      break;
  }
  return s;
}

}  // namespace

ShapeClass classify_shape(const SectionParams& p, double tol) {
  auto near = [tol](double u, double v) { return std::abs(u - v) <= tol; };

  // Identically rank-2 pencil: round section.
  if (near(p.k, 0.0) && near(p.b, p.c) && std::abs(p.a * p.b * p.c * std::cos(p.phi)) <= tol)
    return named(ShapeTag::CircularDisk);

  // a = c = 0 family, parametrized by k in [0, 1/sqrt3].
  if (near(p.a, 0.0) && near(p.c, 0.0)) {
    if (near(p.k, 1.0 / kS3)) return named(ShapeTag::Triangle);
    if (near(p.k, 0.0)) return named(ShapeTag::ParabolaChord);
    return named(ShapeTag::CutHyperbola);
  }

  if (near(p.b, p.c)) {
    // b = c = 0 family, parametrized by k in [0, 1/sqrt3].
    if (near(p.b, 0.0)) {
      if (near(p.k, 1.0 / kS3)) return named(ShapeTag::Triangle);
      if (near(p.k, 0.5)) return named(ShapeTag::ParabolaChord);
      if (p.k > 0.5) return named(ShapeTag::CutHyperbola);
      if (near(p.k, kRIn)) return named(ShapeTag::EllipseOnePureContact);
      if (p.k < kRIn) return named(ShapeTag::Ellipse);
      return named(ShapeTag::CutEllipse);
    }
    // b = c != 0 ovals: a cos(phi) = 3k (which forces k <= 1/(2 sqrt3)).
    if (near(p.a * std::cos(p.phi), 3.0 * p.k)) return named(ShapeTag::Ellipse);
  }

  std::vector<PureContact> contacts = find_pure_states(p, std::max(tol, 1e-9));
  ShapeClass s;
  s.pure_contacts = static_cast<int>(contacts.size());
  s.has_segment = false;
  s.tag = contacts.empty() ? ShapeTag::GenericSmooth : ShapeTag::GenericWithPureContacts;
  return s;
}

namespace {

// Golden-section maximization of f on [lo, hi] down to bracket width eps.
template <class F>
double golden_max(F&& f, double lo, double hi, double eps) {
  constexpr double inv_phi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > eps) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

std::vector<PureContact> find_pure_states(const SectionParams& p, double tol) {
  constexpr int N = 2048;
  Herm3 a = canonical_A();
  Herm3 b = canonical_B(p);
  auto h = [&](double theta) {
    return raycast_dir(std::cos(theta) * a + std::sin(theta) * b) - kROut;
  };

  std::vector<double> grid(N);
  for (int i = 0; i < N; ++i) grid[static_cast<std::size_t>(i)] = h(kTwoPi * i / N);

  std::vector<double> peaks;
  for (int i = 0; i < N; ++i) {
    double hp = grid[static_cast<std::size_t>((i + N - 1) % N)];
    double hc = grid[static_cast<std::size_t>(i)];
    double hn = grid[static_cast<std::size_t>((i + 1) % N)];
    if (hc < hp || hc < hn) continue;
    if (!(hc > hp || hc > hn)) continue;  // interior of a flat plateau
    if (hc < -2e-2) continue;             // cannot climb to zero within one cell
    double lo = kTwoPi * (i - 1) / N;
    double hi = kTwoPi * (i + 1) / N;
    double th = golden_max(h, lo, hi, 1e-12);
    if (h(th) >= -tol) peaks.push_back(std::fmod(th + kTwoPi, kTwoPi));
  }

  std::sort(peaks.begin(), peaks.end());
  std::vector<PureContact> out;
  for (double th : peaks) {
    if (!out.empty() && th - out.back().theta < 1e-5) continue;
    if (!out.empty() && th > kTwoPi - 1e-5 && out.front().theta < th - kTwoPi + 1e-5) continue;
    PureContact c;
    c.theta = th;
    // A corner kinks the radial profile: one-sided secant slopes stay O(1),
    // while a tangential touch decays linearly with the probe offset.
    constexpr double delta = 1e-4;
    double s1 = std::abs(h(th) - h(th + delta)) / delta;
    double s2 = std::abs(h(th) - h(th - delta)) / delta;
    c.kind = std::max(s1, s2) > 1e-3 ? PureContact::Kind::Corner : PureContact::Kind::Tangential;
    out.push_back(c);
  }
  return out;
}

bool is_smooth_boundary(const SectionParams& p, double tol) {
  if (!find_pure_states(p, std::max(tol, 1e-9)).empty()) return false;
  // Cross-check: the gradient of the boundary polynomial must stay away
  // from zero along the boundary when no contact was detected.
  CubicCurve c = cubic_coefficients(p);
  constexpr int N = 1024;
  for (int i = 0; i < N; ++i) {
    double theta = kTwoPi * i / N;
    double t = raycast(p, theta);
    auto g = c.gradient(t * std::cos(theta), t * std::sin(theta));
    if (std::hypot(g[0], g[1]) < 1e-6) return false;
  }
  return true;
}

double pure_state_surface_residual(const SectionParams& p) {
  if (p.phi != 0.0)
    throw InapplicableRegimeError("surface residual requires phi = 0");
  if (p.a <= 0.0 || p.b <= 0.0 || p.c <= 0.0)
    throw InapplicableRegimeError("surface residual requires a, b, c > 0");
  double ab = p.a * p.b, ac = p.a * p.c, bc = p.b * p.c;
  return 6.0 * p.k * p.a * p.b * p.c - ab * ab - ac * ac + 2.0 * bc * bc;
}

}  // namespace qsec
