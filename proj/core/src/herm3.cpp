#include "qsec/herm3.hpp"

#include <algorithm>
#include <cmath>

#include "qsec/errors.hpp"
#include "poly3.hpp"

namespace qsec {

namespace {
constexpr double kSqrt3 = 1.7320508075688772;
constexpr double k2Pi3 = 2.0943951023931953;  // 2 pi / 3
}  // namespace

Mat3 Mat3::identity() {
  Mat3 m;
  m(0, 0) = m(1, 1) = m(2, 2) = 1.0;
  return m;
}

Mat3 Mat3::adjoint() const {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = std::conj((*this)(j, i));
  return r;
}

double Mat3::frobenius() const {
  double s = 0.0;
  for (const cplx& z : e) s += std::norm(z);
  return std::sqrt(s);
}

Mat3 operator+(const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (std::size_t i = 0; i < 9; ++i) r.e[i] = a.e[i] + b.e[i];
  return r;
}

Mat3 operator-(const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (std::size_t i = 0; i < 9; ++i) r.e[i] = a.e[i] - b.e[i];
  return r;
}

Mat3 operator*(const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      cplx s = 0.0;
      for (int k = 0; k < 3; ++k) s += a(i, k) * b(k, j);
      r(i, j) = s;
    }
  return r;
}

Mat3 operator*(cplx s, const Mat3& a) {
  Mat3 r;
  for (std::size_t i = 0; i < 9; ++i) r.e[i] = s * a.e[i];
  return r;
}

Vec3c operator*(const Mat3& a, const Vec3c& v) {
  Vec3c r{};
  for (int i = 0; i < 3; ++i) {
    cplx s = 0.0;
    for (int j = 0; j < 3; ++j) s += a(i, j) * v[static_cast<std::size_t>(j)];
    r[static_cast<std::size_t>(i)] = s;
  }
  return r;
}

cplx trace(const Mat3& a) { return a(0, 0) + a(1, 1) + a(2, 2); }

cplx det(const Mat3& a) {
  return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
         a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
         a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

cplx dot_h(const Vec3c& a, const Vec3c& b) {
  return std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1] + std::conj(a[2]) * b[2];
}

Vec3c cross_b(const Vec3c& a, const Vec3c& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double norm(const Vec3c& v) {
  return std::sqrt(std::norm(v[0]) + std::norm(v[1]) + std::norm(v[2]));
}

Vec3c normalized(const Vec3c& v) {
  double n = norm(v);
  if (n == 0.0) return v;
  return {v[0] / n, v[1] / n, v[2] / n};
}

Herm3 Herm3::from_entries(const Mat3& m, double tol) {
  double scale = std::max(1.0, m.frobenius());
  double dev = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) dev = std::max(dev, std::abs(m(i, j) - std::conj(m(j, i))));
  if (dev > tol * scale)
    throw NotHermitianError("matrix deviates from hermiticity by " + std::to_string(dev));
  return hermitian_part(m);
}

Herm3 Herm3::hermitian_part(const Mat3& m) {
  Herm3 h;
  for (int i = 0; i < 3; ++i) {
    h.m_(i, i) = m(i, i).real();
    for (int j = i + 1; j < 3; ++j) {
      cplx v = 0.5 * (m(i, j) + std::conj(m(j, i)));
      h.m_(i, j) = v;
      h.m_(j, i) = std::conj(v);
    }
  }
  return h;
}

Herm3 Herm3::diag(double d0, double d1, double d2) {
  Herm3 h;
  h.m_(0, 0) = d0;
  h.m_(1, 1) = d1;
  h.m_(2, 2) = d2;
  return h;
}

double Herm3::trace() const { return (m_(0, 0) + m_(1, 1) + m_(2, 2)).real(); }

Herm3& Herm3::operator+=(const Herm3& o) {
  for (std::size_t i = 0; i < 9; ++i) m_.e[i] += o.m_.e[i];
  return *this;
}

Herm3& Herm3::operator-=(const Herm3& o) {
  for (std::size_t i = 0; i < 9; ++i) m_.e[i] -= o.m_.e[i];
  return *this;
}

Herm3& Herm3::operator*=(double s) {
  for (std::size_t i = 0; i < 9; ++i) m_.e[i] *= s;
  return *this;
}

Herm3 operator+(Herm3 a, const Herm3& b) { return a += b; }
Herm3 operator-(Herm3 a, const Herm3& b) { return a -= b; }
Herm3 operator*(double s, Herm3 a) { return a *= s; }
Herm3 operator-(Herm3 a) { return a *= -1.0; }

double hs_inner(const Herm3& a, const Herm3& b) {
  // Tr(AB)/2 for hermitian A, B is real: sum over entries of A_ij conj(B_ij).
  double s = 0.0;
  for (std::size_t i = 0; i < 9; ++i) s += (a.mat().e[i] * std::conj(b.mat().e[i])).real();
  return 0.5 * s;
}

double hs_norm(const Herm3& a) { return std::sqrt(std::max(0.0, hs_inner(a, a))); }

Herm3 conjugate(const Mat3& u, const Herm3& m) {
  return Herm3::hermitian_part(u * m.mat() * u.adjoint());
}

Herm3 commutator_i(const Herm3& a, const Herm3& b) {
  Mat3 ab = a.mat() * b.mat();
  return Herm3::hermitian_part(cplx(0.0, 1.0) * (ab - ab.adjoint()));
}

namespace {

struct CharPoly {
  // det(x I - M) = x^3 - t1 x^2 + t2 x - t3
  double t1, t2, t3;
};

CharPoly char_poly(const Herm3& m) {
  double a = m(0, 0).real(), b = m(1, 1).real(), c = m(2, 2).real();
  double n01 = std::norm(m(0, 1)), n02 = std::norm(m(0, 2)), n12 = std::norm(m(1, 2));
  CharPoly p;
  p.t1 = a + b + c;
  p.t2 = a * b + b * c + c * a - n01 - n02 - n12;
  p.t3 = det(m.mat()).real();
  return p;
}

bool is_exactly_diagonal(const Herm3& m) {
  return m(0, 1) == cplx(0.0) && m(0, 2) == cplx(0.0) && m(1, 2) == cplx(0.0);
}

}  // namespace

namespace {

// Unit vector hermitian-orthogonal to unit v, seeded from the least aligned
// standard basis vector.
Vec3c orthogonal_unit(const Vec3c& v) {
  int k = 0;
  double best = std::norm(v[0]);
  for (int i = 1; i < 3; ++i)
    if (std::norm(v[static_cast<std::size_t>(i)]) < best) {
      best = std::norm(v[static_cast<std::size_t>(i)]);
      k = i;
    }
  Vec3c e{};
  e[static_cast<std::size_t>(k)] = 1.0;
  cplx proj = dot_h(v, e);
  Vec3c p = {e[0] - proj * v[0], e[1] - proj * v[1], e[2] - proj * v[2]};
  return normalized(p);
}

Vec3c conj_vec(const Vec3c& v) { return {std::conj(v[0]), std::conj(v[1]), std::conj(v[2])}; }

// Spectral data obtained by splitting off the best-isolated eigenvalue and
// solving the 2x2 restriction to its orthogonal complement. The restriction
// resolves a nearly degenerate pair to full precision where the
// characteristic-polynomial route loses half the digits: its off-diagonal
// entry is computed directly as an inner product, with no cancellation
// against the large coefficients.
struct Deflation {
  bool ok = false;
  double w_iso = 0.0;
  Vec3c v_iso{};
  Vec3c p{}, q{};      // orthonormal complement pair
  double hpp = 0.0, hqq = 0.0;
  cplx hpq{};
  double mu_hi = 0.0, mu_lo = 0.0;  // eigenvalues of the restriction
};

Deflation deflate(const Herm3& m, const std::array<double, 3>& w_sorted) {
  Deflation d;
  int iso = (w_sorted[0] - w_sorted[1] >= w_sorted[1] - w_sorted[2]) ? 0 : 2;
  d.w_iso = w_sorted[static_cast<std::size_t>(iso)];

  Mat3 k = m.mat();
  k(0, 0) -= d.w_iso;
  k(1, 1) -= d.w_iso;
  k(2, 2) -= d.w_iso;
  std::array<Vec3c, 3> rows;
  for (int i = 0; i < 3; ++i) rows[static_cast<std::size_t>(i)] = {k(i, 0), k(i, 1), k(i, 2)};
  Vec3c best{};
  double best_n = -1.0;
  for (int i = 0; i < 3; ++i) {
    Vec3c c = cross_b(rows[static_cast<std::size_t>(i)], rows[static_cast<std::size_t>((i + 1) % 3)]);
    double n = norm(c);
    if (n > best_n) {
      best_n = n;
      best = c;
    }
  }
  if (best_n <= 1e-150) return d;
  d.v_iso = normalized(best);

  d.p = orthogonal_unit(d.v_iso);
  d.q = normalized(conj_vec(cross_b(d.v_iso, d.p)));
  Vec3c mp = m.mat() * d.p;
  Vec3c mq = m.mat() * d.q;
  d.hpp = dot_h(d.p, mp).real();
  d.hqq = dot_h(d.q, mq).real();
  d.hpq = dot_h(d.p, mq);
  double mid = 0.5 * (d.hpp + d.hqq);
  double rad = std::sqrt(0.25 * (d.hpp - d.hqq) * (d.hpp - d.hqq) + std::norm(d.hpq));
  d.mu_hi = mid + rad;
  d.mu_lo = mid - rad;
  d.ok = true;
  return d;
}

}  // namespace

Spectrum3 eigenvalues(const Herm3& m) {
  Spectrum3 s;
  if (is_exactly_diagonal(m)) {
    s.w = {m(0, 0).real(), m(1, 1).real(), m(2, 2).real()};
    std::sort(s.w.begin(), s.w.end(), std::greater<>());
    return s;
  }
  CharPoly cp = char_poly(m);
  double mean = cp.t1 / 3.0;
  double a = m(0, 0).real() - mean, b = m(1, 1).real() - mean, c = m(2, 2).real() - mean;
  double p1 = std::norm(m(0, 1)) + std::norm(m(0, 2)) + std::norm(m(1, 2));
  double p2 = a * a + b * b + c * c + 2.0 * p1;
  if (p2 <= 0.0) {
    s.w = {mean, mean, mean};
    return s;
  }
  double p = std::sqrt(p2 / 6.0);
  Mat3 k = m.mat();
  k(0, 0) -= mean;
  k(1, 1) -= mean;
  k(2, 2) -= mean;
  double r = det(k).real() / (2.0 * p * p * p);
  r = std::clamp(r, -1.0, 1.0);
  double phi = std::acos(r) / 3.0;
  double w0 = mean + 2.0 * p * std::cos(phi);
  double w2 = mean + 2.0 * p * std::cos(phi + k2Pi3);
  double w1 = cp.t1 - w0 - w2;
  s.w = {w0, w1, w2};
  for (double& w : s.w) w = detail::polish_cubic_root(1.0, -cp.t1, cp.t2, -cp.t3, w);
  std::sort(s.w.begin(), s.w.end(), std::greater<>());

  // A close pair is the one regime where the closed form degrades (split
  // error ~ sqrt(eps) * spread); re-derive the pair from the deflated 2x2.
  double spread = s.w[0] - s.w[2];
  double min_gap = std::min(s.w[0] - s.w[1], s.w[1] - s.w[2]);
  double scale = std::max({1.0, std::abs(s.w[0]), std::abs(s.w[2])});
  if (spread > 1e-13 * scale && min_gap <= 1e-5 * spread) {
    Deflation d = deflate(m, s.w);
    if (d.ok) {
      s.w = {d.w_iso, d.mu_hi, d.mu_lo};
      std::sort(s.w.begin(), s.w.end(), std::greater<>());
    }
  }
  return s;
}

EigenSystem3 eigen_system(const Herm3& m) {
  EigenSystem3 es;
  Spectrum3 s = eigenvalues(m);
  es.w = s.w;
  es.v = {Vec3c{1.0, 0.0, 0.0}, Vec3c{0.0, 1.0, 0.0}, Vec3c{0.0, 0.0, 1.0}};

  double scale = std::max({1.0, std::abs(s.w[0]), std::abs(s.w[2])});
  if (s.w[0] - s.w[2] <= 1e-13 * scale) return es;  // numerically scalar

  if (is_exactly_diagonal(m)) {
    // Identity basis, permuted to the sorted eigenvalue order.
    std::array<int, 3> idx = {0, 1, 2};
    std::array<double, 3> d = {m(0, 0).real(), m(1, 1).real(), m(2, 2).real()};
    std::sort(idx.begin(), idx.end(), [&](int x, int y) { return d[static_cast<std::size_t>(x)] > d[static_cast<std::size_t>(y)]; });
    for (int i = 0; i < 3; ++i) {
      es.w[static_cast<std::size_t>(i)] = d[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
      Vec3c e{};
      e[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])] = 1.0;
      es.v[static_cast<std::size_t>(i)] = e;
    }
    return es;
  }

  Deflation d = deflate(m, s.w);
  if (!d.ok) return es;  // pathologically degenerate; keep identity basis

  auto lift = [&](double mu) {
    // Kernel of the 2x2 (H - mu): pick the better-conditioned row.
    cplx x0, x1;
    if (std::abs(d.hpp - mu) >= std::abs(d.hqq - mu)) {
      x0 = -d.hpq;
      x1 = d.hpp - mu;
    } else {
      x0 = d.hqq - mu;
      x1 = -std::conj(d.hpq);
    }
    double n = std::sqrt(std::norm(x0) + std::norm(x1));
    if (n == 0.0) {
      x0 = 1.0;
      x1 = 0.0;
      n = 1.0;
    }
    x0 /= n;
    x1 /= n;
    Vec3c u = {x0 * d.p[0] + x1 * d.q[0], x0 * d.p[1] + x1 * d.q[1], x0 * d.p[2] + x1 * d.q[2]};
    return normalized(u);
  };

  Vec3c v_hi = lift(d.mu_hi);
  // The second complement vector is the orthogonal complement of the first
  // within span{p,q}; recomputing via lift(mu_lo) can lose orthogonality when
  // mu_hi == mu_lo, so rotate instead.
  cplx c0 = dot_h(d.p, v_hi), c1 = dot_h(d.q, v_hi);
  cplx y0 = -std::conj(c1), y1 = std::conj(c0);
  Vec3c v_lo = normalized(
      {y0 * d.p[0] + y1 * d.q[0], y0 * d.p[1] + y1 * d.q[1], y0 * d.p[2] + y1 * d.q[2]});

  std::array<std::pair<double, Vec3c>, 3> sys;
  sys[0] = {d.w_iso, d.v_iso};
  sys[1] = {d.mu_hi, v_hi};
  sys[2] = {d.mu_lo, v_lo};
  std::sort(sys.begin(), sys.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  for (int i = 0; i < 3; ++i) {
    es.w[static_cast<std::size_t>(i)] = sys[static_cast<std::size_t>(i)].first;
    es.v[static_cast<std::size_t>(i)] = sys[static_cast<std::size_t>(i)].second;
  }
  return es;
}

int rank_with_tol(const Herm3& m, double tol) {
  Spectrum3 s = eigenvalues(m);
  double spec = std::max(std::abs(s.w[0]), std::abs(s.w[2]));
  double cut = tol * std::max(1.0, spec);
  int r = 0;
  for (double w : s.w)
    if (std::abs(w) > cut) ++r;
  return r;
}

bool is_density_psd(const Herm3& m, double tol) {
  Spectrum3 s = eigenvalues(m);
  return s.w[2] + 1.0 / 3.0 >= -tol;
}

const Herm3& gell_mann(int i) {
  static const std::array<Herm3, 8> basis = [] {
    std::array<Herm3, 8> b;
    Mat3 m;

    m = Mat3{};
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    b[0] = Herm3::hermitian_part(m);

    m = Mat3{};
    m(0, 1) = cplx(0.0, -1.0);
    m(1, 0) = cplx(0.0, 1.0);
    b[1] = Herm3::hermitian_part(m);

    b[2] = Herm3::diag(1.0, -1.0, 0.0);

    m = Mat3{};
    m(0, 2) = 1.0;
    m(2, 0) = 1.0;
    b[3] = Herm3::hermitian_part(m);

    m = Mat3{};
    m(0, 2) = cplx(0.0, -1.0);
    m(2, 0) = cplx(0.0, 1.0);
    b[4] = Herm3::hermitian_part(m);

    m = Mat3{};
    m(1, 2) = 1.0;
    m(2, 1) = 1.0;
    b[5] = Herm3::hermitian_part(m);

    m = Mat3{};
    m(1, 2) = cplx(0.0, -1.0);
    m(2, 1) = cplx(0.0, 1.0);
    b[6] = Herm3::hermitian_part(m);

    b[7] = Herm3::diag(1.0 / kSqrt3, 1.0 / kSqrt3, -2.0 / kSqrt3);
    return b;
  }();
  if (i < 1 || i > 8) throw InputError("basis index out of range 1..8");
  return basis[static_cast<std::size_t>(i - 1)];
}

GellMannVector to_gellmann(const Herm3& m) {
  double tr = m.trace();
  if (std::abs(tr) > 1e-10 * std::max(1.0, m.mat().frobenius()))
    throw NonTracelessError("matrix trace " + std::to_string(tr) + " is not zero");
  GellMannVector x{};
  x[0] = m(0, 1).real();
  x[1] = -m(0, 1).imag();
  x[2] = 0.5 * (m(0, 0).real() - m(1, 1).real());
  x[3] = m(0, 2).real();
  x[4] = -m(0, 2).imag();
  x[5] = m(1, 2).real();
  x[6] = -m(1, 2).imag();
  x[7] = -0.5 * kSqrt3 * m(2, 2).real();
  return x;
}

Herm3 from_gellmann(const GellMannVector& x) {
  Mat3 m;
  double d8 = x[7] / kSqrt3;
  m(0, 0) = d8 + x[2];
  m(1, 1) = d8 - x[2];
  m(2, 2) = -2.0 * d8;
  m(0, 1) = cplx(x[0], -x[1]);
  m(1, 0) = std::conj(m(0, 1));
  m(0, 2) = cplx(x[3], -x[4]);
  m(2, 0) = std::conj(m(0, 2));
  m(1, 2) = cplx(x[5], -x[6]);
  m(2, 1) = std::conj(m(1, 2));
  return Herm3::hermitian_part(m);
}

}  // namespace qsec
