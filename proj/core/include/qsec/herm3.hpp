#pragma once

#include <array>
#include <complex>

namespace qsec {

using cplx = std::complex<double>;
using Vec3c = std::array<cplx, 3>;

// Default tolerance for rank decisions and PSD checks, relative to the
// spectral scale of the matrix at hand.
inline constexpr double kDefaultTol = 1e-9;

// General complex 3x3 matrix, row-major. No structural guarantees.
struct Mat3 {
  std::array<cplx, 9> e{};

  cplx& operator()(int i, int j) { return e[static_cast<std::size_t>(3 * i + j)]; }
  const cplx& operator()(int i, int j) const { return e[static_cast<std::size_t>(3 * i + j)]; }

  static Mat3 identity();
  Mat3 adjoint() const;
  double frobenius() const;
};

Mat3 operator+(const Mat3& a, const Mat3& b);
Mat3 operator-(const Mat3& a, const Mat3& b);
Mat3 operator*(const Mat3& a, const Mat3& b);
Mat3 operator*(cplx s, const Mat3& a);
Vec3c operator*(const Mat3& a, const Vec3c& v);
cplx trace(const Mat3& a);
cplx det(const Mat3& a);

// <a,b> = sum conj(a_i) b_i.
cplx dot_h(const Vec3c& a, const Vec3c& b);
// Bilinear cross product (no conjugation); a x b is bilinearly orthogonal
// to both factors: a . (a x b) = 0.
Vec3c cross_b(const Vec3c& a, const Vec3c& b);
double norm(const Vec3c& v);
Vec3c normalized(const Vec3c& v);

// Hermitian 3x3 matrix. Hermiticity is a class invariant: public
// constructors validate (within 1e-12 relative) and then symmetrize exactly.
class Herm3 {
 public:
  Herm3() = default;  // zero matrix

  // Validates hermiticity, then stores (M + M^dagger)/2.
  static Herm3 from_entries(const Mat3& m, double tol = 1e-12);
  // Projects onto the hermitian part without validation. For results of
  // operations that are hermitian by construction.
  static Herm3 hermitian_part(const Mat3& m);
  static Herm3 diag(double d0, double d1, double d2);

  const cplx& operator()(int i, int j) const { return m_(i, j); }
  const Mat3& mat() const { return m_; }
  double trace() const;

  Herm3& operator+=(const Herm3& o);
  Herm3& operator-=(const Herm3& o);
  Herm3& operator*=(double s);

 private:
  Mat3 m_{};
};

Herm3 operator+(Herm3 a, const Herm3& b);
Herm3 operator-(Herm3 a, const Herm3& b);
Herm3 operator*(double s, Herm3 a);
Herm3 operator-(Herm3 a);

// Normalized trace inner product <M1,M2> = Tr(M1 M2)/2. Under it the basis
// returned by gell_mann() is orthonormal.
double hs_inner(const Herm3& a, const Herm3& b);
double hs_norm(const Herm3& a);

// U M U^dagger, symmetrized.
Herm3 conjugate(const Mat3& u, const Herm3& m);

// i[A,B] = i(AB - BA), hermitian for hermitian A, B.
Herm3 commutator_i(const Herm3& a, const Herm3& b);

// Eigenvalues in descending order.
struct Spectrum3 {
  std::array<double, 3> w{};
};

// Closed-form trigonometric solution of the characteristic cubic, one Newton
// polish step per root. Exact for diagonal input.
Spectrum3 eigenvalues(const Herm3& m);

struct EigenSystem3 {
  std::array<double, 3> w{};   // descending
  std::array<Vec3c, 3> v{};    // orthonormal, v[i] belongs to w[i]
};

// Full spectral decomposition: the most isolated eigenvalue's vector comes
// from the rank-2 kernel cross product, the remaining pair from an exact
// 2x2 solve in the orthogonal complement.
EigenSystem3 eigen_system(const Herm3& m);

// Number of eigenvalues with |w| > tol * max(1, spectral norm).
int rank_with_tol(const Herm3& m, double tol = kDefaultTol);

// Whether I/3 + M is positive semidefinite within tol. M is expected
// traceless; the check itself only looks at the spectrum.
bool is_density_psd(const Herm3& m, double tol = kDefaultTol);

// Coordinates in the orthonormal traceless basis e1..e8 (stored 0-indexed).
using GellMannVector = std::array<double, 8>;

// The i-th basis element, i in 1..8. Layout: for x in R^8,
//   sum_i x_i e_i = [ x8/s3 + x3   x1 - i x2    x4 - i x5 ]
//                   [ x1 + i x2   x8/s3 - x3    x6 - i x7 ]
//                   [ x4 + i x5   x6 + i x7    -2 x8/s3    ]
// with s3 = sqrt(3).
const Herm3& gell_mann(int i);

// Throws NonTracelessError if |Tr M| > 1e-10 * max(1, ||M||_F).
GellMannVector to_gellmann(const Herm3& m);
Herm3 from_gellmann(const GellMannVector& x);

}  // namespace qsec
