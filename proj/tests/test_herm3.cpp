#include <doctest.h>

#include <cmath>

#include "qsec/errors.hpp"
#include "qsec/herm3.hpp"
#include "testutil.hpp"

using namespace qsec;

namespace {
constexpr double kS3 = 1.7320508075688772;
}

TEST_CASE("traceless basis is orthonormal under Tr(AB)/2") {
  for (int i = 1; i <= 8; ++i)
    for (int j = 1; j <= 8; ++j) {
      double expect = (i == j) ? 1.0 : 0.0;
      CHECK(hs_inner(gell_mann(i), gell_mann(j)) == doctest::Approx(expect).epsilon(1e-15));
    }
}

TEST_CASE("basis layout pins") {
  const Herm3& e2 = gell_mann(2);
  CHECK(e2(0, 1) == cplx(0.0, -1.0));
  CHECK(e2(1, 0) == cplx(0.0, 1.0));
  const Herm3& e3 = gell_mann(3);
  CHECK(e3(0, 0) == cplx(1.0));
  CHECK(e3(1, 1) == cplx(-1.0));
  CHECK(e3(2, 2) == cplx(0.0));
  const Herm3& e8 = gell_mann(8);
  CHECK(e8(0, 0).real() == doctest::Approx(1.0 / kS3).epsilon(1e-16));
  CHECK(e8(2, 2).real() == doctest::Approx(-2.0 / kS3).epsilon(1e-16));
  CHECK_THROWS_AS(gell_mann(0), InputError);
  CHECK_THROWS_AS(gell_mann(9), InputError);
}

TEST_CASE("coordinate round-trips are exact to rounding") {
  auto g = testutil::rng(11);
  for (int rep = 0; rep < 200; ++rep) {
    GellMannVector x{};
    for (double& v : x) v = testutil::gauss(g);
    Herm3 m = from_gellmann(x);
    CHECK(std::abs(m.trace()) < 1e-14);
    GellMannVector y = to_gellmann(m);
    for (int i = 0; i < 8; ++i)
      CHECK(y[static_cast<std::size_t>(i)] ==
            doctest::Approx(x[static_cast<std::size_t>(i)]).epsilon(1e-14));
    // Coordinates reproduce the matrix entry-for-entry.
    Herm3 back = from_gellmann(y);
    CHECK((m - back).mat().frobenius() < 1e-14);
  }
}

TEST_CASE("coordinate map matches manual basis expansion") {
  auto g = testutil::rng(12);
  for (int rep = 0; rep < 50; ++rep) {
    GellMannVector x{};
    for (double& v : x) v = testutil::gauss(g);
    Herm3 sum;
    for (int i = 1; i <= 8; ++i) sum += x[static_cast<std::size_t>(i - 1)] * gell_mann(i);
    CHECK((sum - from_gellmann(x)).mat().frobenius() < 1e-14);
  }
}

TEST_CASE("to_gellmann rejects non-traceless input") {
  CHECK_THROWS_AS(to_gellmann(Herm3::diag(1.0, 0.0, 0.0)), NonTracelessError);
}

TEST_CASE("from_entries validates hermiticity") {
  Mat3 m;
  m(0, 1) = cplx(1.0, 2.0);
  m(1, 0) = cplx(1.0, 2.0);  // should be the conjugate
  CHECK_THROWS_AS(Herm3::from_entries(m), NotHermitianError);
  m(1, 0) = std::conj(m(0, 1));
  CHECK_NOTHROW(Herm3::from_entries(m));
}

TEST_CASE("eigenvalues: diagonal input is exact") {
  Herm3 m = Herm3::diag(0.3, -0.7, 0.4);
  Spectrum3 s = eigenvalues(m);
  CHECK(s.w[0] == 0.4);
  CHECK(s.w[1] == 0.3);
  CHECK(s.w[2] == -0.7);
}

TEST_CASE("eigenvalues: known spectra") {
  Spectrum3 s1 = eigenvalues(gell_mann(1));
  CHECK(s1.w[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(s1.w[1]) < 1e-15);
  CHECK(s1.w[2] == doctest::Approx(-1.0).epsilon(1e-15));

  // Rank-one projector minus a third of the identity has spectrum {2/3, -1/3, -1/3}.
  Herm3 m = Herm3::diag(2.0 / 3.0, -1.0 / 3.0, -1.0 / 3.0);
  auto g = testutil::rng(21);
  Mat3 u = testutil::random_unitary(g);
  Herm3 rotated = conjugate(u, m);
  Spectrum3 s = eigenvalues(rotated);
  CHECK(s.w[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(s.w[1] == doctest::Approx(-1.0 / 3.0).epsilon(1e-12));
  CHECK(s.w[2] == doctest::Approx(-1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("eigenvalues satisfy the characteristic polynomial") {
  auto g = testutil::rng(31);
  for (int rep = 0; rep < 500; ++rep) {
    Herm3 m = testutil::random_hermitian(g);
    Spectrum3 s = eigenvalues(m);
    CHECK(s.w[0] >= s.w[1]);
    CHECK(s.w[1] >= s.w[2]);
    double t1 = m.trace();
    double scale = std::max(1.0, m.mat().frobenius());
    CHECK(std::abs(s.w[0] + s.w[1] + s.w[2] - t1) < 1e-12 * scale);
    CHECK(std::abs(s.w[0] * s.w[1] * s.w[2] - det(m.mat()).real()) < 1e-10 * scale * scale * scale);
    // Residual of det(wI - M) per root.
    for (double w : s.w) {
      Mat3 shifted = m.mat();
      shifted(0, 0) -= w;
      shifted(1, 1) -= w;
      shifted(2, 2) -= w;
      CHECK(std::abs(det(shifted)) < 1e-9 * scale * scale * scale);
    }
  }
}

TEST_CASE("eigen_system: residuals, orthonormality, reconstruction") {
  auto g = testutil::rng(41);
  for (int rep = 0; rep < 300; ++rep) {
    Herm3 m = testutil::random_hermitian(g);
    EigenSystem3 es = eigen_system(m);
    double scale = std::max(1.0, m.mat().frobenius());
    for (int i = 0; i < 3; ++i) {
      Vec3c mv = m.mat() * es.v[static_cast<std::size_t>(i)];
      for (int t = 0; t < 3; ++t)
        mv[static_cast<std::size_t>(t)] -=
            es.w[static_cast<std::size_t>(i)] * es.v[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)];
      CHECK(norm(mv) < 1e-9 * scale);
      for (int j = 0; j < 3; ++j) {
        cplx d = dot_h(es.v[static_cast<std::size_t>(i)], es.v[static_cast<std::size_t>(j)]);
        CHECK(std::abs(d - (i == j ? 1.0 : 0.0)) < 1e-12);
      }
    }
    // Sum of w_i v_i v_i^dagger reproduces M.
    Mat3 rec;
    for (int i = 0; i < 3; ++i)
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
          rec(r, c) += es.w[static_cast<std::size_t>(i)] *
                       es.v[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)] *
                       std::conj(es.v[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]);
    CHECK((rec - m.mat()).frobenius() < 1e-10 * scale);
  }
}

TEST_CASE("eigen_system handles degenerate spectra") {
  // Exact double eigenvalue.
  Herm3 m = Herm3::diag(2.0 / 3.0, -1.0 / 3.0, -1.0 / 3.0);
  auto g = testutil::rng(43);
  for (int rep = 0; rep < 20; ++rep) {
    Mat3 u = testutil::random_unitary(g);
    Herm3 rotated = conjugate(u, m);
    EigenSystem3 es = eigen_system(rotated);
    for (int i = 0; i < 3; ++i) {
      Vec3c mv = rotated.mat() * es.v[static_cast<std::size_t>(i)];
      for (int t = 0; t < 3; ++t)
        mv[static_cast<std::size_t>(t)] -=
            es.w[static_cast<std::size_t>(i)] * es.v[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)];
      CHECK(norm(mv) < 1e-10);
      for (int j = i + 1; j < 3; ++j)
        CHECK(std::abs(dot_h(es.v[static_cast<std::size_t>(i)], es.v[static_cast<std::size_t>(j)])) < 1e-12);
    }
  }
  // Scalar matrix: any orthonormal basis is fine, check it is one.
  EigenSystem3 es = eigen_system(Herm3::diag(0.5, 0.5, 0.5));
  CHECK(es.w[0] == 0.5);
  CHECK(std::abs(dot_h(es.v[0], es.v[1])) < 1e-15);
}

TEST_CASE("rank and density checks") {
  CHECK(rank_with_tol(Herm3{}) == 0);
  CHECK(rank_with_tol(gell_mann(3)) == 2);
  CHECK(rank_with_tol(Herm3::diag(1.0, 0.0, 0.0)) == 1);
  CHECK(rank_with_tol(Herm3::diag(0.5, 0.25, -0.75)) == 3);

  // Pure state: I/3 + M psd with a zero pair.
  CHECK(is_density_psd(Herm3::diag(2.0 / 3.0, -1.0 / 3.0, -1.0 / 3.0)));
  CHECK_FALSE(is_density_psd(Herm3::diag(0.8, -0.4, -0.4)));
  // Boundary of psd: eigenvalue exactly -1/3.
  CHECK(is_density_psd(Herm3::diag(1.0 / 3.0, 0.0, -1.0 / 3.0)));
}

TEST_CASE("commutator is hermitian and traceless") {
  auto g = testutil::rng(51);
  for (int rep = 0; rep < 50; ++rep) {
    Herm3 a = testutil::random_traceless(g);
    Herm3 b = testutil::random_traceless(g);
    Herm3 c = commutator_i(a, b);
    CHECK(std::abs(c.trace()) < 1e-12);
    // Antisymmetry.
    CHECK((c + commutator_i(b, a)).mat().frobenius() < 1e-12);
  }
  // i[e1, e2] = -2 e3 in this basis.
  Herm3 c12 = commutator_i(gell_mann(1), gell_mann(2));
  CHECK((c12 + 2.0 * gell_mann(3)).mat().frobenius() < 1e-15);
}

TEST_CASE("unitary conjugation preserves the spectrum") {
  auto g = testutil::rng(61);
  for (int rep = 0; rep < 100; ++rep) {
    Herm3 m = testutil::random_hermitian(g);
    Mat3 u = testutil::random_unitary(g);
    Spectrum3 s0 = eigenvalues(m);
    Spectrum3 s1 = eigenvalues(conjugate(u, m));
    for (int i = 0; i < 3; ++i)
      CHECK(s1.w[static_cast<std::size_t>(i)] ==
            doctest::Approx(s0.w[static_cast<std::size_t>(i)]).epsilon(1e-10));
  }
}
