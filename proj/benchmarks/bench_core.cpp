#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <vector>

#include "qsec/atlas.hpp"
#include "qsec/boundary.hpp"
#include "qsec/canonical.hpp"
#include "qsec/dualrange.hpp"
#include "qsec/herm3.hpp"

namespace {

using namespace qsec;

constexpr double kPi = 3.14159265358979323846;

std::vector<Herm3> random_directions(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<Herm3> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    GellMannVector x{};
    for (auto& v : x) v = g(rng);
    Herm3 h = from_gellmann(x);
    out.push_back((1.0 / hs_norm(h)) * h);
  }
  return out;
}

std::vector<SectionParams> random_tuples(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  std::uniform_real_distribution<double> u(0.0, 2 * kPi);
  std::vector<SectionParams> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    double k = std::abs(g(rng)), a = std::abs(g(rng)), b = std::abs(g(rng)), c = std::abs(g(rng));
    if (b < c) std::swap(b, c);
    double s = std::sqrt(3 * k * k + a * a + b * b + c * c);
    out.push_back(SectionParams::make(k / s, a / s, b / s, c / s, u(rng)));
  }
  return out;
}

void BM_eigenvalues(benchmark::State& state) {
  auto pool = random_directions(256, 11);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(eigenvalues(pool[i++ & 255]));
}
BENCHMARK(BM_eigenvalues);

void BM_eigen_system(benchmark::State& state) {
  auto pool = random_directions(256, 12);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(eigen_system(pool[i++ & 255]));
}
BENCHMARK(BM_eigen_system);

void BM_raycast(benchmark::State& state) {
  auto pool = random_directions(256, 13);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(raycast(pool[i++ & 255]));
}
BENCHMARK(BM_raycast);

void BM_cubic_evaluate(benchmark::State& state) {
  auto tuples = random_tuples(64, 14);
  std::size_t i = 0;
  for (auto _ : state) {
    CubicCurve c = cubic_coefficients(tuples[i++ & 63]);
    benchmark::DoNotOptimize(c.evaluate(0.21, -0.17));
  }
}
BENCHMARK(BM_cubic_evaluate);

void BM_canonicalize(benchmark::State& state) {
  auto pool = random_directions(128, 15);
  std::size_t i = 0;
  for (auto _ : state) {
    const Herm3& a = pool[i & 63];
    const Herm3& b = pool[64 + (i & 63)];
    ++i;
    benchmark::DoNotOptimize(canonicalize(a, b));
  }
}
BENCHMARK(BM_canonicalize);

void BM_classify_named(benchmark::State& state) {
  SectionParams tri = SectionParams::make(1 / std::sqrt(3.0), 0, 0, 0, 0);
  for (auto _ : state) benchmark::DoNotOptimize(classify_shape(tri));
}
BENCHMARK(BM_classify_named);

void BM_classify_generic(benchmark::State& state) {
  auto tuples = random_tuples(16, 16);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(classify_shape(tuples[i++ & 15]));
}
BENCHMARK(BM_classify_generic);

void BM_find_pure_states(benchmark::State& state) {
  auto tuples = random_tuples(16, 17);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(find_pure_states(tuples[i++ & 15]));
}
BENCHMARK(BM_find_pure_states);

void BM_sample_boundary_360(benchmark::State& state) {
  SectionParams p = random_tuples(1, 18)[0];
  for (auto _ : state) benchmark::DoNotOptimize(sample_boundary(p, 360));
}
BENCHMARK(BM_sample_boundary_360);

void BM_numerical_range_360(benchmark::State& state) {
  Mat3 m{};
  m(0, 1) = cplx(1.0, 0.3);
  m(1, 2) = cplx(0.2, -0.7);
  m(2, 0) = cplx(-0.4, 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(numerical_range(m, 360));
}
BENCHMARK(BM_numerical_range_360);

void BM_duality_check_720(benchmark::State& state) {
  auto pool = random_directions(2, 19);
  SectionPlane plane = orthonormalize_plane(pool[0], pool[1]);
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_section_projection_duality(plane, 720, 2e-3));
}
BENCHMARK(BM_duality_check_720);

void BM_atlas(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(classify_gellmann_atlas());
}
BENCHMARK(BM_atlas);

}  // namespace

BENCHMARK_MAIN();
