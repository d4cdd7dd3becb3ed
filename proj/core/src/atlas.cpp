#include "qsec/atlas.hpp"

#include <cmath>
#include <random>

#include "qsec/errors.hpp"
#include "qsec/parallel.hpp"

namespace qsec {

namespace {

constexpr double kTwoPi = 6.283185307179586;

}  // namespace

std::vector<SectionPlane> gellmann_pairs() {
  std::vector<SectionPlane> out;
  out.reserve(28);
  for (int i = 1; i <= 8; ++i)
    for (int j = i + 1; j <= 8; ++j)
      out.push_back(orthonormalize_plane(gell_mann(i), gell_mann(j)));
  return out;
}

const char* atlas_group_name(AtlasGroup g) {
  switch (g) {
    case AtlasGroup::DiskI: return "DiskI";
    case AtlasGroup::DiskII: return "DiskII";
    case AtlasGroup::Parabola: return "Parabola";
    case AtlasGroup::Triangle: return "Triangle";
    case AtlasGroup::Ellipse: return "Ellipse";
  }
  return "Unknown";
}

namespace {

double params_gap(const SectionParams& x, const SectionParams& y) {
  return hs_norm(canonical_B(x) - canonical_B(y));
}

struct GroupRep {
  AtlasGroup group;
  std::vector<SectionParams> reps;
};

const std::vector<GroupRep>& group_reps() {
  static const std::vector<GroupRep> reps = [] {
    double s3 = std::sqrt(3.0);
    double r2 = std::sqrt(2.0);
    std::vector<GroupRep> g;
    g.push_back({AtlasGroup::DiskI, {SectionParams::make(0, 1, 0, 0, 0)}});
    g.push_back({AtlasGroup::DiskII, {SectionParams::make(0, 0, 1 / r2, 1 / r2, 0)}});
    // The parabola class carries a discrete ambiguity: both canonical tuples
    // describe congruent sections, so either one identifies the group.
    g.push_back({AtlasGroup::Parabola,
                 {SectionParams::make(0, 0, 1, 0, 0), SectionParams::make(0.5, 0.5, 0, 0, 0)}});
    g.push_back({AtlasGroup::Triangle, {SectionParams::make(1 / s3, 0, 0, 0, 0)}});
    g.push_back({AtlasGroup::Ellipse, {SectionParams::make(1 / (2 * s3), s3 / 2, 0, 0, 0)}});
    return g;
  }();
  return reps;
}

}  // namespace

std::vector<AtlasEntry> classify_gellmann_atlas() {
  std::vector<AtlasEntry> out;
  out.reserve(28);
  for (int i = 1; i <= 8; ++i) {
    for (int j = i + 1; j <= 8; ++j) {
      CanonicalResult cr = canonicalize(gell_mann(i), gell_mann(j));
      AtlasEntry e;
      e.i = i;
      e.j = j;
      e.params = cr.params;
      e.shape = classify_shape(cr.params);
      bool matched = false;
      for (const GroupRep& gr : group_reps()) {
        for (const SectionParams& rep : gr.reps) {
          for (const SectionParams& cand : cr.candidates) {
            if (params_gap(cand, rep) <= 1e-6) {
              e.group = gr.group;
              matched = true;
              break;
            }
          }
          if (matched) break;
        }
        if (matched) break;
      }
      if (!matched)
        throw NumericError("basis pair section does not match any atlas representative");
      out.push_back(e);
    }
  }
  return out;
}

std::vector<SectionParams> sweep_parameters(const SweepSpec& spec) {
  if (spec.n_simplex < 2) throw InputError("n_simplex must be at least 2");
  if (spec.n_phi < 1) throw InputError("n_phi must be at least 1");
  const int n = spec.n_simplex;
  std::vector<SectionParams> all;

  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n - i; ++j) {
      for (int l = 0; l <= n - i - j; ++l) {
        int m = n - i - j - l;
        if (l < m) continue;  // the halfsimplex: b >= c
        double k = i, a = j, b = l, c = m;
        double s = std::sqrt(3 * k * k + a * a + b * b + c * c);
        k /= s;
        a /= s;
        b /= s;
        c /= s;
        int phases = (j > 0 && l > 0 && m > 0) ? spec.n_phi : 1;
        for (int r = 0; r < phases; ++r)
          all.push_back(SectionParams::make(k, a, b, c, kTwoPi * r / phases));
      }
    }
  }
  if (spec.filters.empty()) return all;

  // Classification dominates the cost, so it fans out; the grid order of the
  // output is fixed by the index-addressed keep flags.
  std::vector<char> keep(all.size(), 0);
  parallel_for(static_cast<int>(all.size()), [&](int idx) {
    ShapeTag tag = classify_shape(all[static_cast<std::size_t>(idx)]).tag;
    for (ShapeTag f : spec.filters) {
      if (f == tag) {
        keep[static_cast<std::size_t>(idx)] = 1;
        return;
      }
    }
  });
  std::vector<SectionParams> out;
  for (std::size_t idx = 0; idx < all.size(); ++idx)
    if (keep[idx]) out.push_back(all[idx]);
  return out;
}

Ball4Report ball4_check(int n, std::uint64_t seed) {
  if (n < 1) throw InputError("direction count must be positive");
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  Ball4Report rep;
  rep.n = n;
  rep.t_min = 1e300;
  rep.t_max = -1e300;
  for (int trial = 0; trial < n; ++trial) {
    GellMannVector x{};
    x[0] = gauss(gen);  // l1
    x[1] = gauss(gen);  // l2
    x[3] = gauss(gen);  // l4
    x[4] = gauss(gen);  // l5
    Herm3 d = from_gellmann(x);
    double nrm = hs_norm(d);
    if (nrm < 1e-12) {
      --trial;
      continue;
    }
    d *= 1.0 / nrm;
    double t = raycast(d);
    rep.t_min = std::min(rep.t_min, t);
    rep.t_max = std::max(rep.t_max, t);
  }
  rep.radius = 0.5 * (rep.t_min + rep.t_max);
  rep.round = rep.t_max - rep.t_min <= 1e-9;
  if (rep.round && std::abs(rep.radius - 1.0 / 3.0) <= 1e-9) {
    rep.verdict = "round, radius 1/3";
  } else if (rep.round) {
    rep.verdict = "round";
  } else {
    rep.verdict = "not round";
  }
  rep.note =
      "The value 1/sqrt(6) is sometimes stated for this radius; it is "
      "inconsistent with the half-trace inner product used here, under which "
      "the quartet ball measures exactly 1/3 in every direction.";
  return rep;
}

}  // namespace qsec
