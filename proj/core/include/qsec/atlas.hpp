#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qsec/boundary.hpp"
#include "qsec/canonical.hpp"

namespace qsec {

// The 28 planes spanned by unordered basis pairs (lambda_i, lambda_j), i < j,
// in lexicographic order starting with (1,2).
std::vector<SectionPlane> gellmann_pairs();

// Unitary-equivalence classes of the basis-pair sections. Two of the classes
// share the circular-disk shape and are told apart by the commutator
// invariant (4 vs 1), hence the group label is assigned by canonical
// parameters, not by shape.
enum class AtlasGroup { DiskI, DiskII, Parabola, Triangle, Ellipse };

const char* atlas_group_name(AtlasGroup g);

struct AtlasEntry {
  int i = 0, j = 0;  // basis indices, 1-based, i < j
  SectionParams params;
  ShapeClass shape;
  AtlasGroup group = AtlasGroup::DiskI;
};

// Canonicalizes and classifies every basis pair. Group membership means some
// canonical candidate lands within 1e-6 of the group representative; the
// Parabola group accepts either of its two equivalent representatives.
std::vector<AtlasEntry> classify_gellmann_atlas();

// Deterministic grid over the canonical parameter domain: the normalized
// (k,a,b,c) simplex restricted to b >= c, crossed with a phase circle that
// collapses to phi = 0 whenever a modulus vanishes.
struct SweepSpec {
  int n_simplex = 8;
  int n_phi = 1;
  std::vector<ShapeTag> filters;  // keep only these shapes; empty keeps all
};

std::vector<SectionParams> sweep_parameters(const SweepSpec& spec);

struct Ball4Report {
  int n = 0;
  double t_min = 0.0, t_max = 0.0;
  double radius = 0.0;  // midpoint of [t_min, t_max]
  bool round = false;   // t_max - t_min <= 1e-9
  std::string verdict;
  std::string note;
};

// Raycasts n pseudorandom unit directions inside span{l1, l2, l4, l5}. The
// 4-section cut out by this quartet is a round ball; the report records the
// measured radius spread.
Ball4Report ball4_check(int n, std::uint64_t seed = 1);

}  // namespace qsec
