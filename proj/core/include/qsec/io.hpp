#pragma once

#include <array>
#include <string>
#include <vector>

#include "qsec/atlas.hpp"
#include "qsec/boundary.hpp"
#include "qsec/canonical.hpp"
#include "qsec/dualrange.hpp"

namespace qsec::io {

// Doubles print with 17 significant digits so text output round-trips
// losslessly.
std::string format_double(double x);

// Matrices travel as {"re": [[..3x3..]], "im": [[..3x3..]]}; "im" may be
// omitted for real matrices. Throws InputError on malformed documents.
Mat3 parse_matrix_json(const std::string& text);
std::string matrix_json(const Mat3& m);

// Comma-separated list of exactly n real numbers. Throws InputError.
std::vector<double> parse_number_list(const std::string& text, std::size_t n);

std::string params_json(const SectionParams& p);
std::string shape_json(const ShapeClass& s, const SectionParams& p);
std::string canonical_json(const CanonicalResult& r);
std::string atlas_json_lines(const std::vector<AtlasEntry>& entries);
std::string duality_json(const DualityReport& r);
std::string ball4_json(const Ball4Report& r);

// CSV bodies, headers included: boundary is "theta,t,x,y", regions are
// "x,y", sweeps are "k,a,b,c,phi,shape_tag,pure_contacts".
std::string boundary_csv(const std::vector<BoundarySample>& samples);
std::string region_csv(const PlanarRegion& region);
std::string sweep_csv(const std::vector<SectionParams>& params,
                      const std::vector<ShapeClass>& shapes);

// Fixed-viewport SVG scene over [-0.65, 0.65]^2: polylines plus point
// markers, optionally with the outsphere/insphere reference circles behind.
struct SvgPath {
  std::vector<std::array<double, 2>> points;
  std::string color = "#1f6feb";
  bool closed = true;
};
struct SvgMarker {
  double x = 0, y = 0;
  std::string color = "#d1242f";
};
std::string render_svg(const std::vector<SvgPath>& paths, const std::vector<SvgMarker>& markers,
                       bool reference_circles);

}  // namespace qsec::io
