#include <CLI11.hpp>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qsec/atlas.hpp"
#include "qsec/boundary.hpp"
#include "qsec/canonical.hpp"
#include "qsec/dualrange.hpp"
#include "qsec/errors.hpp"
#include "qsec/herm3.hpp"
#include "qsec/io.hpp"
#include "qsec/parallel.hpp"

namespace {

using namespace qsec;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& body) {
  if (path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open " + path + " for writing");
  out << body;
}

ShapeTag tag_from_name(const std::string& name) {
  static constexpr ShapeTag kAll[] = {
      ShapeTag::CircularDisk,  ShapeTag::Ellipse,       ShapeTag::EllipseOnePureContact,
      ShapeTag::CutEllipse,    ShapeTag::ParabolaChord, ShapeTag::CutHyperbola,
      ShapeTag::Triangle,      ShapeTag::GenericSmooth, ShapeTag::GenericWithPureContacts,
  };
  for (ShapeTag t : kAll)
    if (name == shape_name(t)) return t;
  throw InputError("unknown shape tag \"" + name + "\"");
}

// The four interchangeable ways of naming a section plane. Exactly one form
// must be given; --params skips canonicalization entirely.
struct PlaneInput {
  std::string a_file, b_file;
  std::string ga, gb;
  std::string pair;
  std::string params;

  void attach(CLI::App& cmd) {
    cmd.add_option("--a", a_file, "first spanning matrix, JSON file {\"re\":[[..]],\"im\":[[..]]}");
    cmd.add_option("--b", b_file, "second spanning matrix, JSON file");
    cmd.add_option("--ga", ga, "first spanning matrix as 8 comma-separated Gell-Mann coordinates");
    cmd.add_option("--gb", gb, "second spanning matrix as 8 Gell-Mann coordinates");
    cmd.add_option("--pair", pair, "Gell-Mann basis pair i,j (1-based)");
    cmd.add_option("--params", params, "canonical parameters k,a,b,c,phi");
  }

  bool has_matrices() const { return !a_file.empty() || !b_file.empty(); }
  bool has_gellmann() const { return !ga.empty() || !gb.empty(); }

  bool given() const {
    return has_matrices() || has_gellmann() || !pair.empty() || !params.empty();
  }

  void require_one_form() const {
    int forms = (has_matrices() ? 1 : 0) + (has_gellmann() ? 1 : 0) + (pair.empty() ? 0 : 1) +
                (params.empty() ? 0 : 1);
    if (forms == 0)
      throw InputError("a plane is required: --a/--b, --ga/--gb, --pair, or --params");
    if (forms > 1) throw InputError("give the plane in exactly one form");
    if (has_matrices() && (a_file.empty() || b_file.empty()))
      throw InputError("--a and --b must be given together");
    if (has_gellmann() && (ga.empty() || gb.empty()))
      throw InputError("--ga and --gb must be given together");
  }

  bool is_params() const { return !params.empty(); }

  SectionParams parse_params() const {
    auto v = io::parse_number_list(params, 5);
    return SectionParams::make(v[0], v[1], v[2], v[3], v[4]);
  }

  // Spanning pair for the non---params forms.
  std::pair<Herm3, Herm3> spanning_pair() const {
    if (has_matrices()) {
      Herm3 e = Herm3::from_entries(io::parse_matrix_json(read_file(a_file)));
      Herm3 f = Herm3::from_entries(io::parse_matrix_json(read_file(b_file)));
      return {e, f};
    }
    if (has_gellmann()) {
      auto va = io::parse_number_list(ga, 8);
      auto vb = io::parse_number_list(gb, 8);
      GellMannVector xa{}, xb{};
      for (int i = 0; i < 8; ++i) {
        xa[static_cast<std::size_t>(i)] = va[static_cast<std::size_t>(i)];
        xb[static_cast<std::size_t>(i)] = vb[static_cast<std::size_t>(i)];
      }
      return {from_gellmann(xa), from_gellmann(xb)};
    }
    auto v = io::parse_number_list(pair, 2);
    int i = static_cast<int>(v[0]), j = static_cast<int>(v[1]);
    if (v[0] != i || v[1] != j || i < 1 || i > 8 || j < 1 || j > 8 || i == j)
      throw InputError("--pair wants two distinct integers in 1..8");
    return {gell_mann(i), gell_mann(j)};
  }

  // Canonical parameters of the plane, canonicalizing unless given directly.
  SectionParams resolve_params(double tol) const {
    require_one_form();
    if (is_params()) return parse_params();
    auto [e, f] = spanning_pair();
    return canonicalize(e, f, tol).params;
  }

  // Orthonormal basis of the plane in its given frame (canonical frame for
  // --params).
  SectionPlane resolve_plane() const {
    require_one_form();
    if (is_params()) {
      SectionParams p = parse_params();
      return SectionPlane{canonical_A(), canonical_B(p)};
    }
    auto [e, f] = spanning_pair();
    return orthonormalize_plane(e, f);
  }
};

int g_exit = 0;

void cmd_canonicalize(const PlaneInput& in, double tol, const std::string& json_file) {
  in.require_one_form();
  CanonicalResult r;
  if (in.is_params()) {
    SectionParams p = in.parse_params();
    r = canonicalize(canonical_A(), canonical_B(p), tol);
  } else {
    auto [e, f] = in.spanning_pair();
    r = canonicalize(e, f, tol);
  }
  write_output(json_file, io::canonical_json(r) + "\n");
}

void cmd_classify(const PlaneInput& in, double tol, const std::string& json_file) {
  SectionParams p = in.resolve_params(kDefaultTol);
  ShapeClass s = classify_shape(p, tol);
  write_output(json_file, io::shape_json(s, p) + "\n");
}

void cmd_boundary(const PlaneInput& in, int n, const std::string& csv_file,
                  const std::string& svg_file) {
  SectionParams p = in.resolve_params(kDefaultTol);
  std::vector<BoundarySample> samples = sample_boundary(p, n);
  write_output(csv_file, io::boundary_csv(samples));
  if (!svg_file.empty()) {
    io::SvgPath path;
    path.points.reserve(samples.size());
    for (const BoundarySample& s : samples) path.points.push_back({s.x, s.y});
    std::vector<io::SvgMarker> markers;
    for (const PureContact& c : find_pure_states(p)) {
      double t = raycast(p, c.theta);
      markers.push_back({t * std::cos(c.theta), t * std::sin(c.theta), "#d1242f"});
    }
    write_output(svg_file, io::render_svg({path}, markers, true));
  }
}

void cmd_atlas(const std::string& json_file) {
  write_output(json_file, io::atlas_json_lines(classify_gellmann_atlas()));
}

void cmd_sweep(int n_simplex, int n_phi, const std::string& filter, const std::string& csv_file) {
  SweepSpec spec;
  spec.n_simplex = n_simplex;
  spec.n_phi = n_phi;
  if (!filter.empty()) {
    std::stringstream ss(filter);
    std::string item;
    while (std::getline(ss, item, ',')) spec.filters.push_back(tag_from_name(item));
  }
  std::vector<SectionParams> rows = sweep_parameters(spec);
  std::vector<ShapeClass> shapes(rows.size());
  parallel_for(static_cast<int>(rows.size()),
               [&](int i) { shapes[static_cast<std::size_t>(i)] = classify_shape(rows[static_cast<std::size_t>(i)]); });
  write_output(csv_file, io::sweep_csv(rows, shapes));
}

void cmd_numrange(const std::string& m_file, int n, const std::string& csv_file,
                  const std::string& svg_file) {
  Mat3 m = io::parse_matrix_json(read_file(m_file));
  PlanarRegion region = numerical_range(m, n);
  write_output(csv_file, io::region_csv(region));
  if (!svg_file.empty()) {
    io::SvgPath path;
    path.points = region.boundary;
    write_output(svg_file, io::render_svg({path}, {}, false));
  }
}

void cmd_dual_check(const PlaneInput& in, int random_planes, std::uint64_t seed, int n, double tol,
                    const std::string& json_file) {
  std::string out;
  if (random_planes > 0) {
    if (in.given()) throw InputError("--random replaces the plane inputs; give one or the other");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int t = 0; t < random_planes; ++t) {
      GellMannVector xa{}, xb{};
      for (int i = 0; i < 8; ++i) {
        xa[static_cast<std::size_t>(i)] = gauss(rng);
        xb[static_cast<std::size_t>(i)] = gauss(rng);
      }
      SectionPlane plane = orthonormalize_plane(from_gellmann(xa), from_gellmann(xb));
      DualityReport r = verify_section_projection_duality(plane, n, tol);
      if (!r.pass) g_exit = 1;
      out += io::duality_json(r);
      out += '\n';
    }
  } else {
    DualityReport r = verify_section_projection_duality(in.resolve_plane(), n, tol);
    if (!r.pass) g_exit = 1;
    out = io::duality_json(r) + "\n";
  }
  write_output(json_file, out);
}

void cmd_ball4(int n, std::uint64_t seed, const std::string& json_file) {
  write_output(json_file, io::ball4_json(ball4_check(n, seed)) + "\n");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"2D sections of the qutrit state space: canonical forms, boundary "
               "curves, shape atlas, and section/projection duality"};
  app.require_subcommand(1);

  auto add_json = [](CLI::App& cmd, std::shared_ptr<std::string> file) {
    cmd.add_option("--json", *file, "write JSON here instead of stdout");
  };
  auto add_csv = [](CLI::App& cmd, std::shared_ptr<std::string> file) {
    cmd.add_option("--csv", *file, "write CSV here instead of stdout");
  };

  {
    auto& cmd = *app.add_subcommand("canonicalize",
                                    "reduce a plane to canonical parameters (k,a,b,c,phi)");
    auto in = std::make_shared<PlaneInput>();
    auto tol = std::make_shared<double>(kDefaultTol);
    auto json_file = std::make_shared<std::string>();
    in->attach(cmd);
    cmd.add_option("--tol", *tol, "degeneracy tolerance");
    add_json(cmd, json_file);
    cmd.callback([in, tol, json_file] { cmd_canonicalize(*in, *tol, *json_file); });
  }
  {
    auto& cmd = *app.add_subcommand("classify", "name the shape of a plane's section");
    auto in = std::make_shared<PlaneInput>();
    auto tol = std::make_shared<double>(1e-9);
    auto json_file = std::make_shared<std::string>();
    in->attach(cmd);
    cmd.add_option("--tol", *tol, "classification tolerance");
    add_json(cmd, json_file);
    cmd.callback([in, tol, json_file] { cmd_classify(*in, *tol, *json_file); });
  }
  {
    auto& cmd = *app.add_subcommand("boundary", "sample the section boundary curve");
    auto in = std::make_shared<PlaneInput>();
    auto n = std::make_shared<int>(360);
    auto csv_file = std::make_shared<std::string>();
    auto svg_file = std::make_shared<std::string>();
    in->attach(cmd);
    cmd.add_option("--n", *n, "number of ray directions");
    add_csv(cmd, csv_file);
    cmd.add_option("--svg", *svg_file, "also render the curve (plus pure-state contacts) here");
    cmd.callback([in, n, csv_file, svg_file] { cmd_boundary(*in, *n, *csv_file, *svg_file); });
  }
  {
    auto& cmd = *app.add_subcommand("atlas",
                                    "classify all 28 Gell-Mann basis-pair sections (JSON lines)");
    auto json_file = std::make_shared<std::string>();
    add_json(cmd, json_file);
    cmd.callback([json_file] { cmd_atlas(*json_file); });
  }
  {
    auto& cmd = *app.add_subcommand("sweep", "grid the canonical parameter domain and classify");
    auto n_simplex = std::make_shared<int>(8);
    auto n_phi = std::make_shared<int>(1);
    auto filter = std::make_shared<std::string>();
    auto csv_file = std::make_shared<std::string>();
    cmd.add_option("--n-simplex", *n_simplex, "simplex subdivisions per axis");
    cmd.add_option("--n-phi", *n_phi, "phase samples where all moduli are nonzero");
    cmd.add_option("--filter", *filter, "comma-separated shape tags to keep");
    add_csv(cmd, csv_file);
    cmd.callback([n_simplex, n_phi, filter, csv_file] {
      cmd_sweep(*n_simplex, *n_phi, *filter, *csv_file);
    });
  }
  {
    auto& cmd = *app.add_subcommand("numrange", "numerical range of a 3x3 matrix");
    auto m_file = std::make_shared<std::string>();
    auto n = std::make_shared<int>(360);
    auto csv_file = std::make_shared<std::string>();
    auto svg_file = std::make_shared<std::string>();
    cmd.add_option("--m", *m_file, "matrix, JSON file {\"re\":[[..]],\"im\":[[..]]}")->required();
    cmd.add_option("--n", *n, "number of support directions");
    add_csv(cmd, csv_file);
    cmd.add_option("--svg", *svg_file, "render the boundary polygon here");
    cmd.callback(
        [m_file, n, csv_file, svg_file] { cmd_numrange(*m_file, *n, *csv_file, *svg_file); });
  }
  {
    auto& cmd = *app.add_subcommand(
        "dual-check", "verify polar(section) = projection; exits 1 if any check fails");
    auto in = std::make_shared<PlaneInput>();
    auto random_planes = std::make_shared<int>(0);
    auto seed = std::make_shared<std::uint64_t>(1);
    auto n = std::make_shared<int>(720);
    auto tol = std::make_shared<double>(2e-3);
    auto json_file = std::make_shared<std::string>();
    in->attach(cmd);
    cmd.add_option("--random", *random_planes, "check this many seeded random planes instead");
    cmd.add_option("--seed", *seed, "seed for --random");
    cmd.add_option("--n", *n, "support samples per region");
    cmd.add_option("--tol", *tol, "Hausdorff tolerance");
    add_json(cmd, json_file);
    cmd.callback([in, random_planes, seed, n, tol, json_file] {
      cmd_dual_check(*in, *random_planes, *seed, *n, *tol, *json_file);
    });
  }
  {
    auto& cmd = *app.add_subcommand("ball4",
                                    "measure the radius spread of the {1,2,4,5} quartet section");
    auto n = std::make_shared<int>(1000);
    auto seed = std::make_shared<std::uint64_t>(1);
    auto json_file = std::make_shared<std::string>();
    cmd.add_option("--n", *n, "number of random directions");
    cmd.add_option("--seed", *seed, "direction seed");
    add_json(cmd, json_file);
    cmd.callback([n, seed, json_file] { cmd_ball4(*n, *seed, *json_file); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const qsec::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return g_exit;
}
