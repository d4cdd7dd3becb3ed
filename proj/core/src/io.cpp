#include "qsec/io.hpp"

#include <cctype>
#include <cstdio>
#include <json.hpp>
#include <sstream>

#include "qsec/errors.hpp"

namespace qsec::io {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

ordered_json matrix_node(const Mat3& m) {
  ordered_json re = ordered_json::array();
  ordered_json im = ordered_json::array();
  for (int i = 0; i < 3; ++i) {
    ordered_json rrow = ordered_json::array();
    ordered_json irow = ordered_json::array();
    for (int j = 0; j < 3; ++j) {
      rrow.push_back(m(i, j).real());
      irow.push_back(m(i, j).imag());
    }
    re.push_back(rrow);
    im.push_back(irow);
  }
  return ordered_json{{"re", re}, {"im", im}};
}

ordered_json params_node(const SectionParams& p) {
  return ordered_json{{"k", p.k}, {"a", p.a}, {"b", p.b}, {"c", p.c}, {"phi", p.phi}};
}

ordered_json shape_node(const ShapeClass& s) {
  return ordered_json{{"tag", shape_name(s.tag)},
                      {"pure_contacts", s.pure_contacts},
                      {"has_segment", s.has_segment}};
}

}  // namespace

Mat3 parse_matrix_json(const std::string& text) {
  ordered_json j = ordered_json::parse(text, nullptr, false);
  if (j.is_discarded()) throw InputError("malformed JSON matrix");
  if (!j.is_object() || !j.contains("re")) throw InputError("JSON matrix needs a \"re\" field");

  auto read_grid = [](const ordered_json& node, const char* name) {
    std::array<std::array<double, 3>, 3> grid{};
    if (!node.is_array() || node.size() != 3)
      throw InputError(std::string(name) + " must be a 3x3 array");
    for (int i = 0; i < 3; ++i) {
      const auto& row = node[static_cast<std::size_t>(i)];
      if (!row.is_array() || row.size() != 3)
        throw InputError(std::string(name) + " must be a 3x3 array");
      for (int jj = 0; jj < 3; ++jj) {
        const auto& cell = row[static_cast<std::size_t>(jj)];
        if (!cell.is_number()) throw InputError(std::string(name) + " entries must be numbers");
        grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(jj)] = cell.get<double>();
      }
    }
    return grid;
  };

  auto re = read_grid(j["re"], "re");
  std::array<std::array<double, 3>, 3> im{};
  if (j.contains("im")) im = read_grid(j["im"], "im");

  Mat3 m{};
  for (int i = 0; i < 3; ++i)
    for (int jj = 0; jj < 3; ++jj)
      m(i, jj) = cplx(re[static_cast<std::size_t>(i)][static_cast<std::size_t>(jj)],
                      im[static_cast<std::size_t>(i)][static_cast<std::size_t>(jj)]);
  return m;
}

std::string matrix_json(const Mat3& m) { return matrix_node(m).dump(); }

std::vector<double> parse_number_list(const std::string& text, std::size_t n) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      double v = std::stod(item, &used);
      while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
      if (used != item.size()) throw InputError("trailing characters in number list");
      out.push_back(v);
    } catch (const InputError&) {
      throw;
    } catch (const std::exception&) {
      throw InputError("expected a comma-separated list of numbers, got \"" + text + "\"");
    }
  }
  if (out.size() != n)
    throw InputError("expected " + std::to_string(n) + " comma-separated numbers, got " +
                     std::to_string(out.size()));
  return out;
}

std::string params_json(const SectionParams& p) { return params_node(p).dump(); }

std::string shape_json(const ShapeClass& s, const SectionParams& p) {
  ordered_json j = shape_node(s);
  j["params"] = params_node(p);
  return j.dump();
}

std::string canonical_json(const CanonicalResult& r) {
  ordered_json cands = ordered_json::array();
  for (const SectionParams& c : r.candidates) cands.push_back(params_node(c));
  ordered_json j{{"params", params_node(r.params)},
                 {"candidates", cands},
                 {"A_std", matrix_node(r.A_std.mat())},
                 {"B_std", matrix_node(r.B_std.mat())},
                 {"U", matrix_node(r.U)}};
  return j.dump();
}

std::string atlas_json_lines(const std::vector<AtlasEntry>& entries) {
  std::string out;
  for (const AtlasEntry& e : entries) {
    ordered_json j{{"pair", ordered_json::array({e.i, e.j})},
                   {"group", atlas_group_name(e.group)},
                   {"params", params_node(e.params)},
                   {"shape", shape_node(e.shape)}};
    out += j.dump();
    out += '\n';
  }
  return out;
}

std::string duality_json(const DualityReport& r) {
  ordered_json j{{"hausdorff", r.hausdorff}, {"tol", r.tol}, {"pass", r.pass}};
  return j.dump();
}

std::string ball4_json(const Ball4Report& r) {
  ordered_json j{{"n", r.n},      {"t_min", r.t_min},     {"t_max", r.t_max},
                 {"radius", r.radius}, {"round", r.round}, {"verdict", r.verdict},
                 {"note", r.note}};
  return j.dump();
}

std::string boundary_csv(const std::vector<BoundarySample>& samples) {
  std::string out = "theta,t,x,y\n";
  for (const BoundarySample& s : samples) {
    out += format_double(s.theta);
    out += ',';
    out += format_double(s.t);
    out += ',';
    out += format_double(s.x);
    out += ',';
    out += format_double(s.y);
    out += '\n';
  }
  return out;
}

std::string region_csv(const PlanarRegion& region) {
  std::string out = "x,y\n";
  for (const auto& p : region.boundary) {
    out += format_double(p[0]);
    out += ',';
    out += format_double(p[1]);
    out += '\n';
  }
  return out;
}

std::string sweep_csv(const std::vector<SectionParams>& params,
                      const std::vector<ShapeClass>& shapes) {
  if (params.size() != shapes.size())
    throw InputError("sweep rows and classifications differ in length");
  std::string out = "k,a,b,c,phi,shape_tag,pure_contacts\n";
  for (std::size_t i = 0; i < params.size(); ++i) {
    const SectionParams& p = params[i];
    out += format_double(p.k);
    out += ',';
    out += format_double(p.a);
    out += ',';
    out += format_double(p.b);
    out += ',';
    out += format_double(p.c);
    out += ',';
    out += format_double(p.phi);
    out += ',';
    out += shape_name(shapes[i].tag);
    out += ',';
    out += std::to_string(shapes[i].pure_contacts);
    out += '\n';
  }
  return out;
}

namespace {

constexpr double kView = 0.65;   // half-width of the data viewport
constexpr double kSize = 520.0;  // pixel size of the square canvas

double px(double x) { return (x + kView) * kSize / (2 * kView); }
double py(double y) { return (kView - y) * kSize / (2 * kView); }

std::string coord(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

std::string render_svg(const std::vector<SvgPath>& paths, const std::vector<SvgMarker>& markers,
                       bool reference_circles) {
  std::string s;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"520\" height=\"520\" "
       "viewBox=\"0 0 520 520\">\n";
  s += "<rect width=\"520\" height=\"520\" fill=\"white\"/>\n";
  if (reference_circles) {
    double r_out = 0.5773502691896258 * kSize / (2 * kView);
    double r_in = 0.28867513459481287 * kSize / (2 * kView);
    s += "<circle cx=\"260\" cy=\"260\" r=\"" + coord(r_out) +
         "\" fill=\"none\" stroke=\"#999\" stroke-dasharray=\"6 4\"/>\n";
    s += "<circle cx=\"260\" cy=\"260\" r=\"" + coord(r_in) +
         "\" fill=\"none\" stroke=\"#bbb\" stroke-dasharray=\"3 4\"/>\n";
    s += "<line x1=\"0\" y1=\"260\" x2=\"520\" y2=\"260\" stroke=\"#eee\"/>\n";
    s += "<line x1=\"260\" y1=\"0\" x2=\"260\" y2=\"520\" stroke=\"#eee\"/>\n";
  }
  for (const SvgPath& path : paths) {
    if (path.points.empty()) continue;
    s += path.closed ? "<polygon points=\"" : "<polyline points=\"";
    for (const auto& p : path.points) {
      s += coord(px(p[0]));
      s += ',';
      s += coord(py(p[1]));
      s += ' ';
    }
    if (s.back() == ' ') s.pop_back();
    s += "\" fill=\"none\" stroke=\"" + path.color + "\" stroke-width=\"1.5\"/>\n";
  }
  for (const SvgMarker& m : markers) {
    s += "<circle cx=\"" + coord(px(m.x)) + "\" cy=\"" + coord(py(m.y)) +
         "\" r=\"4\" fill=\"" + m.color + "\"/>\n";
  }
  s += "</svg>\n";
  return s;
}

}  // namespace qsec::io
