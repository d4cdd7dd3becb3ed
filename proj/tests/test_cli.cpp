#include <doctest.h>
#include <json.hpp>
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

// Exercises the installed-style binary end to end: QSEC_CLI_PATH is injected
// by the build as the path of the qsec executable.

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  std::string stem = "cli_capture_" + std::to_string(counter++);
  std::string out_file = stem + ".out", err_file = stem + ".err";
  std::string cmd = std::string(QSEC_CLI_PATH) + " " + args + " >" + out_file + " 2>" + err_file;
  int rc = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  r.out = slurp(out_file);
  r.err = slurp(err_file);
  std::remove(out_file.c_str());
  std::remove(err_file.c_str());
  return r;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line))
    if (!line.empty()) lines.push_back(line);
  return lines;
}

std::string params_flag(const nlohmann::json& p) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g", p["k"].get<double>(),
                p["a"].get<double>(), p["b"].get<double>(), p["c"].get<double>(),
                p["phi"].get<double>());
  return buf;
}

}  // namespace

TEST_CASE("classify: canonical disk params") {
  RunResult r = run_cli("classify --params 0,1,0,0,0");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["tag"] == "CircularDisk");
  CHECK(j["pure_contacts"] == 0);
  CHECK(j["has_segment"] == false);
  CHECK(j["params"]["a"].get<double>() == 1.0);
}

TEST_CASE("atlas: 28 lines with the expected group census") {
  RunResult r = run_cli("atlas");
  CHECK(r.exit_code == 0);
  auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 28);
  int disk1 = 0, disk2 = 0, parabola = 0, triangle = 0, ellipse = 0;
  for (const std::string& line : lines) {
    auto j = nlohmann::json::parse(line);
    std::string g = j["group"].get<std::string>();
    if (g == "DiskI") ++disk1;
    if (g == "DiskII") ++disk2;
    if (g == "Parabola") ++parabola;
    if (g == "Triangle") ++triangle;
    if (g == "Ellipse") ++ellipse;
  }
  CHECK(disk1 == 5);
  CHECK(disk2 == 12);
  CHECK(parabola == 4);
  CHECK(triangle == 3);
  CHECK(ellipse == 4);
}

TEST_CASE("boundary: CSV body plus SVG render") {
  RunResult r = run_cli("boundary --params 0.57735026918962573,0,0,0,0 --n 12 --svg cli_tri.svg");
  CHECK(r.exit_code == 0);
  auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 13);
  CHECK(lines[0] == "theta,t,x,y");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    double theta, t, x, y;
    REQUIRE(std::sscanf(lines[i].c_str(), "%lf,%lf,%lf,%lf", &theta, &t, &x, &y) == 4);
    CHECK(t >= 0.28867513459481287 - 1e-9);
    CHECK(t <= 0.57735026918962573 + 1e-9);
  }
  std::string svg = slurp("cli_tri.svg");
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("<polygon") != std::string::npos);
  // three pure-state corners marked
  CHECK(std::count(svg.begin(), svg.end(), '\n') > 5);
  int markers = 0;
  for (std::size_t pos = 0; (pos = svg.find("fill=\"#d1242f\"", pos)) != std::string::npos; ++pos)
    ++markers;
  CHECK(markers == 3);
  std::remove("cli_tri.svg");
}

TEST_CASE("canonicalize: basis pair (3,4) keeps both equivalent tuples") {
  RunResult r = run_cli("canonicalize --pair 3,4");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["candidates"].size() == 2);
  CHECK(j["params"]["b"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(j["A_std"]["re"][0][0].get<double>() == 1.0);
  CHECK(j["U"]["re"].size() == 3);
}

TEST_CASE("round trip: canonicalize output classifies like the original plane") {
  const std::string ga = "0.3,-0.2,0.5,0.1,-0.4,0.2,0.7,-0.1";
  const std::string gb = "-0.1,0.4,0.2,-0.3,0.6,0.1,-0.2,0.5";
  RunResult canon = run_cli("canonicalize --ga " + ga + " --gb " + gb);
  REQUIRE(canon.exit_code == 0);
  auto j = nlohmann::json::parse(canon.out);
  RunResult via_params = run_cli("classify --params " + params_flag(j["params"]));
  RunResult direct = run_cli("classify --ga " + ga + " --gb " + gb);
  CHECK(via_params.exit_code == 0);
  CHECK(direct.exit_code == 0);
  CHECK(via_params.out == direct.out);
}

TEST_CASE("determinism: repeated invocations are byte-identical") {
  CHECK(run_cli("atlas").out == run_cli("atlas").out);
  std::string d1 = run_cli("dual-check --random 2 --seed 9 --n 256").out;
  std::string d2 = run_cli("dual-check --random 2 --seed 9 --n 256").out;
  CHECK(!d1.empty());
  CHECK(d1 == d2);
  std::string s1 = run_cli("sweep --n-simplex 4").out;
  std::string s2 = run_cli("sweep --n-simplex 4").out;
  CHECK(!s1.empty());
  CHECK(s1 == s2);
}

TEST_CASE("sweep: filter keeps only the requested tags") {
  RunResult r = run_cli("sweep --n-simplex 6 --filter Triangle,ParabolaChord");
  CHECK(r.exit_code == 0);
  auto lines = lines_of(r.out);
  REQUIRE(lines.size() > 1);
  CHECK(lines[0] == "k,a,b,c,phi,shape_tag,pure_contacts");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    bool tri = lines[i].find(",Triangle,") != std::string::npos;
    bool par = lines[i].find(",ParabolaChord,") != std::string::npos;
    CHECK((tri || par));
  }
}

TEST_CASE("dual-check: named plane passes and reports") {
  RunResult r = run_cli("dual-check --pair 1,2");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["pass"] == true);
  CHECK(j["hausdorff"].get<double>() < 2e-3);
}

TEST_CASE("ball4: quartet section reports round") {
  RunResult r = run_cli("ball4 --n 64 --seed 3");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["round"] == true);
  CHECK(j["verdict"] == "round, radius 1/3");
  CHECK(j["radius"].get<double>() == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
  CHECK(j["note"].get<std::string>().find("1/sqrt(6)") != std::string::npos);
}

TEST_CASE("numrange: matrix file in, region CSV out") {
  {
    std::ofstream f("cli_nr.json");
    f << R"({"re": [[0,0,0],[0,1,0],[0,0,0]], "im": [[0,0,0],[0,0,0],[0,0,1]]})";
  }
  RunResult r = run_cli("numrange --m cli_nr.json --n 90");
  CHECK(r.exit_code == 0);
  auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 91);
  CHECK(lines[0] == "x,y");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    double x, y;
    REQUIRE(std::sscanf(lines[i].c_str(), "%lf,%lf", &x, &y) == 2);
    CHECK(x >= -1e-9);
    CHECK(x <= 1 + 1e-9);
    CHECK(y >= -1e-9);
    CHECK(y <= 1 + 1e-9);
    CHECK(x + y <= 1 + 1e-9);  // hull of eigenvalues {0, 1, i}
  }
  std::remove("cli_nr.json");
}

TEST_CASE("validation failures exit 2 with a diagnostic") {
  RunResult bad_params = run_cli("classify --params 1,1,1,1,1");
  CHECK(bad_params.exit_code == 2);
  CHECK(!bad_params.err.empty());

  CHECK(run_cli("classify").exit_code == 2);                       // no plane given
  CHECK(run_cli("classify --params 0,1,0,0,0 --pair 1,2").exit_code == 2);
  CHECK(run_cli("boundary --pair 1,9").exit_code == 2);            // index out of range
  CHECK(run_cli("boundary --pair 1,2 --bogus").exit_code == 2);    // unknown flag
  CHECK(run_cli("numrange --n 32").exit_code == 2);                // missing required --m
  CHECK(run_cli("canonicalize --a cli_absent.json --b cli_absent.json").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);                               // subcommand required
  CHECK(run_cli("sweep --filter NoSuchShape").exit_code == 2);

  // dependent span is an input failure, not a crash
  RunResult dep = run_cli("canonicalize --ga 1,0,0,0,0,0,0,0 --gb 2,0,0,0,0,0,0,0");
  CHECK(dep.exit_code == 2);
  CHECK(!dep.err.empty());
}

TEST_CASE("file output: --json/--csv write files instead of stdout") {
  RunResult r = run_cli("classify --pair 1,8 --json cli_shape.json");
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());
  auto j = nlohmann::json::parse(slurp("cli_shape.json"));
  CHECK(j["tag"] == "Triangle");
  CHECK(j["pure_contacts"] == 3);
  std::remove("cli_shape.json");

  RunResult b = run_cli("boundary --pair 1,2 --n 8 --csv cli_b.csv");
  CHECK(b.exit_code == 0);
  CHECK(b.out.empty());
  CHECK(slurp("cli_b.csv").rfind("theta,t,x,y\n", 0) == 0);
  std::remove("cli_b.csv");
}
