#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct CliResult {
  int code = -1;
  std::string out, err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "qlt_cli_tests";
  fs::create_directories(dir);
  return dir;
}

CliResult run_cli(const std::string& args, const std::string& env = "") {
  static int counter = 0;
  const fs::path dir = scratch_dir();
  const fs::path out = dir / ("out" + std::to_string(counter));
  const fs::path err = dir / ("err" + std::to_string(counter));
  ++counter;
  const std::string cmd = env + (env.empty() ? "" : " ") + "\"" QLT_CLI_PATH "\" " + args +
                          " > " + out.string() + " 2> " + err.string();
  const int status = std::system(cmd.c_str());
  CliResult r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

}  // namespace

TEST_CASE("diagnose: classification of the catalog pairs") {
  const CliResult linear = run_cli("diagnose --fixture E3 --point 0,0");
  REQUIRE(linear.code == 0);
  const json doc = json::parse(linear.out);
  CHECK(doc["classification"] == "complex_linear");
  CHECK(doc["lambda"][0].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(doc["lambda"][1].get<double>() == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(doc["zero"]["residual_f"].get<double>() <= 1e-10);

  const CliResult not_linear = run_cli("diagnose --fixture E1 --point 0,0");
  REQUIRE(not_linear.code == 0);
  const json doc2 = json::parse(not_linear.out);
  CHECK(doc2["classification"] == "not_complex_linear");
  CHECK(doc2["defect"].get<double>() >= 0.3);
  CHECK_FALSE(doc2.contains("lambda"));
}

TEST_CASE("diagnose: explicit pair and 3-D slice point") {
  const CliResult r = run_cli(
      "diagnose --f \"(x + i*y)*(1 + z^2)\" --g \"x + i*y\" --vars x,y,z --point 0.001,0,0.5");
  REQUIRE(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["classification"] == "complex_linear");
  // The foot point sits O(dist^2) away along the axis, so lambda moves by ~1e-6.
  CHECK(doc["lambda"][0].get<double>() == doctest::Approx(1.25).epsilon(1e-5));
}

TEST_CASE("limit: formula and empirical table") {
  const CliResult r = run_cli("limit --fixture E1 --path \"t,t\"");
  REQUIRE(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["formula"][0].get<double>() == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(doc["formula"][1].get<double>() == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(doc["discrepancy"].get<double>() <= 1e-8);
  CHECK(doc["table"].size() == 10);
}

TEST_CASE("grid: deterministic across thread counts") {
  const fs::path dir = scratch_dir();
  const std::string base = "grid --fixture E3 --res 40,40 --out ";
  const CliResult one = run_cli(base + (dir / "g1.csv").string(), "QLT_THREADS=1");
  const CliResult four = run_cli(base + (dir / "g4.csv").string(), "QLT_THREADS=4");
  REQUIRE(one.code == 0);
  REQUIRE(four.code == 0);
  const std::string a = slurp(dir / "g1.csv");
  const std::string b = slurp(dir / "g4.csv");
  CHECK(!a.empty());
  CHECK(a == b);
  CHECK(a.substr(0, 18) == "x,y,re,im,method\n-");
}

TEST_CASE("grid: job file mirrors the flags") {
  const fs::path dir = scratch_dir();
  const fs::path jobfile = dir / "job.json";
  {
    std::ofstream out(jobfile);
    out << R"({"fixture": "SELF", "window": [-1, 1, -1, 1], "resolution": [5, 5],
               "format": "csv", "output": ")" << (dir / "job_out.csv").string() << "\"}";
  }
  const CliResult r = run_cli("grid --job " + jobfile.string());
  REQUIRE(r.code == 0);
  const std::string csv = slurp(dir / "job_out.csv");
  CHECK(csv.find("1,1,1,0,direct") != std::string::npos);
}

TEST_CASE("whitney: remainder table") {
  const CliResult r = run_cli("whitney --f \"exp(t)\" --order 2 --points 0,0.5");
  REQUIRE(r.code == 0);
  const json doc = json::parse(r.out);
  REQUIRE(doc["table"].size() == 2);
  CHECK(doc["table"][0]["g"][0][0].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
  const double g1_half = doc["table"][1]["g"][1][0].get<double>();
  CHECK(g1_half == doctest::Approx(4.0 - 2.0 * std::exp(0.5)).epsilon(1e-10));
}

TEST_CASE("zeros: certified list from a seed file") {
  const fs::path dir = scratch_dir();
  const fs::path seeds = dir / "seeds.txt";
  {
    std::ofstream out(seeds);
    out << "# two seeds near the origin\n0.1,-0.05\n0.02,0.03\n";
  }
  const CliResult r = run_cli("zeros --fixture E1 --seeds " + seeds.string());
  REQUIRE(r.code == 0);
  const json doc = json::parse(r.out);
  REQUIRE(doc["zeros"].size() == 2);
  for (const auto& z : doc["zeros"]) {
    CHECK(std::abs(z["location"][0].get<double>()) <= 1e-10);
    CHECK(std::abs(z["location"][1].get<double>()) <= 1e-10);
  }
}

TEST_CASE("zeros: seeds from standard input") {
  const fs::path dir = scratch_dir();
  const fs::path seeds = dir / "stdin_seeds.txt";
  {
    std::ofstream out(seeds);
    out << "0.01,0.02\n";
  }
  CliResult r;
  {
    static int counter = 9000;
    const fs::path outp = dir / ("out" + std::to_string(counter));
    const std::string cmd = std::string("\"") + QLT_CLI_PATH + "\" zeros --fixture SELF --seeds - < " +
                            seeds.string() + " > " + outp.string() + " 2> /dev/null";
    r.code = WEXITSTATUS(std::system(cmd.c_str()));
    r.out = slurp(outp);
  }
  REQUIRE(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["zeros"].size() == 1);
}

TEST_CASE("bumps: tangential curve values") {
  const CliResult r = run_cli("bumps --curve 2 --n 6");
  REQUIRE(r.code == 0);
  const json doc = json::parse(r.out);
  REQUIRE(doc["samples"].size() == 6);
  // Sample k is t = 2^-(k+1); from the third center on the value is exactly 1.
  CHECK(doc["samples"][2]["value"].get<double>() == 1.0);
  CHECK(doc["samples"][5]["value"].get<double>() == 1.0);

  const CliResult axis = run_cli("bumps --curve 0 --n 6");
  REQUIRE(axis.code == 0);
  for (const auto& s : json::parse(axis.out)["samples"])
    CHECK(s["value"].get<double>() == 0.0);
}

TEST_CASE("exit codes: usage errors") {
  CHECK(run_cli("diagnose --fixture NOPE --point 0,0").code == 2);
  CHECK(run_cli("diagnose --point 0,0").code == 2);
  CHECK(run_cli("frobnicate").code == 2);
  CHECK(run_cli("grid --fixture E1 --res 1,1").code == 2);
  CHECK(run_cli("diagnose --fixture E1 --point zero,0").code == 2);
  CHECK(run_cli("").code == 2);
}

TEST_CASE("exit codes: path component count must match the pair dimension") {
  CHECK(run_cli("limit --fixture D3 --path \"t,t\"").code == 2);
}

TEST_CASE("exit codes: numerical failures carry the error name") {
  const CliResult r = run_cli(
      "diagnose --f \"x + i*y\" --g \"x + i*y - 1\" --vars x,y --point 0.1,0");
  CHECK(r.code == 3);
  CHECK(r.err.find("zerofind: NotCommonZero") != std::string::npos);

  const CliResult t = run_cli("limit --fixture D3 --path \"0*t,0*t,t\"");
  CHECK(t.code == 3);
  CHECK(t.err.find("limits: NotTransversal") != std::string::npos);

  // An empty path component is an expression-module error, not a flag error.
  const CliResult s = run_cli("limit --fixture E1 --path \"t,\"");
  CHECK(s.code == 3);
  CHECK(s.err.find("expr: SyntaxError") != std::string::npos);
}

TEST_CASE("QLT_QUAD_ORDER steers the quadrature") {
  // A midpoint rule cannot reproduce g'(0.5) of the exponential remainder.
  const CliResult coarse =
      run_cli("whitney --f \"exp(t)\" --order 2 --points 0.5", "QLT_QUAD_ORDER=1");
  REQUIRE(coarse.code == 0);
  const double g1 = json::parse(coarse.out)["table"][0]["g"][1][0].get<double>();
  const double exact = 4.0 - 2.0 * std::exp(0.5);
  CHECK(std::abs(g1 - exact) > 1e-3);

  const CliResult fine =
      run_cli("whitney --f \"exp(t)\" --order 2 --points 0.5", "QLT_QUAD_ORDER=32");
  const double g1f = json::parse(fine.out)["table"][0]["g"][1][0].get<double>();
  CHECK(std::abs(g1f - exact) <= 1e-10);

  CHECK(run_cli("whitney --f t --order 1 --points 0", "QLT_QUAD_ORDER=junk").code == 2);
}

TEST_CASE("parse errors in expressions map to exit 3 with the error name") {
  const CliResult r = run_cli("diagnose --f \"x + * y\" --g \"x\" --vars x,y --point 0,0");
  CHECK(r.code == 3);
  CHECK(r.err.find("expr: SyntaxError") != std::string::npos);
}
