#include "qlt/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qlt/error.hpp"
#include "qlt/extension.hpp"
#include "qlt/fixtures.hpp"
#include "qlt/grid.hpp"
#include "qlt/limits.hpp"
#include "qlt/whitney.hpp"
#include "qlt/zerofind.hpp"

namespace qlt::cli {

namespace {

using nlohmann::json;

struct PairSpec {
  std::string fixture;
  std::string f_source, g_source;
  std::string vars = "x,y";
};

std::vector<std::string> split_names(const std::string& csv) {
  std::vector<std::string> names;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.erase(0, 1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.pop_back();
    names.push_back(item);
  }
  return names;
}

Vec parse_reals(const std::string& csv, const char* what) {
  Vec values;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw CLI::ValidationError(std::string(what), "'" + item + "' is not a real number");
    }
  }
  if (values.empty()) throw CLI::ValidationError(std::string(what), "expected at least one value");
  return values;
}

// Splits on commas at parenthesis depth zero, so path components may contain
// function calls.
std::vector<std::string> split_exprs(const std::string& src) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char c : src) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

struct ResolvedPair {
  Expr f, g;
  std::string name;
};

ResolvedPair resolve_pair(const PairSpec& spec) {
  if (!spec.fixture.empty()) {
    const FixturePair* p = find_fixture(spec.fixture);
    if (!p) throw CLI::ValidationError("--fixture", "unknown fixture '" + spec.fixture + "'");
    return {p->f, p->g, p->name};
  }
  if (spec.f_source.empty() || spec.g_source.empty())
    throw CLI::ValidationError("--f/--g", "provide either --fixture or both --f and --g");
  const std::vector<std::string> names = split_names(spec.vars);
  return {parse(spec.f_source, names), parse(spec.g_source, names), ""};
}

PathSpec resolve_path(const std::string& path_arg, int dimension) {
  const std::vector<std::string> sources = split_exprs(path_arg);
  if (static_cast<int>(sources.size()) != dimension)
    throw CLI::ValidationError("--path", "expected " + std::to_string(dimension) +
                                             " comma-separated components");
  std::vector<Expr> comps;
  comps.reserve(sources.size());
  for (const std::string& s : sources) comps.push_back(parse(s, {"t"}));
  return make_path(std::move(comps));
}

int env_int(const char* name, int fallback) {
  const char* raw = std::getenv(name);
  if (!raw || !*raw) return fallback;
  try {
    const int v = std::stoi(raw);
    if (v < 1) throw std::invalid_argument(raw);
    return v;
  } catch (const std::exception&) {
    throw CLI::ValidationError(name, std::string("'") + raw + "' is not a positive integer");
  }
}

json complex_json(Complex v) { return json::array({v.real(), v.imag()}); }

json zero_json(const ZeroPoint& z) {
  return json{{"location", z.location},
              {"residual_f", z.residual_f},
              {"residual_g", z.residual_g},
              {"sigma2_f", z.sigma2_f},
              {"sigma2_g", z.sigma2_g},
              {"value_f", complex_json(z.jac_f.value)},
              {"value_g", complex_json(z.jac_g.value)}};
}

json ratio_json(const DerivativeRatio& r) {
  json doc{{"A", json::array({json::array({r.A.m00, r.A.m01}),
                              json::array({r.A.m10, r.A.m11})})},
           {"residual", r.residual},
           {"sigma", json::array({r.sigma.s1, r.sigma.s2})},
           {"det", r.det},
           {"defect", r.classification.defect}};
  if (r.classification.complex_linear) {
    doc["classification"] = "complex_linear";
    doc["lambda"] = complex_json(r.classification.lambda);
  } else {
    doc["classification"] = "not_complex_linear";
  }
  return doc;
}

// ---------------------------------------------------------------------------

void cmd_diagnose(const PairSpec& pair, const std::string& point_csv) {
  const ResolvedPair rp = resolve_pair(pair);
  const Vec point = parse_reals(point_csv, "--point");
  const ZeroPoint z = nearest_zero(rp.f, rp.g, point);
  const DerivativeRatio r = derivative_ratio(z.jac_f, z.jac_g);

  json doc{{"point", point}, {"zero", zero_json(z)}};
  const json rj = ratio_json(r);
  doc.update(rj);
  if (!rp.name.empty()) doc["fixture"] = rp.name;
  std::cout << doc.dump(2) << "\n";
}

void cmd_limit(const PairSpec& pair, const std::string& path_arg) {
  const ResolvedPair rp = resolve_pair(pair);
  const PathSpec path = resolve_path(path_arg, rp.f.dimension());
  const PathLimit formula = path_limit_formula(rp.f, rp.g, path);
  const std::vector<double> samples = default_limit_samples(path.t0);
  const EmpiricalLimit emp = path_limit_empirical(rp.f, rp.g, path, samples);

  json table = json::array();
  for (const LimitSample& s : emp.table)
    table.push_back(json{{"t", s.t}, {"quotient", complex_json(s.quotient)}});
  json doc{{"formula", complex_json(formula.value)},
           {"g_prime", complex_json(formula.g_prime)},
           {"empirical", complex_json(emp.value)},
           {"discrepancy", std::abs(formula.value - emp.value)},
           {"table", table}};
  if (!rp.name.empty()) doc["fixture"] = rp.name;
  std::cout << doc.dump(2) << "\n";
}

void cmd_grid(const PairSpec& pair, const std::string& window_csv,
              const std::string& res_csv, const std::string& slice_csv,
              const std::string& format, const std::string& out_path,
              const std::string& job_path) {
  GridJob job;
  std::string output = out_path;

  if (!job_path.empty()) {
    std::ifstream in(job_path);
    if (!in) throw CLI::ValidationError("--job", "cannot open '" + job_path + "'");
    json doc = json::parse(in);
    PairSpec jp;
    jp.fixture = doc.value("fixture", "");
    jp.f_source = doc.value("f", "");
    jp.g_source = doc.value("g", "");
    if (doc.contains("vars")) {
      std::string csv;
      for (const auto& v : doc["vars"]) csv += (csv.empty() ? "" : ",") + v.get<std::string>();
      jp.vars = csv;
    }
    const ResolvedPair rp = resolve_pair(jp);
    job.f = rp.f;
    job.g = rp.g;
    if (doc.contains("window")) {
      const auto w = doc["window"].get<std::vector<double>>();
      if (w.size() != 4) throw CLI::ValidationError("--job", "window must have 4 entries");
      job.xmin = w[0]; job.xmax = w[1]; job.ymin = w[2]; job.ymax = w[3];
    }
    if (doc.contains("resolution")) {
      const auto r = doc["resolution"].get<std::vector<int>>();
      if (r.size() != 2) throw CLI::ValidationError("--job", "resolution must have 2 entries");
      job.nx = r[0]; job.ny = r[1];
    }
    if (doc.contains("slice")) job.slice = doc["slice"].get<Vec>();
    const std::string fmt = doc.value("format", "csv");
    if (fmt != "csv" && fmt != "json") throw CLI::ValidationError("--job", "format must be csv or json");
    job.format = fmt == "json" ? GridFormat::Json : GridFormat::Csv;
    if (doc.contains("output")) output = doc["output"].get<std::string>();
  } else {
    const ResolvedPair rp = resolve_pair(pair);
    job.f = rp.f;
    job.g = rp.g;
    const Vec w = parse_reals(window_csv, "--window");
    if (w.size() != 4) throw CLI::ValidationError("--window", "expected xmin,xmax,ymin,ymax");
    job.xmin = w[0]; job.xmax = w[1]; job.ymin = w[2]; job.ymax = w[3];
    const Vec r = parse_reals(res_csv, "--res");
    if (r.size() != 2 || r[0] != std::floor(r[0]) || r[1] != std::floor(r[1]))
      throw CLI::ValidationError("--res", "expected integer nx,ny");
    job.nx = static_cast<int>(r[0]);
    job.ny = static_cast<int>(r[1]);
    if (!slice_csv.empty()) job.slice = parse_reals(slice_csv, "--slice");
    if (format != "csv" && format != "json")
      throw CLI::ValidationError("--format", "expected csv or json");
    job.format = format == "json" ? GridFormat::Json : GridFormat::Csv;
  }

  job.quad_order = env_int("QLT_QUAD_ORDER", job.quad_order);
  job.threads = env_int("QLT_THREADS", 0);

  if (output.empty() || output == "-") {
    emit_grid(job, std::cout);
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out) throw CLI::ValidationError("--out", "cannot open '" + output + "' for writing");
    emit_grid(job, out);
  }
}

void cmd_whitney(const std::string& f_source, const std::string& var,
                 int order, const std::string& points_csv) {
  if (order < 1) throw CLI::ValidationError("--order", "order must be >= 1");
  const Function1D f(parse(f_source, {var}));
  const Vec points = parse_reals(points_csv, "--points");
  const int quad = env_int("QLT_QUAD_ORDER", kQuadOrder);

  json table = json::array();
  for (double x : points) {
    const Factor1D fac = factor_1d(f, order, x, quad);
    json row{{"x", x}};
    json derivs = json::array();
    for (const Complex& d : fac.derivatives) derivs.push_back(complex_json(d));
    row["g"] = derivs;
    table.push_back(row);
  }
  json doc{{"f", f_source}, {"order", order}, {"table", table}};
  std::cout << doc.dump(2) << "\n";
}

void cmd_zeros(const PairSpec& pair, const std::string& seeds_path) {
  const ResolvedPair rp = resolve_pair(pair);
  std::ifstream file;
  std::istream* in = &std::cin;
  if (seeds_path != "-") {
    file.open(seeds_path);
    if (!file) throw CLI::ValidationError("--seeds", "cannot open '" + seeds_path + "'");
    in = &file;
  }

  json zeros = json::array();
  std::string line;
  while (std::getline(*in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const Vec seed = parse_reals(line, "--seeds");
    const ZeroPoint z = refine_zero(rp.f, rp.g, seed);
    json entry = zero_json(z);
    entry["seed"] = seed;
    zeros.push_back(entry);
  }
  json doc{{"zeros", zeros}};
  if (!rp.name.empty()) doc["fixture"] = rp.name;
  std::cout << doc.dump(2) << "\n";
}

void cmd_bumps(double curve_a, int truncation) {
  if (truncation < 1) throw CLI::ValidationError("--n", "truncation must be >= 1");
  json samples = json::array();
  for (int k = 1; k <= truncation; ++k) {
    const double t = std::ldexp(1.0, -k);
    const Vec p{t, 0.0, curve_a * std::sqrt(t)};
    samples.push_back(json{{"t", t}, {"value", bump_sum(p, truncation)}});
  }
  json doc{{"curve", curve_a}, {"n", truncation}, {"samples", samples}};
  std::cout << doc.dump(2) << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args) {
  CLI::App app{"Evaluate, classify and continuously extend quotients of "
               "complex-valued functions at their common simple zeros"};
  app.require_subcommand(1);

  PairSpec pair;
  std::string point_csv, path_arg;
  std::string window_csv = "-1,1,-1,1", res_csv = "101,101", slice_csv;
  std::string format = "csv", out_path = "-", job_path;
  std::string whitney_f, whitney_var = "t", points_csv, seeds_path;
  int order = 4, bumps_n = 10;
  double curve_a = 2.0;

  const auto add_pair_flags = [&pair](CLI::App* cmd) {
    cmd->add_option("--fixture", pair.fixture, "built-in pair by name");
    cmd->add_option("--f", pair.f_source, "numerator expression");
    cmd->add_option("--g", pair.g_source, "denominator expression");
    cmd->add_option("--vars", pair.vars, "comma-separated variable names (default x,y)");
  };

  CLI::App* diagnose = app.add_subcommand(
      "diagnose", "certify the nearest common zero and classify the derivative ratio");
  add_pair_flags(diagnose);
  diagnose->add_option("--point", point_csv, "query point, comma-separated reals")->required();

  CLI::App* limit = app.add_subcommand(
      "limit", "directional limit along a path: formula vs. sampled quotients");
  add_pair_flags(limit);
  limit->add_option("--path", path_arg, "path components in t, comma-separated")->required();

  CLI::App* grid = app.add_subcommand("grid", "evaluate the quotient over a 2-D window");
  add_pair_flags(grid);
  grid->add_option("--window", window_csv, "xmin,xmax,ymin,ymax (default -1,1,-1,1)");
  grid->add_option("--res", res_csv, "nx,ny (default 101,101)");
  grid->add_option("--slice", slice_csv, "fixed values for coordinates beyond the first two");
  grid->add_option("--format", format, "csv or json (default csv)");
  grid->add_option("--out", out_path, "output path or - for stdout");
  grid->add_option("--job", job_path, "JSON job description file");

  CLI::App* whitney = app.add_subcommand(
      "whitney", "remainder derivatives of the factorization f(x) = f(0) + x g(x)");
  whitney->add_option("--f", whitney_f, "one-variable expression")->required();
  whitney->add_option("--var", whitney_var, "variable name (default t)");
  whitney->add_option("--order", order, "table covers g^(j) for j < order (default 4)");
  whitney->add_option("--points", points_csv, "evaluation points, comma-separated")->required();

  CLI::App* zeros = app.add_subcommand("zeros", "certify common zeros from a seed list");
  add_pair_flags(zeros);
  zeros->add_option("--seeds", seeds_path, "file with one comma-separated point per line, or -")
      ->required();

  CLI::App* bumps = app.add_subcommand("bumps", "sample the bump-sum field along (t, 0, a sqrt(t))");
  bumps->add_option("--curve", curve_a, "curve parameter a (default 2)");
  bumps->add_option("--n", bumps_n, "truncation of the bump sum (default 10)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    if (diagnose->parsed()) cmd_diagnose(pair, point_csv);
    else if (limit->parsed()) cmd_limit(pair, path_arg);
    else if (grid->parsed())
      cmd_grid(pair, window_csv, res_csv, slice_csv, format, out_path, job_path);
    else if (whitney->parsed()) cmd_whitney(whitney_f, whitney_var, order, points_csv);
    else if (zeros->parsed()) cmd_zeros(pair, seeds_path);
    else if (bumps->parsed()) cmd_bumps(curve_a, bumps_n);
    return 0;
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << e.module() << ": " << e.name() << ": " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args;
  args.reserve(static_cast<std::size_t>(argc > 0 ? argc - 1 : 0));
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args);
}

}  // namespace qlt::cli
