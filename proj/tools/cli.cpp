#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "dunkl/bessel_kingman.hpp"
#include "dunkl/error.hpp"
#include "dunkl/markov.hpp"
#include "dunkl/quadrature.hpp"
#include "dunkl/simulation.hpp"
#include "dunkl/stats.hpp"
#include "dunkl/suites.hpp"
#include "dunkl/transform_mean.hpp"

#ifndef DUNKL_KIT_VERSION
#define DUNKL_KIT_VERSION "0.0.0"
#endif

namespace dunkl::cli {

using nlohmann::json;

namespace {

const std::set<std::string> kCommonKeys{"N", "k", "seed", "tol", "out", "format"};

const std::map<std::string, std::set<std::string>>& command_keys() {
  static const std::map<std::string, std::set<std::string>> keys{
      {"eval", {"function", "x", "y", "s", "alpha", "imaginary"}},
      {"check", {"suite", "paths"}},
      {"simulate", {"process", "times", "paths", "start", "threads"}},
      {"transform", {"function", "a", "center", "R", "nodes", "inverse", "input"}},
      {"convolve", {"a", "b", "nodes", "max_atoms", "frequencies"}},
      {"semigroup", {"type", "params"}}};
  return keys;
}

const std::map<std::string, std::string>& default_format() {
  static const std::map<std::string, std::string> formats{
      {"eval", "csv"},      {"check", "json"},    {"simulate", "csv"},
      {"transform", "csv"}, {"convolve", "json"}, {"semigroup", "json"}};
  return formats;
}

double positive(const json& v, const std::string& what) {
  if (!v.is_number()) throw DomainError(what + " must be a number");
  const double x = v.get<double>();
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError(what + " must be positive");
  return x;
}

const MultiplicityVector& require_k(const RunConfig& c) {
  if (!c.k) throw DomainError(c.command + ": the group spec {\"N\", \"k\"} is required");
  return *c.k;
}

template <class T>
T get_or(const json& p, const char* key, T fallback) {
  if (!p.contains(key)) return fallback;
  try {
    return p.at(key).get<T>();
  } catch (const json::exception&) {
    throw DomainError(std::string("config key '") + key + "' has the wrong type");
  }
}

/// Scalars from an array or {"lo", "hi", "n"}.
std::vector<double> parse_grid(const json& v, const std::string& what) {
  if (v.is_number()) return {v.get<double>()};
  if (v.is_array()) {
    std::vector<double> out;
    for (const json& e : v) {
      if (!e.is_number()) throw DomainError(what + ": expected numbers");
      out.push_back(e.get<double>());
    }
    if (out.empty()) throw DomainError(what + ": empty grid");
    return out;
  }
  if (v.is_object()) {
    for (const auto& [key, val] : v.items())
      if (key != "lo" && key != "hi" && key != "n") throw DomainError(what + ": unknown key '" + key + "'");
    const double lo = get_or(v, "lo", 0.0), hi = get_or(v, "hi", 1.0);
    const int n = get_or(v, "n", 11);
    if (n < 1) throw DomainError(what + ": n must be >= 1");
    std::vector<double> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = n == 1 ? lo : lo + (hi - lo) * i / (n - 1);
    return out;
  }
  throw DomainError(what + ": expected a number, array or {lo, hi, n}");
}

/// Points in R^N; rank one also accepts a scalar grid.
std::vector<Point> parse_points(const json& v, std::size_t n, const std::string& what) {
  if (v.is_array() && !v.empty() && v.front().is_array()) {
    std::vector<Point> out;
    for (const json& e : v) {
      Point p = parse_grid(e, what);
      if (p.size() != n) throw DomainError(what + ": point of wrong dimension");
      out.push_back(std::move(p));
    }
    return out;
  }
  if (n != 1) throw DomainError(what + ": expected an array of " + std::to_string(n) + "-vectors");
  std::vector<Point> out;
  for (double x : parse_grid(v, what)) out.push_back({x});
  return out;
}

std::vector<std::string> coord_names(const std::string& base, std::size_t n) {
  if (n == 1) return {base};
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(base + std::to_string(i));
  return out;
}

json metadata(const RunConfig& c) {
  return {{"tool", "dunkl_kit"}, {"version", DUNKL_KIT_VERSION}, {"config_hash", config_hash(c)},
          {"seed", c.seed}};
}

std::string metadata_line(const RunConfig& c) {
  return "# dunkl_kit " DUNKL_KIT_VERSION " config_hash=" + config_hash(c) + " seed=" + std::to_string(c.seed);
}

/// Writes to --out when set, otherwise to `fallback`.
void emit(const RunConfig& c, std::ostream& fallback, const std::string& text) {
  if (c.out.empty()) {
    fallback << text;
    return;
  }
  std::ofstream file(c.out, std::ios::binary);
  if (!file) throw DomainError("cannot open output file '" + c.out + "'");
  file << text;
  if (!file) throw DomainError("failed writing '" + c.out + "'");
}

/// Rows of numbers as CSV with metadata, or as {"meta", "columns", "rows"}.
std::string table(const RunConfig& c, const std::vector<std::string>& columns,
                  const std::vector<std::vector<double>>& rows) {
  std::ostringstream s;
  if (c.format == "json") {
    json j{{"meta", metadata(c)}, {"columns", columns}, {"rows", rows}};
    s << j.dump(2) << "\n";
    return s.str();
  }
  s << metadata_line(c) << "\n";
  for (std::size_t i = 0; i < columns.size(); ++i) s << (i ? "," : "") << columns[i];
  s << "\n" << std::setprecision(17);
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) s << (i ? "," : "") << row[i];
    s << "\n";
  }
  return s.str();
}

int cmd_eval(const RunConfig& c, std::ostream& out) {
  const json& p = c.params;
  const std::string fn = get_or<std::string>(p, "function", "kernel");
  std::vector<std::vector<double>> rows;
  std::vector<std::string> columns;
  if (fn == "bessel_j") {
    const double alpha = get_or(p, "alpha", 0.5);
    for (double x : parse_grid(p.value("x", json{{"lo", 0.0}, {"hi", 5.0}, {"n", 11}}), "x"))
      rows.push_back({x, bessel_j(BesselIndex(alpha), x)});
    emit(c, out, table(c, {"x", "value"}, rows));
    return kOk;
  }
  const MultiplicityVector& k = require_k(c);
  const json grid = json{{"lo", -2.0}, {"hi", 2.0}, {"n", 5}};
  const auto xs = parse_points(p.value("x", grid), k.dim(), "x");
  const auto ys = parse_points(p.value("y", grid), k.dim(), "y");
  columns = coord_names("x", k.dim());
  for (const auto& name : coord_names("y", k.dim())) columns.push_back(name);
  auto row = [&](const Point& x, const Point& y) {
    std::vector<double> r(x);
    r.insert(r.end(), y.begin(), y.end());
    return r;
  };
  if (fn == "kernel" || fn == "bessel") {
    const bool imaginary = get_or(p, "imaginary", false);
    columns.insert(columns.end(), {"re", "im"});
    for (const Point& x : xs)
      for (const Point& y : ys) {
        ComplexPoint z = to_complex(x);
        if (imaginary)
          for (cplx& v : z) v *= cplx(0.0, 1.0);
        const cplx v = fn == "kernel" ? dunkl_kernel(k, z, to_complex(y)) : generalized_bessel(k, z, to_complex(y));
        auto r = row(x, y);
        r.insert(r.end(), {v.real(), v.imag()});
        rows.push_back(std::move(r));
      }
  } else if (fn == "heat") {
    const double s = positive(p.value("s", json(0.5)), "s");
    columns.push_back("value");
    for (const Point& x : xs)
      for (const Point& y : ys) {
        auto r = row(x, y);
        r.push_back(heat_kernel(k, s, x, y));
        rows.push_back(std::move(r));
      }
  } else {
    throw DomainError("eval: unknown function '" + fn + "' (kernel, bessel, heat, bessel_j)");
  }
  emit(c, out, table(c, columns, rows));
  return kOk;
}

int cmd_check(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const std::string suite = get_or<std::string>(c.params, "suite", "");
  if (suite.empty()) throw DomainError("check: a suite name is required");
  std::vector<std::string> names{suite};
  if (suite == "all") names = suite_names();
  SuiteConfig sc;
  sc.tol = c.tol;
  sc.seed = c.seed;
  sc.paths = get_or<std::size_t>(c.params, "paths", sc.paths);
  if (sc.paths < 100) throw DomainError("check: paths must be >= 100");
  json reports = json::array();
  bool pass = true;
  for (const std::string& name : names) {
    const SuiteReport r = run_suite(name, sc);
    json j = json::parse(report_to_json(r, -1));
    json failing = json::array();
    for (const SuiteCase& sc_case : r.cases)
      if (!sc_case.pass) failing.push_back(sc_case.name);
    if (!failing.empty()) j["failing"] = failing;
    pass = pass && r.pass;
    err << name << ": " << (r.pass ? "pass" : "FAIL") << " (max residual " << r.max_residual << ", "
        << std::fixed << std::setprecision(1) << r.seconds << " s)\n"
        << std::defaultfloat << std::setprecision(6);
    reports.push_back(std::move(j));
  }
  json doc = names.size() == 1 ? reports.front() : json{{"suites", reports}, {"pass", pass}};
  doc["meta"] = metadata(c);
  emit(c, out, doc.dump(2) + "\n");
  return pass ? kOk : kSuiteFailure;
}

int cmd_simulate(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const MultiplicityVector& k = require_k(c);
  const json& p = c.params;
  const std::string process = get_or<std::string>(p, "process", "gaussian");
  ProcessKind kind;
  if (process == "gaussian")
    kind = ProcessKind::Gaussian;
  else if (process == "cauchy")
    kind = ProcessKind::Cauchy;
  else
    throw DomainError("simulate: process must be 'gaussian' or 'cauchy'");
  const std::vector<double> times = parse_grid(p.value("times", json{0.25, 0.5, 0.75, 1.0}), "times");
  const auto n_paths = get_or<std::size_t>(p, "paths", 10000);
  const auto threads = get_or<unsigned>(p, "threads", 0);
  Point start(k.dim(), 0.0);
  if (p.contains("start")) start = parse_points(json::array({p.at("start")}), k.dim(), "start").front();
  if (n_paths == 0) throw DomainError("simulate: paths must be positive");
  const auto paths = simulate_paths(k, kind, times, n_paths, c.seed, start, threads);

  std::ostringstream csv;
  csv << metadata_line(c) << "\n";
  write_paths_csv(csv, paths);
  if (c.format == "json") throw DomainError("simulate: paths are written as csv");
  emit(c, out, csv.str());

  const bool at_origin = std::all_of(start.begin(), start.end(), [](double v) { return v == 0.0; });
  json marginals = json::array();
  const double lambda = k.lambda();
  for (std::size_t i = 0; i < times.size(); ++i) {
    const std::vector<double> radii = radial_marginal(paths, i + 1);
    double sq = 0.0;
    for (double r : radii) sq += r * r;
    json m{{"t", times[i]}, {"mean_abs_sq", sq / static_cast<double>(radii.size())}};
    if (kind == ProcessKind::Gaussian) m["expected_mean_abs_sq"] = 2.0 * (2.0 * k.gamma() + k.dim()) * times[i];
    if (at_origin) {
      const KsResult ks = ks_test(radii, [&](double r) {
        return kind == ProcessKind::Gaussian ? rayleigh_cdf(lambda, times[i], r) : cauchy_cdf(lambda, times[i], r);
      });
      m["ks_statistic"] = ks.statistic;
      m["ks_p_value"] = ks.p_value;
    }
    marginals.push_back(std::move(m));
  }
  const json summary{{"meta", metadata(c)},     {"process", process}, {"k", k.values()},
                     {"paths", n_paths},        {"workers", threads ? threads : worker_count()},
                     {"marginals", marginals}};
  // The summary goes next to the paths, or to stderr when the paths use stdout.
  if (c.out.empty()) {
    err << summary.dump(2) << "\n";
  } else {
    std::ofstream file(c.out + ".summary.json");
    if (!file) throw DomainError("cannot write summary next to '" + c.out + "'");
    file << summary.dump(2) << "\n";
    out << summary.dump(2) << "\n";
  }
  return kOk;
}

int cmd_transform(const RunConfig& c, std::ostream& out) {
  const MultiplicityVector& k = require_k(c);
  const json& p = c.params;
  std::optional<GridFunction> f;
  if (p.contains("input")) {
    const auto path = get_or<std::string>(p, "input", "");
    std::ifstream file(path);
    if (!file) throw DomainError("transform: cannot open '" + path + "'");
    f = GridFunction::read_csv(file);
    if (f->dim() != k.dim()) throw DomainError("transform: input grid dimension does not match N");
  } else {
    const double R = positive(p.value("R", json(8.0)), "R");
    const int nodes = get_or(p, "nodes", 32);
    if (nodes < 4) throw DomainError("transform: nodes must be >= 4");
    const double a = positive(p.value("a", json(1.0)), "a");
    const std::string fn = get_or<std::string>(p, "function", "gaussian");
    Point center(k.dim(), 0.0);
    if (fn == "shifted_gaussian")
      center = parse_points(json::array({p.value("center", json(Point(k.dim(), 0.5)))}), k.dim(), "center").front();
    else if (fn != "gaussian")
      throw DomainError("transform: function must be 'gaussian' or 'shifted_gaussian'");
    f = GridFunction::sample(dunkl_grid(k, R, nodes), [&](const std::vector<double>& x) {
      double q = 0.0;
      for (std::size_t i = 0; i < x.size(); ++i) q += (x[i] - center[i]) * (x[i] - center[i]);
      return cplx(std::exp(-a * q), 0.0);
    });
  }
  const GridFunction g = get_or(p, "inverse", false) ? inverse_dunkl_transform(k, *f) : dunkl_transform(k, *f);
  if (c.format == "json") {
    std::vector<std::vector<double>> rows;
    for (std::size_t i = 0; i < g.size(); ++i) {
      std::vector<double> r = g.point(i);
      r.insert(r.end(), {g.values()[i].real(), g.values()[i].imag()});
      rows.push_back(std::move(r));
    }
    auto columns = coord_names("xi", k.dim());
    columns.insert(columns.end(), {"re", "im"});
    emit(c, out, table(c, columns, rows));
  } else {
    std::ostringstream s;
    s << metadata_line(c) << "\n";
    g.write_csv(s);
    emit(c, out, s.str());
  }
  return kOk;
}

RadialProfileMeasure measure_from_spec(const json& spec, HypergroupIndex idx, const std::string& what) {
  if (!spec.is_object()) throw DomainError(what + ": expected {\"type\": ...}");
  const std::string type = get_or<std::string>(spec, "type", "");
  for (const auto& [key, v] : spec.items())
    if (key != "type" && key != "r" && key != "t") throw DomainError(what + ": unknown key '" + key + "'");
  if (type == "point") {
    const double r = get_or(spec, "r", 0.0);
    if (r < 0.0) throw DomainError(what + ": r must be >= 0");
    return RadialProfileMeasure::point_mass(r, idx.lambda());
  }
  const double t = positive(spec.value("t", json(1.0)), what + ".t");
  if (type == "rayleigh") return rayleigh_semigroup(idx, t);
  if (type == "cauchy") return cauchy_semigroup(idx, t);
  throw DomainError(what + ": type must be point, rayleigh or cauchy");
}

int cmd_convolve(const RunConfig& c, std::ostream& out) {
  const json& p = c.params;
  double lambda = -0.5;
  if (c.k)
    lambda = c.k->lambda();
  else if (p.contains("lambda"))
    lambda = get_or(p, "lambda", -0.5);
  else
    throw DomainError("convolve: give the group spec {\"N\", \"k\"} or lambda");
  const HypergroupIndex idx(lambda);
  if (!p.contains("a") || !p.contains("b")) throw DomainError("convolve: measures 'a' and 'b' are required");
  const RadialProfileMeasure a = measure_from_spec(p.at("a"), idx, "a");
  const RadialProfileMeasure b = measure_from_spec(p.at("b"), idx, "b");
  ConvolveOptions opts;
  opts.nodes = get_or(p, "nodes", opts.nodes);
  opts.max_atoms = get_or(p, "max_atoms", opts.max_atoms);
  const RadialProfileMeasure ab = convolve_measures(idx, a, b, opts);

  json hankel = json::array();
  double residual = 0.0;
  for (double r : parse_grid(p.value("frequencies", json{{"lo", 0.0}, {"hi", 4.0}, {"n", 9}}), "frequencies")) {
    const double lhs = hankel_transform(idx, ab, r);
    const double rhs = hankel_transform(idx, a, r) * hankel_transform(idx, b, r);
    residual = std::max(residual, std::abs(lhs - rhs));
    hankel.push_back({{"r", r}, {"convolution", lhs}, {"product", rhs}});
  }
  if (c.format == "csv") {
    std::vector<std::vector<double>> rows;
    ab.data().for_each_mass([&](double r, double m) { rows.push_back({r, m}); });
    emit(c, out, table(c, {"r", "mass"}, rows));
  } else {
    const json doc{{"meta", metadata(c)},
                   {"lambda", lambda},
                   {"mass", ab.mass()},
                   {"hankel", hankel},
                   {"hankel_residual", residual},
                   {"measure", json::parse(ab.to_json())}};
    emit(c, out, doc.dump(2) + "\n");
  }
  return kOk;
}

int cmd_semigroup(const RunConfig& c, std::ostream& out) {
  const MultiplicityVector& k = require_k(c);
  const std::string type = get_or<std::string>(c.params, "type", "gaussian");
  const json params = c.params.value("params", json::object());
  if (!params.is_object()) throw DomainError("semigroup: params must be an object");
  static const std::set<std::string> allowed{"t", "x", "xi", "pairs", "subordinator", "scale"};
  for (const auto& [key, v] : params.items())
    if (!allowed.count(key)) throw DomainError("semigroup: unknown params key '" + key + "'");

  RadialFamily family;
  if (type == "gaussian") {
    family = gaussian_family(k);
  } else if (type == "cauchy") {
    family = cauchy_family(k);
  } else if (type == "subordinated") {
    const std::string sub = get_or<std::string>(params, "subordinator", "gamma");
    if (sub == "gamma")
      family = gamma_subordinated_family(k, positive(params.value("scale", json(1.0)), "scale"));
    else if (sub == "stable_half")
      family = cauchy_family(k);
    else
      throw DomainError("semigroup: subordinator must be 'gamma' or 'stable_half'");
  } else {
    throw DomainError("semigroup: type must be gaussian, cauchy or subordinated");
  }

  std::mt19937_64 rng(c.seed);
  std::uniform_real_distribution<double> uni(-1.5, 1.5);
  auto random_points = [&](std::size_t n) {
    std::vector<Point> pts(n, Point(k.dim()));
    for (Point& q : pts)
      for (double& v : q) v = uni(rng);
    return pts;
  };
  const std::vector<Point> xs = params.contains("x") ? parse_points(params.at("x"), k.dim(), "x") : random_points(2);
  const std::vector<Point> xis =
      params.contains("xi") ? parse_points(params.at("xi"), k.dim(), "xi") : random_points(2);
  const std::vector<double> times = parse_grid(params.value("t", json{0.5, 1.0}), "t");
  std::vector<std::pair<double, double>> pairs{{0.25, 0.75}, {0.5, 0.5}};
  if (params.contains("pairs")) {
    pairs.clear();
    for (const json& pr : params.at("pairs")) {
      const auto v = parse_grid(pr, "pairs");
      if (v.size() != 2 || v[0] <= 0.0 || v[1] <= 0.0) throw DomainError("semigroup: pairs are [s, t] with s, t > 0");
      pairs.emplace_back(v[0], v[1]);
    }
  }

  const Semigroup S = build_semigroup(k, family);
  const double tol = c.tol.value_or(1e-5);
  json kernels = json::array();
  bool pass = true;
  for (double t : times) {
    if (!(t > 0.0)) throw DomainError("semigroup: times must be positive");
    const MarkovKernelHandle P = S.kernel(t);
    json values = json::array();
    for (const Point& x : xs)
      for (const Point& xi : xis) {
        const cplx v = P.transform(x, xi);
        values.push_back({{"x", x}, {"xi", xi}, {"re", v.real()}, {"im", v.imag()}});
      }
    const double inv = k_invariance_residual(P, xs, xis);
    pass = pass && inv <= tol;
    kernels.push_back({{"t", t}, {"k_invariance_residual", inv}, {"transform", values}});
  }
  json laws = json::array();
  for (auto [s, t] : pairs) {
    const double r = semigroup_law_residual(S, s, t, xs, xis);
    pass = pass && r <= tol;
    laws.push_back({{"s", s}, {"t", t}, {"residual", r}});
  }
  const json doc{{"meta", metadata(c)}, {"type", type},       {"k", k.values()},  {"tolerance", tol},
                 {"kernels", kernels},  {"semigroup_law", laws}, {"pass", pass}};
  emit(c, out, doc.dump(2) + "\n");
  return pass ? kOk : kSuiteFailure;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

RunConfig parse_config(const std::string& command, const json& doc) {
  const auto keys = command_keys().find(command);
  if (keys == command_keys().end()) throw DomainError("unknown command '" + command + "'");
  if (!doc.is_object()) throw DomainError("config must be a JSON object");
  RunConfig c;
  c.command = command;
  for (const auto& [key, v] : doc.items()) {
    const bool common = kCommonKeys.count(key) > 0;
    const bool specific = keys->second.count(key) > 0 || (command == "convolve" && key == "lambda");
    if (!common && !specific) throw DomainError("unknown config key '" + key + "' for " + command);
    if (specific) c.params[key] = v;
  }
  if (doc.contains("k")) {
    json group{{"k", doc.at("k")}};
    if (doc.contains("N")) group["N"] = doc.at("N");
    c.k = MultiplicityVector::from_json(group.dump());
  } else if (doc.contains("N")) {
    throw DomainError("config gives N without k");
  }
  if (doc.contains("seed")) {
    const json& s = doc.at("seed");
    if (!s.is_number_integer() || s.get<long long>() < 0) throw DomainError("seed must be a nonnegative integer");
    c.seed = s.get<std::uint64_t>();
  }
  if (doc.contains("tol")) c.tol = positive(doc.at("tol"), "tol");
  c.out = get_or<std::string>(doc, "out", "");
  c.format = get_or<std::string>(doc, "format", default_format().at(command));
  if (c.format != "csv" && c.format != "json") throw DomainError("format must be csv or json");
  return c;
}

std::string config_hash(const RunConfig& c) {
  json j{{"command", c.command}, {"params", c.params}, {"seed", c.seed}, {"format", c.format}};
  if (c.k) j["k"] = c.k->values();
  if (c.tol) j["tol"] = *c.tol;
  std::ostringstream s;
  s << std::hex << std::setw(16) << std::setfill('0') << fnv1a(j.dump());
  return s.str();
}

int execute(const RunConfig& c, std::ostream& out, std::ostream& err) {
  if (c.command == "eval") return cmd_eval(c, out);
  if (c.command == "check") return cmd_check(c, out, err);
  if (c.command == "simulate") return cmd_simulate(c, out, err);
  if (c.command == "transform") return cmd_transform(c, out);
  if (c.command == "convolve") return cmd_convolve(c, out);
  if (c.command == "semigroup") return cmd_semigroup(c, out);
  throw DomainError("unknown command '" + c.command + "'");
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dunkl analysis toolkit for Z2^N reflection groups", "dunkl_kit"};
  app.set_version_flag("--version", DUNKL_KIT_VERSION);
  app.require_subcommand(1);
  std::string config_arg, out_path, format;
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;
  app.add_option("--config", config_arg, "JSON config file, or an inline JSON object");
  app.add_option("--out", out_path, "Output file (default stdout)");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--seed", seed, "Random seed");
  app.add_option("--tol", tol, "Tolerance override (> 0)");

  std::string positional;
  const std::map<std::string, std::pair<std::string, std::string>> subcommands{
      {"eval", {"Evaluate kernels, Bessel functions and heat kernels on grids", "function"}},
      {"check", {"Run a named identity suite, or 'all'", "suite"}},
      {"simulate", {"Simulate k-Gaussian or k-Cauchy paths", "process"}},
      {"transform", {"Dunkl transform of a sampled function", "function"}},
      {"convolve", {"Bessel-Kingman convolution of radial measures", ""}},
      {"semigroup", {"Build and verify a k-invariant Markov semigroup", "type"}}};
  for (const auto& [name, info] : subcommands) {
    CLI::App* sub = app.add_subcommand(name, info.first)->fallthrough();
    if (!info.second.empty()) sub->add_option(info.second, positional, info.second);
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << DUNKL_KIT_VERSION << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  try {
    json doc = json::object();
    if (!config_arg.empty()) {
      if (config_arg.front() == '{') {
        doc = json::parse(config_arg);
      } else {
        std::ifstream file(config_arg);
        if (!file) throw DomainError("cannot open config '" + config_arg + "'");
        doc = json::parse(file);
      }
    }
    if (!doc.is_object()) throw DomainError("config must be a JSON object");
    if (!positional.empty()) doc[subcommands.at(command).second] = positional;
    if (!out_path.empty()) doc["out"] = out_path;
    if (!format.empty()) doc["format"] = format;
    if (seed) doc["seed"] = *seed;
    if (tol) doc["tol"] = *tol;
    return execute(parse_config(command, doc), out, err);
  } catch (const json::exception& e) {
    err << "error: config: " << e.what() << "\n";
    return kConfigError;
  } catch (const NumericalError& e) {
    err << "error: numerical: " << e.what() << "\n";
    return kNumericalError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  }
}

}  // namespace dunkl::cli
