#include "commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "circdiff/errors.hpp"
#include "circdiff/geometry.hpp"
#include "circdiff/io.hpp"
#include "circdiff/projective.hpp"
#include "circdiff/schwarzian.hpp"
#include "circdiff/suites.hpp"
#include "circdiff/virasoro.hpp"

namespace circdiff::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  std::size_t grid = kDefaultGridSize;
  double eps0 = ExtrapolationConfig{}.eps0;
  int levels = ExtrapolationConfig{}.levels;
  std::uint64_t seed = kDefaultSeed;
  std::string format = "json";
  std::string structure = "torus";
  std::string output;

  std::string input = "-";
  std::string second;
  std::string variant = "modified";
  std::string suite;
  std::string kind = "curved";
  std::string base = "curved";
  double charge = 1.0;
  bool flat = false;
  double theta = 0.0;
  double band = kDiagonalGuard;
};

// Shortest representation that round-trips; keeps output byte-stable.
std::string num(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string read_text(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

ExtrapolationConfig extrapolation(const Options& o) { return {o.eps0, o.levels}; }

void check_grid(std::size_t n) {
  if (n < 64 || n % 2 != 0) throw InvalidInput("--grid must be even and at least 64");
}

json header(const char* command) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  return j;
}

void csv_header(std::ostringstream& s, const char* columns) {
  s << "# schema_version=" << kSchemaVersion << "\n" << columns << "\n";
}

std::string cmd_schwarzian(const Options& o, std::istream& in) {
  check_grid(o.grid);
  const CircleDiffeo d = diffeo_from_json(read_text(o.input, in));
  const ProjectiveStructure s = structure_from_name(o.structure);
  const QuadraticDifferential q = o.variant == "classical"  ? schwarzian_classical(d, o.grid)
                                  : o.variant == "modified" ? schwarzian_modified(d, o.grid)
                                                            : schwarzian_universal(d, s, o.grid);
  const PeriodicSamples& v = q.samples();

  if (o.format == "csv") {
    std::ostringstream out;
    csv_header(out, "theta,value");
    for (std::size_t k = 0; k < v.size(); ++k) out << num(v.theta(k)) << "," << num(v[k]) << "\n";
    return out.str();
  }
  json j = header("schwarzian");
  j["variant"] = o.variant;
  j["structure"] = o.structure;
  j["grid"] = o.grid;
  j["max_abs"] = q.sup_norm();
  json theta = json::array(), value = json::array();
  for (std::size_t k = 0; k < v.size(); ++k) {
    theta.push_back(v.theta(k));
    value.push_back(v[k]);
  }
  j["theta"] = std::move(theta);
  j["value"] = std::move(value);
  return j.dump(2) + "\n";
}

std::string cmd_verify(const Options& o, int& code) {
  check_grid(o.grid);
  const SuiteReport r = run_suite(o.suite, {o.grid, extrapolation(o), o.seed});
  code = r.pass() ? kOk : kVerifyFailed;

  if (o.format == "csv") {
    std::ostringstream out;
    csv_header(out, "suite,check,identity,measured,comparison,bound,pass");
    for (const CheckResult& c : r.checks) {
      out << r.suite << "," << c.name << ",\"" << c.identity << "\"," << num(c.measured) << ","
          << (c.at_least ? ">=" : "<=") << "," << num(c.bound) << "," << (c.pass ? "PASS" : "FAIL")
          << "\n";
    }
    return out.str();
  }
  json j = header("verify");
  j["suite"] = r.suite;
  j["seed"] = o.seed;
  j["grid"] = o.grid;
  j["pass"] = r.pass();
  json checks = json::array();
  for (const CheckResult& c : r.checks) {
    checks.push_back({{"name", c.name},
                      {"identity", c.identity},
                      {"measured", c.measured},
                      {"comparison", c.at_least ? ">=" : "<="},
                      {"bound", c.bound},
                      {"pass", c.pass}});
  }
  j["checks"] = std::move(checks);
  return j.dump(2) + "\n";
}

NullMetric metric_kind(const Options& o, std::istream& in) {
  auto base = [&](const std::string& name) {
    if (name == "flat") return NullMetric::flat();
    return NullMetric::curved(o.charge);
  };
  if (o.kind == "pullback") return NullMetric::pullback(base(o.base), diffeo_from_json(read_text(o.input, in)));
  return base(o.kind);
}

std::string cmd_metric_map(const Options& o, std::istream& in) {
  if (o.grid < 2) throw InvalidInput("--grid must be at least 2");
  const NullMetric g = metric_kind(o, in);
  const std::size_t n = o.grid;

  // Masked cells carry no value: "nan" in CSV, null in JSON. Flat-based metrics are
  // regular on the diagonal and are never masked.
  const bool mask = g.singular_on_diagonal();
  auto cell = [&](std::size_t i, std::size_t j) -> std::optional<double> {
    const double t1 = PeriodicSamples::node(i, n);
    const double t2 = PeriodicSamples::node(j, n);
    if (mask && std::abs(std::remainder(t1 - t2, kTwoPi)) <= o.band) return std::nullopt;
    try {
      return metric_eval(g, t1, t2);
    } catch (const DiagonalProximity&) {
      return std::nullopt;
    }
  };

  if (o.format == "csv") {
    std::ostringstream out;
    csv_header(out, "theta1,theta2,value");
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const auto v = cell(i, j);
        out << num(PeriodicSamples::node(i, n)) << "," << num(PeriodicSamples::node(j, n)) << ","
            << (v ? num(*v) : "nan") << "\n";
      }
    }
    return out.str();
  }
  json j = header("metric-map");
  j["kind"] = o.kind;
  if (o.kind == "pullback") j["base"] = o.base;
  j["charge"] = g.charge();
  j["grid"] = n;
  json rows = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < n; ++k) {
      const auto v = cell(i, k);
      row.push_back(v ? json(*v) : json(nullptr));
    }
    rows.push_back(std::move(row));
  }
  j["values"] = std::move(rows);
  return j.dump() + "\n";
}

std::string cmd_cartan(const Options& o, std::istream& in) {
  const CircleDiffeo d = diffeo_from_json(read_text(o.input, in));
  const ProjectiveStructure s = structure_from_name(o.structure);
  const double reference = schwarzian_universal(d, s, o.grid)(o.theta);
  const CartanConvergence c = cartan_convergence(d, s, o.theta, o.eps0, o.levels, reference);

  if (o.format == "csv") {
    std::ostringstream out;
    csv_header(out, "eps,estimate,error");
    for (std::size_t k = 0; k < c.eps.size(); ++k) {
      out << num(c.eps[k]) << "," << num(c.estimates[k]) << "," << num(c.errors[k]) << "\n";
    }
    return out.str();
  }
  json j = header("cartan-estimate");
  j["structure"] = o.structure;
  j["theta"] = o.theta;
  j["reference"] = reference;
  j["eps"] = c.eps;
  j["estimates"] = c.estimates;
  j["errors"] = c.errors;
  j["order"] = c.order;
  return j.dump(2) + "\n";
}

std::string cmd_bott_thurston(const Options& o, std::istream& in) {
  check_grid(o.grid);
  if (o.input == "-" && o.second == "-") throw InvalidInput("only one of the two inputs may be stdin");
  const CircleDiffeo d1 = diffeo_from_json(read_text(o.input, in));
  const CircleDiffeo d2 = diffeo_from_json(read_text(o.second, in));
  const double value = bott_thurston(d1, d2, o.grid);

  if (o.format == "csv") {
    std::ostringstream out;
    csv_header(out, "value");
    out << num(value) << "\n";
    return out.str();
  }
  json j = header("bott-thurston");
  j["grid"] = o.grid;
  j["value"] = value;
  return j.dump(2) + "\n";
}

std::string cmd_orbit_point(const Options& o, std::istream& in) {
  check_grid(o.grid);
  const CircleDiffeo d = diffeo_from_json(read_text(o.input, in));
  const OrbitPoint p = momentum_map(d, o.flat ? OrbitCharge::flat() : OrbitCharge::curved(o.charge), o.grid);

  if (o.format == "csv") {
    std::ostringstream out;
    csv_header(out, "theta,value");
    const PeriodicSamples& v = p.q.samples();
    for (std::size_t k = 0; k < v.size(); ++k) out << num(v.theta(k)) << "," << num(v[k]) << "\n";
    return out.str();
  }
  return orbit_point_to_json(p) + "\n";
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--grid", o.grid, "grid size N")->capture_default_str();
  sub->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  sub->add_option("-o,--output", o.output, "write to this file instead of stdout");
}

void add_extrapolation(CLI::App* sub, Options& o) {
  sub->add_option("--eps0", o.eps0, "initial step")->check(CLI::PositiveNumber)->capture_default_str();
  sub->add_option("--levels", o.levels, "halvings")->check(CLI::Range(3, 30))->capture_default_str();
}

void add_structure(CLI::App* sub, Options& o) {
  sub->add_option("--structure", o.structure, "projective structure")
      ->check(CLI::IsMember({"torus", "line"}))
      ->capture_default_str();
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Circle diffeomorphisms, Schwarzian cocycles and Virasoro orbits", "circdiff"};
  app.require_subcommand(1);

  auto* schw = app.add_subcommand("schwarzian", "tabulate a Schwarzian derivative on the grid");
  schw->add_option("input", o.input, "diffeomorphism JSON ('-' for stdin)")->capture_default_str();
  schw->add_option("--variant", o.variant)
      ->check(CLI::IsMember({"classical", "modified", "universal"}))
      ->capture_default_str();
  add_structure(schw, o);
  add_common(schw, o);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", o.suite)->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--seed", o.seed)->capture_default_str();
  add_extrapolation(verify, o);
  add_common(verify, o);

  auto* map = app.add_subcommand("metric-map", "sample a null metric on an N x N grid");
  map->add_option("--kind", o.kind)->check(CLI::IsMember({"curved", "flat", "pullback"}))->capture_default_str();
  map->add_option("--base", o.base, "base metric for --kind pullback")
      ->check(CLI::IsMember({"curved", "flat"}))
      ->capture_default_str();
  map->add_option("-c,--charge", o.charge, "c of the curved metric")->capture_default_str();
  map->add_option("--band", o.band, "mask cells with |theta1 - theta2| at most this")->capture_default_str();
  map->add_option("--input", o.input, "diffeomorphism JSON for --kind pullback")->capture_default_str();
  add_common(map, o);

  auto* cartan = app.add_subcommand("cartan-estimate", "cross-ratio estimates of the Schwarzian at one angle");
  cartan->add_option("input", o.input)->capture_default_str();
  cartan->add_option("--theta", o.theta)->capture_default_str();
  add_structure(cartan, o);
  add_extrapolation(cartan, o);
  add_common(cartan, o);

  auto* bt = app.add_subcommand("bott-thurston", "evaluate BT(phi1, phi2)");
  bt->add_option("first", o.input)->required();
  bt->add_option("second", o.second)->required();
  add_common(bt, o);

  auto* orbit = app.add_subcommand("orbit-point", "momentum map image of a diffeomorphism");
  orbit->add_option("input", o.input)->capture_default_str();
  orbit->add_option("-c,--charge", o.charge)->capture_default_str();
  orbit->add_flag("--flat", o.flat, "zero central charge orbit");
  add_common(orbit, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  int code = kOk;
  try {
    std::string text;
    if (*schw) {
      text = cmd_schwarzian(o, in);
    } else if (*verify) {
      text = cmd_verify(o, code);
    } else if (*map) {
      text = cmd_metric_map(o, in);
    } else if (*cartan) {
      text = cmd_cartan(o, in);
    } else if (*bt) {
      text = cmd_bott_thurston(o, in);
    } else {
      text = cmd_orbit_point(o, in);
    }
    if (o.output.empty()) {
      out << text;
    } else {
      std::ofstream f(o.output, std::ios::binary);
      if (!f || !(f << text)) throw InvalidInput("cannot write '" + o.output + "'");
    }
  } catch (const InvalidDiffeo& e) {
    err << "circdiff: invalid diffeomorphism: " << e.what() << "\n";
    return kInvalidDiffeo;
  } catch (const InvalidInput& e) {
    err << "circdiff: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "circdiff: numerical failure: " << e.what() << "\n";
    return kNumerical;
  }
  return code;
}

}  // namespace circdiff::cli
