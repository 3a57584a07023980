#include "orthocover/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "orthocover/covering2d.hpp"
#include "orthocover/covering3d.hpp"
#include "orthocover/lobachevsky.hpp"
#include "orthocover/oracle.hpp"
#include "orthocover/orthoscheme.hpp"

namespace orthocover::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt10(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

template <class T, class Setter>
void add_opt(CLI::App& app, const std::string& name, Setter set, const std::string& help) {
  app.add_option_function<T>(name, set, help);
}

std::unique_ptr<CLI::App> make_app(RunSpec& spec) {
  auto app = std::make_unique<CLI::App>("Horoball and hyperball coverings of truncated orthoschemes", "orthocover");
  app->fallthrough();
  app->require_subcommand(1);
  app->add_option("--format", spec.format, "Output format")->check(CLI::IsMember({"table", "csv", "json"}));
  add_opt<std::string>(*app, "--family", [&](const std::string& v) { spec.family = v; }, "Family q,r: 3,6 | 4,4 | 6,3");
  add_opt<std::string>(*app, "--case", [&](const std::string& v) { spec.covering_case = v; },
                       "Covering case: a0p0 a0a2 a1p1 a0a1 a1a2 a2p2");
  add_opt<int>(*app, "--type", [&](const int& v) { spec.type = v; }, "Plane covering type 1 or 2");
  add_opt<double>(*app, "--a", [&](const double& v) { spec.a = v; }, "Lambert parameter a in (0,1)");
  add_opt<double>(*app, "--t", [&](const double& v) { spec.t = v; }, "Plane covering parameter t");
  add_opt<double>(*app, "--p", [&](const double& v) { spec.p = v; }, "Schlaefli p");
  add_opt<double>(*app, "--param", [&](const double& v) { spec.param = v; }, "Case parameter in [0,1]");
  add_opt<double>(*app, "--x", [&](const double& v) { spec.x = v; }, "Argument of the Lobachevsky function");
  add_opt<std::string>(*app, "--vary", [&](const std::string& v) { spec.vary = v; },
                       "Swept variable: a|t (sweep2d), param|p (sweep3d)");
  add_opt<double>(*app, "--lo", [&](const double& v) { spec.lo = v; }, "Sweep or search lower end");
  add_opt<double>(*app, "--hi", [&](const double& v) { spec.hi = v; }, "Sweep or search upper end");
  add_opt<double>(*app, "--step", [&](const double& v) { spec.step = v; }, "Sweep step");
  add_opt<std::uint64_t>(*app, "--samples", [&](const std::uint64_t& v) { spec.samples = v; },
                         "Monte Carlo samples per estimate");
  add_opt<std::uint64_t>(*app, "--seed", [&](const std::uint64_t& v) { spec.seed = v; },
                         "Oracle seed (default: ORTHOCOVER_SEED or built-in)");
  add_opt<int>(*app, "--grid", [&](const int& v) { spec.grid = v; }, "Refutation grid size");
  add_opt<double>(*app, "--tol", [&](const double& v) { spec.tol = v; }, "Optimizer tolerance on the parameter");
  app->add_flag("--allow-nonextendable", spec.allow_nonextendable,
                "Accept non-integral p in (6,7); results hold only locally");

  const std::vector<std::pair<std::string, std::string>> subs{
      {"density2d", "Density of a plane covering (--type --a --t)"},
      {"density3d", "Density and edge coverage in space (--family --p --case --param)"},
      {"optimize2d", "Optimal t for a plane covering type (--type --a)"},
      {"optimize3d", "Optimal case parameter (--family --p --case)"},
      {"optimize-real-p", "Optimize over p in (6,7) and the parameter (needs --allow-nonextendable)"},
      {"table", "Optimal densities of a family's best case for its first three p (--family)"},
      {"sweep2d", "Density curve of a plane covering as CSV rows"},
      {"sweep3d", "Density curve over the case parameter or over p"},
      {"refute", "Show that a case cannot cover (--family --p --case [--grid])"},
      {"verify", "Compare closed forms with Monte Carlo and quadrature oracles"},
      {"lob", "Evaluate the Lobachevsky function (--x)"}};
  for (const auto& [name, help] : subs) {
    auto* sub = app->add_subcommand(name, help);
    sub->fallthrough();
    sub->callback([&spec, name] { spec.command = name; });
  }
  return app;
}

void parse_into(CLI::App& app, const std::vector<std::string>& args) {
  std::vector<std::string> rev(args.rbegin(), args.rend());
  app.parse(rev);
}

// ---------- rendering

std::string csv_cell(const Json& v) {
  if (v.is_null()) return "nan";
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_float()) return fmt17(v.get<double>());
  if (v.is_number()) return v.dump();
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += (c == '"') ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  }
  if (v.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + csv_cell(v[i]);
    return s;
  }
  return csv_cell(Json(v.dump()));
}

std::string table_cell(const Json& v) {
  if (v.is_number_float()) return fmt10(v.get<double>());
  if (v.is_array()) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + table_cell(v[i]);
    return s + ")";
  }
  if (v.is_string()) return v.get<std::string>();
  if (v.is_object()) return v.dump();
  return csv_cell(v);
}

void render(const Json& doc, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << doc.dump(2) << '\n';
    return;
  }
  const bool has_rows = doc.contains("rows") && doc["rows"].is_array() && !doc["rows"].empty();
  if (format == "csv") {
    const Json* rows = nullptr;
    Json single = Json::array();
    if (has_rows) {
      rows = &doc["rows"];
    } else {
      Json flat = Json::object();
      for (const auto& [k, v] : doc.items()) {
        if (!v.is_object() && k != "rows") flat[k] = v;
      }
      single.push_back(flat);
      rows = &single;
    }
    bool first = true;
    for (const auto& [k, v] : (*rows)[0].items()) {
      out << (first ? "" : ",") << k;
      first = false;
    }
    out << '\n';
    for (const auto& row : *rows) {
      first = true;
      for (const auto& [k, v] : row.items()) {
        out << (first ? "" : ",") << csv_cell(v);
        first = false;
      }
      out << '\n';
    }
    return;
  }
  // table
  for (const auto& [k, v] : doc.items()) {
    if (k == "rows") continue;
    if (v.is_object()) {
      out << k << ":\n";
      for (const auto& [k2, v2] : v.items()) out << "  " << std::left << std::setw(22) << k2 << table_cell(v2) << '\n';
    } else {
      out << std::left << std::setw(24) << k << table_cell(v) << '\n';
    }
  }
  if (has_rows) {
    const Json& rows = doc["rows"];
    std::vector<std::string> keys;
    for (const auto& [k, v] : rows[0].items()) keys.push_back(k);
    std::vector<std::size_t> width(keys.size());
    for (std::size_t i = 0; i < keys.size(); ++i) width[i] = keys[i].size();
    std::vector<std::vector<std::string>> cells;
    for (const auto& row : rows) {
      std::vector<std::string> line;
      for (std::size_t i = 0; i < keys.size(); ++i) {
        line.push_back(table_cell(row[keys[i]]));
        width[i] = std::max(width[i], line.back().size());
      }
      cells.push_back(std::move(line));
    }
    for (std::size_t i = 0; i < keys.size(); ++i) out << std::left << std::setw(static_cast<int>(width[i] + 2)) << keys[i];
    out << '\n';
    for (const auto& line : cells) {
      for (std::size_t i = 0; i < keys.size(); ++i) out << std::left << std::setw(static_cast<int>(width[i] + 2)) << line[i];
      out << '\n';
    }
  }
}

Json point_json(const LorentzVec& v) {
  const auto c = v.normalized().chart();
  Json a = Json::array();
  for (std::size_t i = 0; i < v.dim(); ++i) a.push_back(c[i]);
  return a;
}

// ---------- argument helpers

template <class T>
T need(const std::optional<T>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing required option ") + flag);
  return *v;
}

Family family_of(const RunSpec& s) {
  try {
    return parse_family(need(s.family, "--family"));
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

CoveringCase case_of(const RunSpec& s) {
  try {
    return parse_case(need(s.covering_case, "--case"));
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

Covering2DType type_of(const RunSpec& s) {
  const int t = need(s.type, "--type");
  if (t != 1 && t != 2) throw UsageError("--type must be 1 or 2");
  return t == 1 ? Covering2DType::One : Covering2DType::Two;
}

bool is_integral(double p) { return std::floor(p) == p; }

TilingMode mode_for(const RunSpec& s, double p) {
  if (is_integral(p)) return TilingMode::Integer;
  if (!s.allow_nonextendable) {
    throw UsageError("non-integral p = " + fmt10(p) + " requires --allow-nonextendable (the cell does not tile space)");
  }
  return TilingMode::RealP;
}

void mark_local(Json& doc, TilingMode mode) {
  if (mode == TilingMode::RealP) doc["locally_optimal_only"] = true;
}

TruncatedOrthoscheme orth_of(Family f, double p, TilingMode mode) {
  try {
    return make_orthoscheme(p, f, mode);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

MinimizeOptions options_of(const RunSpec& s) {
  MinimizeOptions o;
  if (s.tol) o.tol = *s.tol;
  return o;
}

std::vector<double> sweep_values(const RunSpec& s) {
  const double lo = need(s.lo, "--lo");
  const double hi = need(s.hi, "--hi");
  const double step = need(s.step, "--step");
  if (!(step > 0.0) || !(hi >= lo)) throw UsageError("empty sweep range: need --lo <= --hi and --step > 0");
  const auto n = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = lo + static_cast<double>(i) * step;
  return v;
}

std::uint64_t seed_of(const RunSpec& s) {
  if (s.seed) return *s.seed;
  if (const char* env = std::getenv("ORTHOCOVER_SEED")) {
    try {
      return std::stoull(env, nullptr, 0);
    } catch (const std::exception&) {
      throw UsageError("ORTHOCOVER_SEED is not an unsigned integer");
    }
  }
  return kDefaultSeed;
}

// ---------- commands

int cmd_density2d(const RunSpec& s, Json& doc) {
  const Covering2DType type = type_of(s);
  const double a = need(s.a, "--a");
  const double t = need(s.t, "--t");
  Covering2DConfig cfg;
  double closed = 0.0;
  try {
    cfg = build_covering2d(type, a, t);
    closed = density_closed_form(type, a, t);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  const Coverage2DReport rep = verify_coverage_2d(cfg);
  doc["type"] = static_cast<int>(type);
  doc["a"] = a;
  doc["t"] = t;
  doc["density"] = closed;
  doc["density_generic"] = cfg.density;
  doc["vol_horoball"] = cfg.vol_horoball;
  doc["vol_hyperball"] = cfg.vol_hyperball;
  doc["area"] = area2(cfg.domain);
  doc["m"] = point_json(cfg.m);
  doc["covering"] = rep.overall;
  if (rep.witness) doc["witness"] = point_json(*rep.witness);
  return rep.overall ? kExitOk : kExitNotCovering;
}

int cmd_density3d(const RunSpec& s, Json& doc) {
  const Family f = family_of(s);
  const double p = need(s.p, "--p");
  const CoveringCase c = case_of(s);
  const double param = need(s.param, "--param");
  if (!(param >= 0.0 && param <= 1.0)) throw UsageError("--param must lie in [0,1]");
  const TilingMode mode = mode_for(s, p);
  const TruncatedOrthoscheme orth = orth_of(f, p, mode);

  LorentzVec point = any_case_point(orth, c, param);
  BallPair pair;
  try {
    pair = balls_from_point(orth, point);
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
  const CoverageReport rep = verify_coverage(orth, pair);
  doc["family"] = to_string(f);
  doc["p"] = p;
  doc["case"] = to_string(c);
  doc["realizable"] = is_realizable(c);
  doc["param"] = param;
  doc["s"] = pair.horoball.s;
  doc["h"] = pair.hyperball.h;
  try {
    const PieceVolumes pv = piece_volumes(orth, pair);
    doc["vol_horoball"] = pv.horoball;
    doc["vol_hyperball"] = pv.hyperball;
    doc["vol_cell"] = orth.volume;
    doc["density"] = (pv.horoball + pv.hyperball) / orth.volume;
  } catch (const std::domain_error& e) {
    doc["density"] = nullptr;
    doc["volume_error"] = e.what();
  }
  doc["covering"] = rep.overall;
  mark_local(doc, mode);
  Json edges = Json::object();
  for (const auto& e : rep.edges) edges[to_string(e.edge)] = e.covered ? "covered" : "uncovered";
  doc["edges"] = edges;
  for (const auto& e : rep.edges) {
    if (e.witness) {
      doc["witness_edge"] = to_string(e.edge);
      doc["witness"] = point_json(*e.witness);
      break;
    }
  }
  return rep.overall ? kExitOk : kExitNotCovering;
}

int cmd_optimize2d(const RunSpec& s, Json& doc) {
  const Covering2DType type = type_of(s);
  const double a = need(s.a, "--a");
  if (!(a > 0.0 && a < 1.0)) throw UsageError("--a must lie in (0,1)");
  const Optimum2D o = optimize2d(type, a, options_of(s));
  doc["type"] = static_cast<int>(type);
  doc["a"] = a;
  doc["t"] = o.t;
  doc["density"] = o.density;
  return kExitOk;
}

int cmd_optimize3d(const RunSpec& s, Json& doc) {
  const Family f = family_of(s);
  const double p = need(s.p, "--p");
  const CoveringCase c = case_of(s);
  if (!is_realizable(c)) throw UsageError("case " + to_string(c) + " is not realizable; use refute");
  const TilingMode mode = mode_for(s, p);
  const TruncatedOrthoscheme orth = orth_of(f, p, mode);
  const CaseOptimum o = optimize_case(orth, c, options_of(s));
  doc["family"] = to_string(f);
  doc["p"] = p;
  doc["case"] = to_string(c);
  doc["param"] = o.param;
  doc["density"] = o.density;
  mark_local(doc, mode);
  return kExitOk;
}

int cmd_optimize_real_p(const RunSpec& s, Json& doc) {
  if (!s.allow_nonextendable) throw UsageError("optimize-real-p requires --allow-nonextendable");
  if (s.family && parse_family(*s.family) != Family{3, 6}) throw UsageError("real p is supported for family 3,6 only");
  const CoveringCase c = s.covering_case ? case_of(s) : CoveringCase::OnA1A2;
  if (!is_realizable(c)) throw UsageError("case " + to_string(c) + " is not realizable");
  RealPOptimum o;
  try {
    o = optimize_real_p(c, s.lo.value_or(6.0 + 1e-3), s.hi.value_or(7.0 - 1e-3));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  doc["family"] = to_string(Family{3, 6});
  doc["case"] = to_string(c);
  doc["p"] = o.p;
  doc["param"] = o.param;
  doc["density"] = o.density;
  doc["density_at_p7"] = o.density_at_7;
  doc["locally_optimal_only"] = true;
  doc["note"] = o.note;
  return kExitOk;
}

struct TableSpec {
  CoveringCase c;
  std::array<int, 3> ps;
};

TableSpec table_spec(Family f) {
  if (f == Family{3, 6}) return {CoveringCase::OnA1A2, {7, 8, 9}};
  if (f == Family{6, 3}) return {CoveringCase::OnA0A1, {4, 5, 6}};
  return {CoveringCase::OnA2P2, {5, 6, 7}};
}

int cmd_table(const RunSpec& s, Json& doc) {
  const Family f = family_of(s);
  const TableSpec ts = table_spec(f);
  const CoveringCase c = s.covering_case ? case_of(s) : ts.c;
  doc["family"] = to_string(f);
  doc["case"] = to_string(c);
  Json rows = Json::array();
  for (int p : ts.ps) {
    const CaseOptimum o = optimize_case(f, p, c, TilingMode::Integer, options_of(s));
    rows.push_back(Json{{"p", p}, {"density", o.density}, {"param", o.param}});
  }
  doc["rows"] = rows;
  return kExitOk;
}

int cmd_sweep2d(const RunSpec& s, Json& doc) {
  const Covering2DType type = type_of(s);
  const std::string vary = s.vary.value_or("a");
  if (vary != "a" && vary != "t") throw UsageError("sweep2d: --vary must be a or t");
  const double fixed = vary == "a" ? need(s.t, "--t") : need(s.a, "--a");
  Json rows = Json::array();
  for (double v : sweep_values(s)) {
    const double a = vary == "a" ? v : fixed;
    const double t = vary == "a" ? fixed : v;
    Json row{{"a", a}, {"t", t}};
    try {
      const Covering2DConfig cfg = build_covering2d(type, a, t);
      const bool ok = verify_coverage_2d(cfg).overall;
      row["density"] = density_closed_form(type, a, t);
      row["valid"] = ok;
    } catch (const std::exception&) {
      row["density"] = nullptr;
      row["valid"] = false;
    }
    rows.push_back(row);
  }
  doc["type"] = static_cast<int>(type);
  doc["rows"] = rows;
  return kExitOk;
}

int cmd_sweep3d(const RunSpec& s, Json& doc) {
  const Family f = family_of(s);
  const CoveringCase c = case_of(s);
  if (!is_realizable(c)) throw UsageError("case " + to_string(c) + " is not realizable");
  const std::string vary = s.vary.value_or("param");
  Json rows = Json::array();
  if (vary == "param") {
    const double p = need(s.p, "--p");
    const TilingMode mode = mode_for(s, p);
    const TruncatedOrthoscheme orth = orth_of(f, p, mode);
    for (double v : sweep_values(s)) {
      Json row{{"param", v}};
      try {
        const CoveringEvaluation ev = density(orth, c, v);
        row["density"] = ev.density;
        row["valid"] = ev.valid();
      } catch (const std::exception&) {
        row["density"] = nullptr;
        row["valid"] = false;
      }
      rows.push_back(row);
    }
    mark_local(doc, mode);
  } else if (vary == "p") {
    bool local = false;
    for (double p : sweep_values(s)) {
      const TilingMode mode = mode_for(s, p);
      local = local || mode == TilingMode::RealP;
      Json row{{"p", p}};
      try {
        const CaseOptimum o = optimize_case(f, p, c, mode, options_of(s));
        row["param"] = o.param;
        row["density"] = o.density;
        row["valid"] = true;
      } catch (const std::exception&) {
        row["param"] = nullptr;
        row["density"] = nullptr;
        row["valid"] = false;
      }
      rows.push_back(row);
    }
    if (local) doc["locally_optimal_only"] = true;
  } else {
    throw UsageError("sweep3d: --vary must be param or p");
  }
  doc["family"] = to_string(f);
  doc["case"] = to_string(c);
  doc["rows"] = rows;
  return kExitOk;
}

int cmd_refute(const RunSpec& s, Json& doc) {
  const Family f = family_of(s);
  const double p = need(s.p, "--p");
  const CoveringCase c = case_of(s);
  if (is_realizable(c)) throw UsageError("case " + to_string(c) + " is realizable; nothing to refute");
  const int grid = s.grid.value_or(101);
  if (grid < 1) throw UsageError("--grid must be positive");
  const TilingMode mode = mode_for(s, p);
  const TruncatedOrthoscheme orth = orth_of(f, p, mode);
  const RefutationReport rep = refute_case(orth, c, midpoint_grid(static_cast<std::size_t>(grid)));
  Json rows = Json::array();
  for (const auto& r : rep.items) {
    Json row{{"param", r.param}, {"refuted", r.refuted}};
    if (c == CoveringCase::OnA0P0) {
      row["tangency"] = r.tangency;
    } else {
      row["edge"] = r.edge ? to_string(*r.edge) : std::string("-");
      row["ordering_gap"] = r.ordering_gap;
    }
    row["witness"] = r.witness ? point_json(*r.witness) : Json(nullptr);
    rows.push_back(row);
  }
  doc["family"] = to_string(f);
  doc["p"] = p;
  doc["case"] = to_string(c);
  doc["all_refuted"] = rep.all_refuted();
  mark_local(doc, mode);
  doc["rows"] = rows;
  return rep.all_refuted() ? kExitOk : kExitNotCovering;
}

int cmd_verify(const RunSpec& s, Json& doc) {
  const Family f = s.family ? family_of(s) : Family{3, 6};
  const double p = s.p.value_or(7.0);
  const CoveringCase c = s.covering_case ? case_of(s) : CoveringCase::OnA1A2;
  if (!is_realizable(c)) throw UsageError("verify needs a realizable case");
  const TilingMode mode = mode_for(s, p);
  const TruncatedOrthoscheme orth = orth_of(f, p, mode);
  const double param = s.param ? *s.param : optimize_case(orth, c).param;
  const CoveringEvaluation ev = density(orth, c, param);
  const std::uint64_t samples = s.samples.value_or(10'000'000);
  const std::uint64_t seed = seed_of(s);

  bool ok = true;
  Json rows = Json::array();
  for (const auto& cmp : oracle_suite(ev, samples, seed)) {
    ok = ok && cmp.within(3.0);
    rows.push_back(Json{{"check", cmp.name},
                        {"exact", cmp.exact},
                        {"estimate", cmp.estimate.value},
                        {"std_error", cmp.estimate.std_error},
                        {"sigmas", cmp.sigmas},
                        {"ok", cmp.within(3.0)}});
  }
  double worst = 0.0;
  for (int i = -200; i <= 200; ++i) {
    const double x = std::numbers::pi * i / 200.0;
    worst = std::max(worst, std::abs(lob(x) - lob_quadrature(x)));
  }
  const bool lob_ok = worst <= 1e-9;
  ok = ok && lob_ok;
  rows.push_back(Json{{"check", "lobachevsky series vs quadrature"},
                      {"exact", 0.0},
                      {"estimate", worst},
                      {"std_error", 0.0},
                      {"sigmas", 0.0},
                      {"ok", lob_ok}});
  doc["family"] = to_string(f);
  doc["p"] = p;
  doc["case"] = to_string(c);
  doc["param"] = param;
  doc["samples"] = samples;
  doc["seed"] = seed;
  doc["all_ok"] = ok;
  doc["rows"] = rows;
  return ok ? kExitOk : kExitNotCovering;
}

int cmd_lob(const RunSpec& s, Json& doc) {
  const double x = need(s.x, "--x");
  doc["x"] = x;
  doc["series"] = lob(x);
  if (std::abs(x) <= std::numbers::pi) {
    doc["quadrature"] = lob_quadrature(x);
    doc["difference"] = std::abs(lob(x) - lob_quadrature(x));
  }
  return kExitOk;
}

int dispatch(const RunSpec& s, Json& doc) {
  doc["command"] = s.command;
  if (s.command == "density2d") return cmd_density2d(s, doc);
  if (s.command == "density3d") return cmd_density3d(s, doc);
  if (s.command == "optimize2d") return cmd_optimize2d(s, doc);
  if (s.command == "optimize3d") return cmd_optimize3d(s, doc);
  if (s.command == "optimize-real-p") return cmd_optimize_real_p(s, doc);
  if (s.command == "table") return cmd_table(s, doc);
  if (s.command == "sweep2d") return cmd_sweep2d(s, doc);
  if (s.command == "sweep3d") return cmd_sweep3d(s, doc);
  if (s.command == "refute") return cmd_refute(s, doc);
  if (s.command == "verify") return cmd_verify(s, doc);
  if (s.command == "lob") return cmd_lob(s, doc);
  throw UsageError("unknown command " + s.command);
}

}  // namespace

int RunSpec::dimension() const {
  if (command == "density2d" || command == "optimize2d" || command == "sweep2d") return 2;
  if (command == "lob" || command.empty()) return 0;
  return 3;
}

std::vector<std::string> RunSpec::to_args() const {
  std::vector<std::string> a{command, "--format", format};
  const auto put = [&](const char* flag, const std::string& v) {
    a.emplace_back(flag);
    a.push_back(v);
  };
  if (family) put("--family", *family);
  if (covering_case) put("--case", *covering_case);
  if (type) put("--type", std::to_string(*type));
  if (this->a) put("--a", fmt17(*this->a));
  if (t) put("--t", fmt17(*t));
  if (p) put("--p", fmt17(*p));
  if (param) put("--param", fmt17(*param));
  if (x) put("--x", fmt17(*x));
  if (vary) put("--vary", *vary);
  if (lo) put("--lo", fmt17(*lo));
  if (hi) put("--hi", fmt17(*hi));
  if (step) put("--step", fmt17(*step));
  if (samples) put("--samples", std::to_string(*samples));
  if (seed) put("--seed", std::to_string(*seed));
  if (grid) put("--grid", std::to_string(*grid));
  if (tol) put("--tol", fmt17(*tol));
  if (allow_nonextendable) a.emplace_back("--allow-nonextendable");
  return a;
}

std::string RunSpec::to_text() const {
  std::string s;
  for (const auto& arg : to_args()) {
    if (!s.empty()) s += ' ';
    s += arg;
  }
  return s;
}

RunSpec parse_run_spec(const std::vector<std::string>& args) {
  RunSpec spec;
  auto app = make_app(spec);
  try {
    parse_into(*app, args);
  } catch (const CLI::ParseError& e) {
    throw std::invalid_argument(e.what());
  }
  return spec;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunSpec spec;
  auto app = make_app(spec);
  try {
    parse_into(*app, args);
  } catch (const CLI::CallForHelp&) {
    out << app->help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  Json doc = Json::object();
  int code = kExitOk;
  try {
    code = dispatch(spec, doc);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  render(doc, spec.format, out);
  if (code == kExitNotCovering) err << "not covering or check failed\n";
  return code;
}

int main_entry(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace orthocover::cli
