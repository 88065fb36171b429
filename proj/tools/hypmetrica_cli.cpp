#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hypmetrica/hypmetrica.h"

using nlohmann::json;

namespace {

struct Failure {
  hm_status status;
  std::string message;
};

void check(hm_status s) {
  if (s != HM_OK) throw Failure{s, hm_last_error()};
}

void invalid(const std::string& msg) { throw Failure{HM_E_INVALID_ARGUMENT, msg}; }

std::string take(char* p) {
  std::string s = p ? p : "";
  hm_string_free(p);
  return s;
}

std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt(const json& v) {
  if (v.is_number()) return fmt(v.get<double>());
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) invalid("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Domain {
  hm_domain* p = nullptr;
  ~Domain() { hm_domain_free(p); }
};

struct Series {
  hm_series* p = nullptr;
  ~Series() { hm_series_free(p); }
};

// a file path, or a catalogue name when no such file exists
void load_domain(const std::string& arg, Domain& d) {
  if (arg.empty()) invalid("--domain is required");
  if (std::filesystem::exists(arg)) {
    check(hm_domain_from_json(read_file(arg).c_str(), &d.p));
  } else {
    check(hm_domain_named(arg.c_str(), &d.p));
  }
}

std::pair<double, double> parse_point(const std::string& s) {
  auto c = s.find(',');
  if (c == std::string::npos) invalid("point must be 'x,y': " + s);
  try {
    return {std::stod(s.substr(0, c)), std::stod(s.substr(c + 1))};
  } catch (const std::exception&) {
    invalid("point must be 'x,y': " + s);
  }
  return {};
}

struct Common {
  std::string domain, series, format = "csv", out;
  int samples = 0, grid = 0;
  double tol = 0;
  uint64_t seed = 42;

  hm_options options() const {
    hm_options o;
    hm_options_default(&o);
    if (samples) o.samples = samples;
    if (grid) o.grid = grid;
    if (tol) o.tol = tol;
    o.seed = seed;
    if (o.samples < 16) invalid("--samples must be at least 16");
    if (!(o.tol > 0 && o.tol <= 0.1)) invalid("--tol must lie in (0, 0.1]");
    return o;
  }
};

void add_common(CLI::App* c, Common& o, bool with_domain, bool with_series) {
  if (with_domain) c->add_option("--domain", o.domain, "domain JSON file or catalogue name");
  if (with_series) c->add_option("--series", o.series, "series JSON file ([re, im] pairs)");
  c->add_option("--samples", o.samples, "boundary samples m (>= 16)");
  c->add_option("--grid", o.grid, "base grid resolution for path metrics");
  c->add_option("--tol", o.tol, "relative refinement tolerance in (0, 0.1]");
  c->add_option("--seed", o.seed, "random seed")->default_val(42);
  c->add_option("--format", o.format, "csv, json or svg")->check(CLI::IsMember({"csv", "json", "svg"}));
  c->add_option("--out", o.out, "output path (stdout when omitted)");
}

void emit(const Common& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) invalid("cannot write " + o.out);
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

std::string csv(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::string s;
  for (size_t i = 0; i < header.size(); ++i) s += (i ? "," : "") + header[i];
  s += "\n";
  for (auto& r : rows) {
    for (size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + r[i];
    s += "\n";
  }
  return s;
}

int exit_code(hm_status s) {
  switch (s) {
    case HM_E_NON_CONVERGENT:
    case HM_E_NO_ROOT:
    case HM_E_HYPERGEOMETRIC_FAILURE:
    case HM_E_RESOLUTION_TOO_COARSE:
      return 3;
    case HM_E_INTERNAL:
      return 1;
    default:
      return 2;
  }
}

// ---------------------------------------------------------------- commands

struct MetricArgs {
  Common c;
  std::string kind, x, y;
};

void run_metric(const MetricArgs& a) {
  Domain d;
  load_domain(a.c.domain, d);
  auto o = a.c.options();
  auto [x1, y1] = parse_point(a.x);
  auto [x2, y2] = parse_point(a.y);
  json j = json::parse(take([&] {
    char* s = nullptr;
    check(hm_metric_json(d.p, a.kind.c_str(), x1, y1, x2, y2, &o, &s));
    return s;
  }()));
  if (a.c.format == "json") return emit(a.c, j.dump(2));
  emit(a.c, csv({"metric", "x1", "y1", "x2", "y2", "value", "error_estimate"},
                {{fmt(j["metric"]), fmt(x1), fmt(y1), fmt(x2), fmt(y2), fmt(j["value"]), fmt(j["error_estimate"])}}));
}

struct DensityArgs {
  Common c;
  std::string kind;
  std::vector<std::string> at;
  double theta = 0;
};

void run_density(const DensityArgs& a) {
  Domain d;
  load_domain(a.c.domain, d);
  auto o = a.c.options();
  if (a.at.empty()) invalid("--at x,y is required");
  std::vector<std::vector<std::string>> rows;
  json arr = json::array();
  for (auto& s : a.at) {
    auto [x, y] = parse_point(s);
    double v = 0;
    check(hm_density(d.p, a.kind.c_str(), x, y, a.theta, &o, &v));
    rows.push_back({a.kind, fmt(x), fmt(y), fmt(v)});
    arr.push_back({{"kind", a.kind}, {"x", x}, {"y", y}, {"value", fmt(v)}});
  }
  if (a.c.format == "json") return emit(a.c, arr.dump(2));
  emit(a.c, csv({"kind", "x", "y", "value"}, rows));
}

struct RelateArgs {
  Common c;
  std::string a = "apollonian", b = "j";
  int pairs = 50, scales = 4;
};

void run_relate(const RelateArgs& a) {
  Domain d;
  load_domain(a.c.domain, d);
  auto o = a.c.options();
  char* s = nullptr;
  check(hm_relate_json(d.p, a.a.c_str(), a.b.c_str(), a.pairs, a.scales, &o, &s));
  json j = json::parse(take(s));
  if (a.c.format == "json") return emit(a.c, j.dump(2));
  std::vector<std::vector<std::string>> rows;
  for (auto& h : j["estimate"]["refinement_history"])
    rows.push_back({fmt(j["metric_a"]), fmt(j["metric_b"]), fmt(h["scale"]), fmt(h["sup_ratio"]), fmt(h["inf_ratio"]),
                    fmt(h["pairs"]), fmt(j["verdict"])});
  rows.push_back({fmt(j["metric_a"]), fmt(j["metric_b"]), "all", fmt(j["estimate"]["sup_ratio"]),
                  fmt(j["estimate"]["inf_ratio"]), fmt(j["estimate"]["sample_pairs"]), fmt(j["verdict"])});
  emit(a.c, csv({"metric_a", "metric_b", "scale", "sup_ratio", "inf_ratio", "pairs", "verdict"}, rows));
}

struct ScenarioArgs {
  Common c;
  std::string suite = "default", suite_file;
};

int run_scenarios(const ScenarioArgs& a) {
  auto o = a.c.options();
  std::string suite = a.suite_file.empty() ? a.suite : read_file(a.suite_file);
  char *js = nullptr, *cs = nullptr;
  check(hm_scenarios(suite.c_str(), &o, &js, &cs));
  std::string j = take(js), c = take(cs);
  emit(a.c, a.c.format == "json" ? json::parse(j).dump(2) : c);
  return json::parse(j).value("all_pass", false) ? 0 : 4;
}

struct NormArgs {
  Common c;
  std::string function;
  int rays = 64;
};

void run_norm(const NormArgs& a) {
  double v = 0, e = 0;
  std::string name;
  if (!a.c.series.empty()) {
    Series s;
    check(hm_series_from_json(read_file(a.c.series).c_str(), &s.p));
    check(hm_norm_series(s.p, a.rays, &v, &e));
    name = a.c.series;
  } else if (!a.function.empty()) {
    check(hm_norm_named(a.function.c_str(), a.rays, &v, &e));
    name = a.function;
  } else {
    invalid("--function or --series is required");
  }
  if (a.c.format == "json") return emit(a.c, json{{"function", name}, {"norm", v}, {"error_estimate", e}}.dump(2));
  emit(a.c, csv({"function", "norm", "error_estimate"}, {{name, fmt(v), fmt(e)}}));
}

struct MembershipArgs {
  Common c;
  std::string family, test = "all";
  int N = 256;
  double mu = 1, alpha = 0, lambda = 1;
};

void run_membership(const MembershipArgs& a) {
  Series s;
  if (!a.c.series.empty()) {
    check(hm_series_from_json(read_file(a.c.series).c_str(), &s.p));
  } else if (!a.family.empty()) {
    check(hm_series_named(a.family.c_str(), a.N, &s.p));
  } else {
    invalid("--series or --family is required");
  }
  char* out = nullptr;
  check(hm_membership_json(s.p, a.test.c_str(), a.mu, a.alpha, a.lambda, &out));
  json j = json::parse(take(out));
  if (a.c.format == "json") return emit(a.c, j.dump(2));
  std::vector<std::vector<std::string>> rows;
  for (auto& r : j["reports"])
    rows.push_back({fmt(r["condition_id"]), fmt(r["satisfied"]), fmt(r["slack"]), fmt(r["tail_bound"]),
                    fmt(r["tail_bounded"])});
  emit(a.c, csv({"condition_id", "satisfied", "slack", "tail_bound", "tail_bounded"}, rows));
}

struct RadiusArgs {
  Common c;
  std::string name = "u";
  double mu = 0.5, alpha = 0, lambda = 1, fpp0 = 0;
};

void run_radius(const RadiusArgs& a) {
  double p1 = 0, p2 = 0;
  if (a.name == "sp") {
    p1 = a.mu;
    p2 = a.alpha;
  } else if (a.name == "sp_second") {
    p1 = a.alpha;
    p2 = a.fpp0;
  } else if (a.name == "u") {
    p1 = a.alpha;
    p2 = a.lambda;
  } else {
    invalid("unknown radius: " + a.name);
  }
  char* out = nullptr;
  check(hm_radius_json(a.name.c_str(), p1, p2, &out));
  json j = json::parse(take(out));
  if (a.c.format == "json") return emit(a.c, j.dump(2));
  emit(a.c, csv({"name", "r0", "residual"}, {{a.name, fmt(j["r0"]), fmt(j["residual"])}}));
}

struct BoundArgs {
  Common c;
  std::string name;
  std::map<std::string, double> p;
  bool strict = false;
};

void run_bound(const BoundArgs& a, CLI::App* app) {
  static const std::map<std::string, std::vector<std::string>> order = {
      {"L", {"beta", "b", "c"}},
      {"bernardi", {"gamma"}},
      {"N", {"A", "B"}},
      {"M", {"A", "B", "b", "c"}},
      {"D", {"A", "B", "gamma"}},
      {"strongly_starlike", {"alpha", "beta"}},
      {"delta_orders", {"alpha", "beta", "gamma"}},
      {"delta_bernardi", {"alpha", "gamma"}},
      {"delta_gamma", {"gamma"}},
      {"lambda_delta", {"delta", "a"}},
      {"lambda_star", {"mu"}},
      {"lambda_star_gamma", {"gamma", "fpp0"}},
      {"lambda_R_gamma", {"gamma", "fpp0"}},
  };
  auto it = order.find(a.name);
  if (it == order.end()) invalid("unknown bound: " + a.name);
  std::vector<double> params;
  for (auto& k : it->second) {
    if (app->count("--" + k) == 0) invalid("bound " + a.name + " needs --" + k);
    params.push_back(a.p.at(k));
  }
  char* out = nullptr;
  check(hm_bound_json(a.name.c_str(), params.data(), static_cast<int>(params.size()), a.strict ? 1 : 0, &out));
  json j = json::parse(take(out));
  if (a.c.format == "json") return emit(a.c, j.dump(2));
  std::string notes;
  for (auto& n : j["notes"]) notes += (notes.empty() ? "" : "; ") + n.get<std::string>();
  emit(a.c, csv({"name", "value", "extremizer", "method", "notes"},
                {{a.name, fmt(j["value"]), fmt(j["extremizer"]), fmt(j["method"]), notes.empty() ? "" : "\"" + notes + "\""}}));
}

struct PlotArgs {
  Common c;
  std::string density = "kp_ferrand_ratio", overlay, metric = "quasihyperbolic", x, y;
  std::vector<std::string> seeds;
  int pixels = 40;
  double window = 4;
  bool scale_delta = false;
};

std::string color(double t) {
  t = std::clamp(std::isfinite(t) ? t : 1.0, 0.0, 1.0);
  int r = int(255 * t), b = int(255 * (1 - t)), g = int(255 * (1 - std::abs(2 * t - 1)));
  char buf[16];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", r, g, b);
  return buf;
}

void run_plot(const PlotArgs& a) {
  Domain d;
  load_domain(a.c.domain, d);
  auto o = a.c.options();
  if (a.pixels < 2) invalid("--pixels must be at least 2");
  double x0, y0, x1, y1;
  check(hm_domain_bbox(d.p, &x0, &y0, &x1, &y1));
  x0 = std::max(x0, -a.window), y0 = std::max(y0, -a.window);
  x1 = std::min(x1, a.window), y1 = std::min(y1, a.window);
  struct Cell {
    double x, y, v;
  };
  std::vector<Cell> cells;
  int n = a.pixels;
  double w = (x1 - x0) / n, h = (y1 - y0) / n;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      double x = x0 + (i + 0.5) * w, y = y0 + (j + 0.5) * h;
      int in = 0;
      check(hm_domain_contains(d.p, x, y, &in));
      if (!in) continue;
      double v = 0;
      check(hm_density(d.p, a.density.c_str(), x, y, 0, &o, &v));
      if (a.scale_delta) {
        double dl = 0;
        check(hm_domain_distance(d.p, x, y, &dl));
        v *= dl;
      }
      cells.push_back({x, y, v});
    }
  std::vector<std::vector<std::string>> rows;
  for (auto& c : cells) rows.push_back({fmt(c.x), fmt(c.y), fmt(c.v)});
  std::string table = csv({"x", "y", "value"}, rows);
  if (a.c.format == "csv") return emit(a.c, table);
  if (a.c.format == "json") {
    json arr = json::array();
    for (auto& c : cells) arr.push_back({c.x, c.y, fmt(c.v)});
    return emit(a.c, json{{"density", a.density}, {"cells", arr}}.dump(2));
  }

  double lo = INFINITY, hi = -INFINITY;
  for (auto& c : cells)
    if (std::isfinite(c.v)) lo = std::min(lo, c.v), hi = std::max(hi, c.v);
  double span = hi - lo > 1e-12 * std::max(1.0, std::abs(hi)) ? hi - lo : INFINITY;
  double S = 600.0 / std::max(x1 - x0, y1 - y0);
  auto X = [&](double x) { return (x - x0) * S; };
  auto Y = [&](double y) { return (y1 - y) * S; };
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << X(x1) << "\" height=\"" << Y(y0) << "\">\n";
  for (auto& c : cells)
    svg << "<rect x=\"" << X(c.x - w / 2) << "\" y=\"" << Y(c.y + h / 2) << "\" width=\"" << w * S << "\" height=\""
        << h * S << "\" fill=\"" << color((c.v - lo) / span) << "\"/>\n";
  char* ol = nullptr;
  check(hm_domain_outline_json(d.p, 256, &ol));
  json outline = json::parse(take(ol));
  for (auto& piece : outline["pieces"]) {
    auto& pts = piece["points"];
    if (pts.size() == 1) {
      svg << "<circle cx=\"" << X(pts[0][0]) << "\" cy=\"" << Y(pts[0][1]) << "\" r=\"3\" fill=\"black\"/>\n";
      continue;
    }
    svg << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\"";
    for (auto& p : pts) svg << X(p[0]) << "," << Y(p[1]) << " ";
    svg << "\"/>\n";
  }
  if (a.overlay == "geodesic") {
    auto [ax, ay] = parse_point(a.x);
    auto [bx, by] = parse_point(a.y);
    char* g = nullptr;
    check(hm_metric_json(d.p, a.metric.c_str(), ax, ay, bx, by, &o, &g));
    json gj = json::parse(take(g));
    svg << "<polyline fill=\"none\" stroke=\"white\" stroke-width=\"2\" points=\"";
    for (auto& p : gj.value("path", json::array())) svg << X(p[0]) << "," << Y(p[1]) << " ";
    svg << "\"/>\n";
  } else if (a.overlay == "hma") {
    std::vector<double> flat;
    for (auto& s : a.seeds) {
      auto [sx, sy] = parse_point(s);
      flat.push_back(sx);
      flat.push_back(sy);
    }
    char* hm = nullptr;
    check(hm_hma_json(d.p, flat.data(), static_cast<int>(flat.size() / 2), &o, &hm));
    json hj = json::parse(take(hm));
    for (auto& g : hj["geodesics"])
      svg << "<circle cx=\"" << X(g["center"][0]) << "\" cy=\"" << Y(g["center"][1])
          << "\" r=\"3\" fill=\"white\" stroke=\"black\"/>\n";
  } else if (!a.overlay.empty()) {
    invalid("unknown overlay: " + a.overlay);
  }
  svg << "</svg>\n";
  emit(a.c, svg.str());
  if (!a.c.out.empty()) {
    Common side = a.c;
    side.out = std::filesystem::path(a.c.out).replace_extension(".csv").string();
    emit(side, table);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hyperbolic-type metrics and univalent-function bounds"};
  app.require_subcommand(1);

  MetricArgs ma;
  auto* metric = app.add_subcommand("metric", "distance between two points");
  add_common(metric, ma.c, true, false);
  metric->add_option("--kind", ma.kind, "metric name")->required();
  metric->add_option("--x", ma.x, "first point x,y")->required();
  metric->add_option("--y", ma.y, "second point x,y")->required();

  DensityArgs da;
  auto* density = app.add_subcommand("density", "density at points");
  add_common(density, da.c, true, false);
  density->add_option("--kind", da.kind, "density name")->required();
  density->add_option("--at", da.at, "point x,y (repeatable)");
  density->add_option("--theta", da.theta, "direction for the directed Apollonian density");

  RelateArgs ra;
  auto* relate = app.add_subcommand("relate", "estimate the relation between two metrics");
  add_common(relate, ra.c, true, false);
  relate->add_option("--a", ra.a, "first metric");
  relate->add_option("--b", ra.b, "second metric");
  relate->add_option("--pairs", ra.pairs, "pairs per scale");
  relate->add_option("--scales", ra.scales, "number of scales");

  ScenarioArgs sa;
  auto* scen = app.add_subcommand("scenarios", "run a scenario suite");
  add_common(scen, sa.c, false, false);
  scen->add_option("--suite", sa.suite, "default, table1 or chapter3");
  scen->add_option("--suite-file", sa.suite_file, "JSON suite document");

  NormArgs na;
  auto* normc = app.add_subcommand("norm", "pre-Schwarzian norm");
  add_common(normc, na.c, false, true);
  normc->add_option("--function", na.function, "koebe, ell, g_beta(b), extremal_AB(A,B), alexander_g_beta(b)");
  normc->add_option("--rays", na.rays, "rays in the disk sampler");

  MembershipArgs mb;
  auto* memb = app.add_subcommand("membership", "coefficient-condition tests");
  add_common(memb, mb.c, false, true);
  memb->add_option("--family", mb.family, "identity, koebe, ell, g_beta(b), extremal_AB(A,B)");
  memb->add_option("--N", mb.N, "truncation for --family");
  memb->add_option("--test", mb.test, "sp_necessary, sp_sufficient, u, u_exact, starlike_order, p2lambda, area, all");
  memb->add_option("--mu", mb.mu);
  memb->add_option("--alpha", mb.alpha);
  memb->add_option("--lambda", mb.lambda);

  RadiusArgs rd;
  auto* rad = app.add_subcommand("radius", "radius of a property");
  add_common(rad, rd.c, false, false);
  rad->add_option("--name", rd.name, "sp, sp_second or u");
  rad->add_option("--mu", rd.mu);
  rad->add_option("--alpha", rd.alpha);
  rad->add_option("--lambda", rd.lambda);
  rad->add_option("--fpp0", rd.fpp0, "|f''(0)|");

  BoundArgs bd;
  auto* bound = app.add_subcommand("bound", "norm bounds and orders");
  add_common(bound, bd.c, false, false);
  bound->add_option("--name", bd.name, "L, bernardi, N, M, D, strongly_starlike, delta_orders, delta_bernardi, "
                                       "delta_gamma, lambda_delta, lambda_star, lambda_star_gamma, lambda_R_gamma")
      ->required();
  for (const char* k : {"beta", "b", "c", "gamma", "A", "B", "alpha", "delta", "a", "mu", "fpp0"})
    bound->add_option(std::string("--") + k, bd.p[k]);
  bound->add_flag("--strict", bd.strict, "reject parameters outside the theorem hypotheses");

  PlotArgs pa;
  auto* plot = app.add_subcommand("plot", "density field as SVG and CSV");
  add_common(plot, pa.c, true, false);
  pa.c.format = "svg";
  plot->add_option("--density", pa.density, "density name");
  plot->add_option("--pixels", pa.pixels, "cells per side");
  plot->add_option("--window", pa.window, "view clip |x|, |y| <= window");
  plot->add_flag("--scale-delta", pa.scale_delta, "multiply the field by the boundary distance");
  plot->add_option("--overlay", pa.overlay, "geodesic or hma");
  plot->add_option("--metric", pa.metric, "path metric for the geodesic overlay");
  plot->add_option("--x", pa.x, "geodesic start x,y");
  plot->add_option("--y", pa.y, "geodesic end x,y");
  plot->add_option("--seeds", pa.seeds, "hma seed points x,y (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*metric) run_metric(ma);
    if (*density) run_density(da);
    if (*relate) run_relate(ra);
    if (*scen) return run_scenarios(sa);
    if (*normc) run_norm(na);
    if (*memb) run_membership(mb);
    if (*rad) run_radius(rd);
    if (*bound) run_bound(bd, bound);
    if (*plot) run_plot(pa);
  } catch (const Failure& f) {
    std::cerr << json{{"status", hm_status_name(f.status)}, {"code", static_cast<int>(f.status)},
                      {"message", f.message}}
                     .dump()
              << "\n";
    return exit_code(f.status);
  } catch (const json::exception& e) {
    std::cerr << json{{"status", "ParseError"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  }
  return 0;
}
