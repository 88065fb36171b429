#include "hypmetrica/hypmetrica.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <numbers>
#include <string>

#include <json.hpp>

#include "hypmetrica/bounds.hpp"
#include "hypmetrica/domain_json.hpp"
#include "hypmetrica/errors.hpp"
#include "hypmetrica/metrics.hpp"
#include "hypmetrica/numeric.hpp"
#include "hypmetrica/relations.hpp"
#include "hypmetrica/univalent.hpp"

struct hm_domain {
  hm::Domain d;
};

struct hm_series {
  hm::PowerSeries s;
};

using nlohmann::json;

namespace {

thread_local std::string g_last_error;

hm_status fail(hm_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

template <class F>
hm_status guard(F&& body) {
  try {
    g_last_error.clear();
    body();
    return HM_OK;
  } catch (const hm::Error& e) {
    return fail(static_cast<hm_status>(static_cast<int>(e.code()) + 1), e.what());
  } catch (const json::exception& e) {
    return fail(HM_E_PARSE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(HM_E_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(HM_E_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

// JSON has no inf/nan
json num(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

json pt(hm::Point p) { return json::array({num(p.x), num(p.y)}); }

void need(bool ok, const char* what) {
  if (!ok) throw hm::Error(hm::ErrorCode::InvalidArgument, what);
}

hm::MetricContext context(const hm_options* o) {
  hm_options def;
  hm_options_default(&def);
  if (!o) o = &def;
  need(o->samples >= 16, "samples must be at least 16");
  need(o->tol > 0 && o->tol <= 0.1, "tol must lie in (0, 0.1]");
  need(o->grid >= 2, "grid must be at least 2");
  hm::MetricContext c;
  c.samples = o->samples;
  c.grid.grid = o->grid;
  c.grid.tol = o->tol;
  c.grid.max_levels = std::max(o->max_levels, c.grid.min_levels);
  return c;
}

uint64_t seed_of(const hm_options* o) { return o ? o->seed : 42; }

json trace_json(const hm::MetricValue& v) {
  json t = json::array();
  for (auto& e : v.refinement_trace) t.push_back({{"resolution", num(e.resolution)}, {"value", num(e.value)}});
  return t;
}

json metric_value_json(const hm::MetricValue& v) {
  return {{"value", num(v.value)}, {"error_estimate", num(v.error_estimate)}, {"trace", trace_json(v)}};
}

double directed_extreme(const hm::Domain& d, hm::Point z, bool want_max) {
  auto dens = [&](double phi) {
    double v = hm::apollonian_directed_density(d, z, hm::polar(1, phi), 0).value;
    return want_max ? v : -v;
  };
  double r = hm::grid_golden_max(dens, 0, std::numbers::pi, 64).second;
  return want_max ? r : -r;
}

json bound_json(const std::string& name, const hm::BoundResult& b) {
  json j = hm::bound_to_json(b);
  j["name"] = name;
  j["value"] = num(b.value);
  return j;
}

json closed_json(const std::string& name, double v) {
  return {{"name", name}, {"value", num(v)}, {"extremizer", nullptr}, {"method", "CLOSED_FORM"}, {"notes", json::array()}};
}

}  // namespace

extern "C" {

void hm_options_default(hm_options* o) {
  if (!o) return;
  hm::MetricContext c;
  o->samples = c.samples;
  o->grid = c.grid.grid;
  o->tol = c.grid.tol;
  o->max_levels = c.grid.max_levels;
  o->seed = 42;
}

const char* hm_status_name(hm_status s) {
  if (s == HM_OK) return "Ok";
  if (s == HM_E_PARSE) return "ParseError";
  if (s == HM_E_INTERNAL) return "InternalError";
  if (s > HM_OK && s < HM_E_PARSE) return hm::error_name(static_cast<hm::ErrorCode>(static_cast<int>(s) - 1));
  return "Unknown";
}

const char* hm_last_error(void) { return g_last_error.c_str(); }

void hm_string_free(char* s) { std::free(s); }

const char* hm_version(void) { return "0.1.0"; }

hm_status hm_domain_from_json(const char* text, hm_domain** out) {
  if (!text || !out) return fail(HM_E_INVALID_ARGUMENT, "null argument");
  return guard([&] { *out = new hm_domain{hm::Domain(hm::domain_spec_from_string(text))}; });
}

hm_status hm_domain_named(const char* name, hm_domain** out) {
  if (!name || !out) return fail(HM_E_INVALID_ARGUMENT, "null argument");
  return guard([&] { *out = new hm_domain{hm::Domain(hm::named_domain(name))}; });
}

void hm_domain_free(hm_domain* d) { delete d; }

hm_status hm_domain_contains(const hm_domain* d, double x, double y, int* out) {
  if (!d || !out) return fail(HM_E_INVALID_ARGUMENT, "null argument");
  return guard([&] { *out = d->d.contains({x, y}) ? 1 : 0; });
}

hm_status hm_domain_distance(const hm_domain* d, double x, double y, double* out) {
  if (!d || !out) return fail(HM_E_INVALID_ARGUMENT, "null argument");
  return guard([&] { *out = hm::dist_to_boundary(d->d, {x, y}); });
}

hm_status hm_domain_bbox(const hm_domain* d, double* x0, double* y0, double* x1, double* y1) {
  if (!d || !x0 || !y0 || !x1 || !y1) return fail(HM_E_INVALID_ARGUMENT, "null argument");
  return guard([&] { d->d.bbox(*x0, *y0, *x1, *y1); });
}

hm_status hm_domain_outline_json(const hm_domain* d, int n, char** out) {
  if (!d || !out) return fail(HM_E_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    need(n >= 2, "need at least two points per piece");
    json pieces = json::array();
    for (auto& p : d->d.pieces()) {
      json poly = json::array();
      int k = p.kind == hm::PieceKind::Point ? 1 : n;
      for (int i = 0; i < k; ++i) poly.push_back(pt(p.at(k == 1 ? 0.0 : double(i) / (k - 1))));
      pieces.push_back({{"kind", p.kind == hm::PieceKind::Point ? "point" : "curve"}, {"points", poly}});
    }
    *out = dup(json{{"pieces", pieces}}.dump());
  });
}

hm_status hm_domain_to_json(const hm_domain* d, char** out) {
  if (!d || !out) return fail(HM_E_INVALID_ARGUMENT, "null argument");
  return guard([&] { *out = dup(hm::domain_spec_to_json(d->d.spec()).dump()); });
}

hm_status hm_metric(const hm_domain* d, const char* kind, double x1, double y1, double x2, double y2,
                    const hm_options* o, double* value, double* err) {
  if (!d || !kind || !value) return fail(HM_E_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    auto ctx = context(o);
    auto k = hm::metric_from_name(kind);
    hm::Point x{x1, y1}, y{x2, y2};
    hm::MetricValue v;
    switch (k) {
      case hm::MetricKind::Apollonian: v = hm::apollonian_distance(d->d, x, y, ctx.samples).metric; break;
      case hm::MetricKind::Quasihyperbolic: v = hm::quasihyperbolic_distance(d->d, x, y, ctx.grid).metric; break;
      case hm::MetricKind::ApollonianInner: v = hm::apollonian_inner_distance(d->d, x, y, ctx.grid).metric; break;
      case hm::MetricKind::LambdaLength: v = hm::lambda_length(d->d, x, y, ctx.grid).metric; break;
      case hm::MetricKind::Seittenranta: v = hm::seittenranta_distance(d->d, x, y, ctx.samples); break;
      case hm::MetricKind::LambdaApollonian:
        v = hm::lambda_apollonian_distance(d->d, x, y, ctx.samples, ctx.grid);
        break;
      case hm::MetricKind::JPrime: v = hm::j_prime_distance(d->d, x, y, ctx.grid); break;
      default: v.value = hm::evaluate_metric(d->d, k, x, y, ctx);
    }
    *value = v.value;
    if (err) *err = v.error_estimate;
  });
}

hm_status hm_metric_json(const hm_domain* d, const char* kind, double x1, double y1, double x2, double y2,
                         const hm_options* o, char** out) {
  if (!d || !kind || !out) return fail(HM_E_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    auto ctx = context(o);
    auto k = hm::metric_from_name(kind);
    hm::Point x{x1, y1}, y{x2, y2};
    json j{{"metric", hm::metric_name(k)}, {"x", pt(x)}, {"y", pt(y)}};
    auto with_path = [&](const hm::GeodesicResult& g) {
      j.update(metric_value_json(g.metric));
      json p = json::array();
      for (auto& v : g.path.vertices) p.push_back(pt(v));
      j["path"] = p;
    };
    switch (k) {
      case hm::MetricKind::Apollonian: {
        auto r = hm::apollonian_distance(d->d, x, y, ctx.samples);
        j.update(metric_value_json(r.metric));
        j["q_x"] = num(r.params.q_x);
        j["q_y"] = num(r.params.q_y);
        break;
      }
      case hm::MetricKind::Quasihyperbolic: with_path(hm::quasihyperbolic_distance(d->d, x, y, ctx.grid)); break;
      case hm::MetricKind::ApollonianInner: with_path(hm::apollonian_inner_distance(d->d, x, y, ctx.grid)); break;
      case hm::MetricKind::LambdaLength: with_path(hm::lambda_length(d->d, x, y, ctx.grid)); break;
      case hm::MetricKind::Seittenranta: j.update(metric_value_json(hm::seittenranta_distance(d->d, x, y, ctx.samples))); break;
      case hm::MetricKind::LambdaApollonian:
        j.update(metric_value_json(hm::lambda_apollonian_distance(d->d, x, y, ctx.samples, ctx.grid)));
        break;
      case hm::MetricKind::JPrime: j.update(metric_value_json(hm::j_prime_distance(d->d, x, y, ctx.grid))); break;
      case hm::MetricKind::JMin: j.update(metric_value_json(hm::j_distance(d->d, x, y, hm::JVariant::Min))); break;
      case hm::MetricKind::JProduct:
        j.update(metric_value_json(hm::j_distance(d->d, x, y, hm::JVariant::Product)));
        break;
    }
    *out = dup(j.dump());
  });
}

hm_status hm_density(const hm_domain* d, const char* kind, double x, double y, double theta, const hm_options* o,
                     double* out) {
  if (!d || !kind || !out) return fail(HM_E_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    auto ctx = context(o);
    std::string k = kind;
    hm::Point z{x, y};
    if (!d->d.contains(z)) throw hm::Error(hm::ErrorCode::PointOutsideDomain, "point is not interior to the domain");
    if (k == "delta") {
      *out = hm::dist_to_boundary(d->d, z);
    } else if (k == "quasihyperbolic" || k == "k") {
      *out = 1 / hm::dist_to_boundary(d->d, z);
    } else if (k == "ferrand" || k == "sigma") {
      *out = hm::ferrand_density(d->d, z, ctx.samples).value;
    } else if (k == "kp" || k == "mu") {
      *out = hm::kp_density(d->d, z, ctx.samples).metric.value;
    } else if (k == "kp_ferrand_ratio") {
      *out = hm::kp_density(d->d, z, ctx.samples).metric.value / hm::ferrand_density(d->d, z, ctx.samples).value;
    } else if (k == "apollonian") {
      *out = hm::apollonian_directed_density(d->d, z, hm::polar(1, theta), 0).value;
    } else if (k == "apollonian_min") {
      *out = directed_extreme(d->d, z, false);
    } else if (k == "apollonian_max") {
      *out = directed_extreme(d->d, z, true);
    } else {
      throw hm::Error(hm::ErrorCode::InvalidArgument, "unknown density kind: " + k);
    }
  });
}

hm_status hm_hma_json(const hm_domain* d, const double* seeds, int n, const hm_options* o, char** out) {
  if (!d || !out || (n > 0 && !seeds)) return fail(HM_E_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    auto ctx = context(o);
    std::vector<hm::Point> pts;
    for (int i = 0; i < n; ++i) pts.push_back({seeds[2 * i], seeds[2 * i + 1]});
    auto h = hm::hma_sample(d->d, pts, ctx.samples);
    json g = json::array();
    for (size_t i = 0; i < h.geodesics.size(); ++i) {
      auto& c = h.geodesics[i];
      g.push_back({{"seed", h.seed_index[i]},
                   {"p", pt(c.p)},
                   {"q", pt(c.q)},
                   {"center", pt(c.hyperbolic_center)},
                   {"tangent", pt(c.tangent_at_center)},
                   {"is_segment", c.is_segment},
                   {"arc_center", pt(c.arc_center)},
                   {"arc_radius", num(c.arc_radius)}});
    }
    *out = dup(json{{"geodesics", g}, {"skipped", h.skipped}}.dump());
  });
}

hm_status hm_relate_json(const hm_domain* d, const char* a, const char* b, int pairs_per_scale, int scales,
                         const hm_options* o, char** out) {
  if (!d || !a || !b || !out) return fail(HM_E_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    auto ctx = context(o);
    hm::SamplerOptions so;
    so.pairs_per_scale = pairs_per_scale;
    so.scales = scales;
    so.seed = seed_of(o);
    auto ka = hm::metric_from_name(a), kb = hm::metric_from_name(b);
    auto est = hm::estimate_relation(d->d, ka, kb, hm::sample_pairs(d->d, so), ctx);
    auto v = hm::classify(est);
    json j{{"metric_a", hm::metric_name(ka)},
           {"metric_b", hm::metric_name(kb)},
           {"estimate", hm::estimate_to_json(est)},
           {"verdict", hm::verdict_name(v.cls)},
           {"note", v.confidence_note}};
    *out = dup(j.dump());
  });
}

hm_status hm_scenarios(const char* suite, const hm_options* o, char** js, char** csv) {
  if (!suite || !js) return fail(HM_E_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    hm::ScenarioOptions so;
    so.ctx = context(o);
    so.seed = seed_of(o);
    std::string s = suite;
    auto first = s.find_first_not_of(" \t\r\n");
    bool is_doc = first != std::string::npos && (s[first] == '{' || s[first] == '[');
    auto list = is_doc ? hm::suite_from_json(json::parse(s)) : hm::default_suite(s);
    auto rep = hm::run_scenarios(list, so);
    *js = dup(hm::report_to_json(rep).dump());
    if (csv) *csv = dup(hm::report_to_csv(rep));
  });
}

hm_status hm_series_from_json(const char* text, hm_series** out) {
  if (!text || !out) return fail(HM_E_INVALID_ARGUMENT, "null argument");
  return guard([&] { *out = new hm_series{hm::series_from_json(json::parse(text))}; });
}

hm_status hm_series_named(const char* name, int N, hm_series** out) {
  if (!name || !out) return fail(HM_E_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    need(N >= 1, "truncation must be at least 1");
    std::string n = name;
    hm::PowerSeries s;
    auto arg = [&](size_t i) {
      std::vector<double> v;
      size_t p = n.find('(');
      need(p != std::string::npos, "missing parameters");
      std::string body = n.substr(p + 1, n.find(')') - p - 1);
      size_t start = 0;
      while (start <= body.size()) {
        size_t c = body.find(',', start);
        v.push_back(std::stod(body.substr(start, c == std::string::npos ? std::string::npos : c - start)));
        if (c == std::string::npos) break;
        start = c + 1;
      }
      need(i < v.size(), "missing parameters");
      return v[i];
    };
    if (n == "identity") {
      s = hm::identity_series(N);
    } else if (n == "koebe") {
      s = hm::koebe_series(N);
    } else if (n == "ell") {
      s = hm::ell_series(N);
    } else if (n.rfind("g_beta", 0) == 0) {
      s = hm::g_beta_series(arg(0), N);
    } else if (n.rfind("extremal_AB", 0) == 0) {
      s = hm::extremal_AB_series(arg(0), arg(1), N);
    } else {
      throw hm::Error(hm::ErrorCode::InvalidArgument, "unknown series family: " + n);
    }
    *out = new hm_series{s};
  });
}

void hm_series_free(hm_series* s) { delete s; }

hm_status hm_series_to_json(const hm_series* s, char** out) {
  if (!s || !out) return fail(HM_E_INVALID_ARGUMENT, "null argument");
  return guard([&] { *out = dup(hm::series_to_json(s->s).dump()); });
}

hm_status hm_series_evaluate(const hm_series* s, double re, double im, double* ore, double* oim) {
  if (!s || !ore || !oim) return fail(HM_E_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    auto v = hm::evaluate(s->s, {re, im});
    *ore = v.real();
    *oim = v.imag();
  });
}

hm_status hm_series_transform(const hm_series* s, const char* op, double p1, double p2, hm_series** out) {
  if (!s || !op || !out) return fail(HM_E_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    std::string o = op;
    hm::PowerSeries r;
    if (o == "alexander") r = hm::alexander(s->s);
    else if (o == "libera") r = hm::libera(s->s);
    else if (o == "bernardi") r = hm::bernardi(s->s, p1);
    else if (o == "bbc") r = hm::bbc_transform(s->s, p1, p2);
    else if (o == "reciprocal") r = hm::reciprocal_form(s->s, p1);
    else if (o == "hornich_scale") r = hm::hornich_scale(p1, s->s);
    else if (o == "derivative") r = hm::derivative(s->s);
    else if (o == "pre_schwarzian") r = hm::pre_schwarzian(s->s);
    else throw hm::Error(hm::ErrorCode::InvalidArgument, "unknown transform: " + o);
    *out = new hm_series{r};
  });
}

hm_status hm_norm_named(const char* name, int rays, double* value, double* err) {
  if (!name || !value) return fail(HM_E_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    hm::DiskSampler ds;
    if (rays > 0) ds.rays = rays;
    auto r = hm::norm(hm::named_function(name), ds);
    *value = r.value;
    if (err) *err = r.error_estimate;
  });
}

hm_status hm_norm_series(const hm_series* s, int rays, double* value, double* err) {
  if (!s || !value) return fail(HM_E_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    hm::DiskSampler ds;
    if (rays > 0) ds.rays = rays;
    auto r = hm::norm(s->s, ds);
    *value = r.value;
    if (err) *err = r.error_estimate;
  });
}

hm_status hm_membership_json(const hm_series* f, const char* test, double mu, double alpha, double lambda,
                             char** out) {
  if (!f || !test || !out) return fail(HM_E_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    std::string t = test;
    auto b = hm::reciprocal_form(f->s, mu);
    json arr = json::array();
    auto add = [&](const hm::MembershipReport& r) {
      json j = hm::membership_to_json(r);
      j["slack"] = num(r.slack);
      j["tail_bound"] = num(r.tail_bound);
      arr.push_back(j);
    };
    bool all = t == "all";
    bool nonneg = true;
    for (size_t n = 1; n < b.a.size(); ++n)
      if (b.a[n].real() < 0 || std::abs(b.a[n].imag()) > 1e-14) nonneg = false;
    if (t == "sp_necessary" || (all && nonneg)) add(hm::sp_necessary(b, mu, alpha));
    if (t == "sp_sufficient" || all) add(hm::sp_sufficient(b, mu, alpha));
    if (t == "u" || all) add(hm::u_membership(b, lambda, mu));
    if (t == "u_exact" || (all && nonneg && mu <= 1)) add(hm::u_exact_nonneg(b, mu));
    if (t == "starlike_order" || (all && nonneg)) add(hm::starlike_order_screen(b, mu, alpha));
    if (t == "p2lambda" || all) add(hm::p2lambda_screen(b, lambda));
    if (t == "area" || all) add(hm::area_coefficient_check(b, mu));
    if (arr.empty()) throw hm::Error(hm::ErrorCode::InvalidArgument, "unknown membership test: " + t);
    json j{{"mu", mu}, {"alpha", alpha}, {"lambda", lambda}, {"reports", arr}};
    if (b.a.size() > 1 && std::abs(b.a[1]) <= std::sqrt(2.0)) j["lambda_star"] = hm::lambda_star_of(b.a[1]);
    *out = dup(j.dump());
  });
}

hm_status hm_radius_json(const char* name, double p1, double p2, char** out) {
  if (!name || !out) return fail(HM_E_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    std::string n = name;
    json j;
    if (n == "sp") {
      j = hm::radius_to_json(hm::radius_sp(p1, p2));
    } else if (n == "sp_second") {
      j = hm::radius_to_json(hm::radius_sp_second_coeff(p1, p2));
    } else if (n == "u") {
      double r = hm::radius_u(p1, p2);
      j = {{"r0", r}, {"residual", std::abs(hm::radius_u_residual(p1, p2, r))}, {"method", "CLOSED_FORM"}};
    } else {
      throw hm::Error(hm::ErrorCode::InvalidArgument, "unknown radius: " + n);
    }
    j["name"] = n;
    *out = dup(j.dump());
  });
}

hm_status hm_bound_json(const char* name, const double* p, int n, int strict, char** out) {
  if (!name || !out || (n > 0 && !p)) return fail(HM_E_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    std::string nm = name;
    auto want = [&](int k) {
      if (n != k)
        throw hm::Error(hm::ErrorCode::InvalidArgument,
                        "bound " + nm + " takes " + std::to_string(k) + " parameters, got " + std::to_string(n));
    };
    json j;
    if (nm == "L") {
      want(3);
      j = bound_json(nm, hm::bound_L_beta(p[0], p[1], p[2]));
      if (p[0] == 1) j["closed_form"] = num(hm::L_one_closed(p[1], p[2]));
    } else if (nm == "bernardi") {
      want(1);
      j = closed_json(nm, hm::bound_bernardi_F(p[0]));
    } else if (nm == "N") {
      want(2);
      j = closed_json(nm, hm::bound_NAB(p[0], p[1]));
    } else if (nm == "M") {
      want(4);
      j = bound_json(nm, hm::bound_MABbc(p[0], p[1], p[2], p[3], strict != 0));
    } else if (nm == "D") {
      want(3);
      j = bound_json(nm, hm::bound_DABgamma(p[0], p[1], p[2], strict != 0));
    } else if (nm == "strongly_starlike") {
      want(2);
      auto s = hm::bound_strongly_starlike(p[0], p[1]);
      j = {{"name", nm},      {"value", num(s.L)}, {"extremizer", num(s.k)},     {"method", "BISECTION"},
           {"total", s.total}, {"h_at_k", s.h_at_k}, {"bracket", {s.lo, s.hi}}, {"notes", json::array()}};
    } else if (nm == "delta_orders") {
      want(3);
      j = closed_json(nm, hm::delta_orders(p[0], p[1], p[2]));
    } else if (nm == "delta_bernardi") {
      want(2);
      j = closed_json(nm, hm::delta_bernardi(p[0], p[1]));
    } else if (nm == "delta_gamma") {
      want(1);
      j = closed_json(nm, hm::delta_gamma(p[0]));
      j["hypergeometric_route"] = num(hm::delta_bernardi(-p[0], p[0]));
    } else if (nm == "lambda_delta") {
      want(2);
      j = closed_json(nm, hm::lambda_delta(p[0], p[1]));
    } else if (nm == "lambda_star") {
      want(1);
      j = closed_json(nm, hm::lambda_star(p[0]));
    } else if (nm == "lambda_star_gamma") {
      want(2);
      j = closed_json(nm, hm::lambda_star_gamma(p[0], p[1]));
    } else if (nm == "lambda_R_gamma") {
      want(2);
      j = closed_json(nm, hm::lambda_R_gamma(p[0], p[1]));
      j["method"] = "BISECTION";
    } else {
      throw hm::Error(hm::ErrorCode::InvalidArgument, "unknown bound: " + nm);
    }
    *out = dup(j.dump());
  });
}

hm_status hm_hypergeometric(double a, double b, double c, double re, double im, double* ore, double* oim) {
  if (!ore || !oim) return fail(HM_E_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    auto v = hm::hypergeometric(a, b, c, {re, im});
    *ore = v.real();
    *oim = v.imag();
  });
}

}  // extern "C"
