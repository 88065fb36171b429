// one PASS/FAIL line per acceptance criterion; exit status 1 when any line fails
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <mutex>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hypmetrica/bounds.hpp"
#include "hypmetrica/domain_json.hpp"
#include "hypmetrica/errors.hpp"
#include "hypmetrica/geometry.hpp"
#include "hypmetrica/metrics.hpp"
#include "hypmetrica/parallel.hpp"
#include "hypmetrica/relations.hpp"
#include "hypmetrica/univalent.hpp"

using namespace hm;

namespace {

const std::vector<std::string> kCatalog = {"disk",          "halfplane",       "strip",
                                           "annulus",       "punctured_disk",  "punctured_plane",
                                           "square",        "lollipop",        "slit_halfplane",
                                           "disk_exterior", "square_exterior", "square_minus_disk",
                                           "halfstrip",     "halfstrip_minus_rectangle"};

Domain named(const std::string& n) { return Domain(named_domain(n)); }

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void need(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [miss: " << what << "]";
    }
  }
};

int failures = 0;

void criterion(int id, const std::function<void(Outcome&)>& body) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    body(o);
  } catch (const Error& e) {
    o.pass = false;
    o.detail << " [error " << error_name(e.code()) << ": " << e.what() << "]";
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail << " [exception: " << e.what() << "]";
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!o.pass) ++failures;
  std::printf("%s criterion %d (%.1fs):%s\n", o.pass ? "PASS" : "FAIL", id, secs, o.detail.str().c_str());
  std::fflush(stdout);
}

std::string fmt(double v) {
  char b[64];
  std::snprintf(b, sizeof b, "%.12g", v);
  return b;
}

}  // namespace

int main() {
  criterion(1, [](Outcome& o) {
    double a = apollonian_distance(named("disk"), {0, 0}, {0.5, 0}, 10000).metric.value;
    o.detail << " alpha=" << fmt(a) << " log3=" << fmt(std::log(3.0));
    o.need(std::abs(a - std::log(3.0)) <= 1e-3, "alpha within 1e-3 of log 3");
  });

  criterion(2, [](Outcome& o) {
    auto s = named("strip");
    double j = j_distance(s, {3, 0}, {-3, 0}, JVariant::Min).value;
    double k = quasihyperbolic_distance(s, {3, 0}, {-3, 0}).metric.value;
    o.detail << " j=" << fmt(j) << " k=" << fmt(k);
    o.need(std::abs(j - std::log(7.0)) <= 1e-12, "j = log 7");
    o.need(std::abs(k - 6) <= 0.01 * 6, "k within 1% of 6");
  });

  criterion(3, [](Outcome& o) {
    MetricContext ctx;
    ctx.samples = 2048;
    const double tol = ctx.grid.tol;
    struct Row {
      double a, j, jp, k, at;
    };
    std::vector<std::pair<std::string, PointPair>> work;
    for (auto& n : kCatalog) {
      SamplerOptions so;
      so.pairs_per_scale = 9;
      so.scales = 4;
      for (auto& sc : sample_pairs(named(n), so))
        for (auto& p : sc.pairs) work.push_back({n, p});
    }
    std::vector<Row> rows(work.size());
    std::vector<std::string> errs(work.size());
    parallel_for(work.size(), [&](size_t i) {
      auto d = named(work[i].first);
      auto [x, y] = work[i].second;
      try {
        rows[i] = {evaluate_metric(d, MetricKind::Apollonian, x, y, ctx), evaluate_metric(d, MetricKind::JMin, x, y, ctx),
                   evaluate_metric(d, MetricKind::JProduct, x, y, ctx),
                   evaluate_metric(d, MetricKind::Quasihyperbolic, x, y, ctx),
                   evaluate_metric(d, MetricKind::ApollonianInner, x, y, ctx)};
      } catch (const std::exception& e) {
        errs[i] = work[i].first + ": " + e.what();
      }
    });
    int bad_aj = 0, bad_jk = 0, bad_aat = 0, bad_atk = 0, bad_atk2 = 0, bad_jp = 0, nerr = 0;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (!errs[i].empty()) {
        if (nerr++ == 0) o.detail << " first error: " << errs[i];
        continue;
      }
      auto& r = rows[i];
      bad_aj += !(r.a <= 2 * r.j + 1e-6);
      bad_jk += !(r.j <= r.k + tol);
      bad_aat += !(r.a <= r.at + tol);
      bad_atk += !(r.at + tol <= r.k + tol);
      bad_atk2 += !(r.at <= 2 * r.k + tol);
      bad_jp += !(r.j <= r.jp * (1 + 1e-12) && r.jp <= 2 * r.j * (1 + 1e-12));
    }
    o.detail << " pairs=" << work.size() << " errors=" << nerr << " violations: alpha<=2j " << bad_aj << ", j<=k "
             << bad_jk << ", alpha<=alpha_tilde " << bad_aat << ", alpha_tilde<=k " << bad_atk << ", j<=j_product<=2j "
             << bad_jp << "; constant-2 form alpha_tilde<=2k " << bad_atk2;
    o.need(work.size() >= 500, "at least 500 pairs");
    o.need(nerr == 0, "every pair evaluated");
    o.need(bad_aj == 0, "alpha <= 2 j + 1e-6");
    o.need(bad_jk == 0, "j <= k + tol");
    o.need(bad_aat == 0, "alpha <= alpha_tilde + tol");
    o.need(bad_atk == 0, "alpha_tilde + tol <= k + tol");
    o.need(bad_jp == 0, "j <= j_product <= 2 j");
  });

  criterion(4, [](Outcome& o) {
    int points = 0, bad = 0;
    std::vector<std::string> skipped;
    std::mutex mu;
    for (auto& n : kCatalog) {
      auto d = named(n);
      auto pts = sample_points(d, 100, 42);
      std::atomic<int> b{0};
      std::string err;
      parallel_for(pts.size(), [&](size_t i) {
        try {
          Point z = pts[i];
          double delta = dist_to_boundary(d, z);
          double s = ferrand_density(d, z, 2048).value, m = kp_density(d, z, 2048).metric.value;
          bool ok = delta * s >= 1 - 1e-6 && delta * s <= 2 + 1e-6 && delta * m >= 1 - 1e-6 && delta * m <= 2 + 1e-6 &&
                    s <= m * (1 + 1e-9) && m <= 2 / std::sqrt(3.0) * s * (1 + 2e-2);
          if (!ok) b++;
        } catch (const std::exception& e) {
          std::lock_guard<std::mutex> g(mu);
          if (err.empty()) err = e.what();
          b++;
        }
      });
      points += pts.size();
      bad += b;
      if (!err.empty()) o.detail << " " << n << ": " << err;
    }
    o.detail << " points=" << points << " violations=" << bad;
    o.need(bad == 0, "all sandwiches hold");
  });

  criterion(5, [](Outcome& o) {
    auto ann = named("annulus");
    auto pts = sample_points(ann, 100, 5);
    std::vector<double> rel(pts.size());
    parallel_for(pts.size(), [&](size_t i) {
      double s = ferrand_density(ann, pts[i], 4096).value, m = kp_density(ann, pts[i], 4096).metric.value;
      rel[i] = std::abs(m - s) / s;
    });
    double worst = 0;
    for (double r : rel) worst = std::max(worst, r);
    o.detail << " max |mu-sigma|/sigma=" << fmt(worst);
    o.need(worst <= 2e-2, "within 2e-2");
  });

  criterion(6, [](Outcome& o) {
    auto rep = run_scenarios(default_suite("table1"));
    int fails = 0;
    for (auto& c : rep.checks)
      if (!c.pass) {
        ++fails;
        o.detail << " " << c.scenario << "/" << c.relation << " expected " << c.expected << " got " << c.observed;
      }
    for (auto& e : rep.errors) o.detail << " error " << e;
    o.detail << " checks=" << rep.checks.size() << " mismatches=" << fails;
    o.need(rep.all_pass && rep.errors.empty(), "all verdicts match");
  });

  criterion(7, [](Outcome& o) {
    double k = norm(koebe_function()).value, g = norm(g_beta_function(0.9)).value;
    double l1 = bound_L_beta(1, 1, 2).value, l2 = bound_L_beta(1, 2, 3).value;
    o.detail << " koebe=" << fmt(k) << " g0.9=" << fmt(g) << " L(1,1,2)=" << fmt(l1) << " L(1,2,3)=" << fmt(l2);
    o.need(std::abs(k - 6) <= 1e-4, "koebe norm");
    o.need(std::abs(g - 1.4) <= 1e-3, "g_0.9 norm");
    o.need(std::abs(l1 - (4 - 2 * std::sqrt(3.0))) <= 1e-8, "L(1,1,2)");
    o.need(std::abs(l2 - (3 - std::sqrt(5.0))) <= 1e-8, "L(1,2,3)");
    for (double gm : {0.0, 0.5, 1.0, 3.0}) {
      double a = bound_bernardi_F(gm), b = bound_L_beta(1, gm + 1, gm + 2).value;
      o.need(std::abs(a - b) <= 1e-8, "bernardi F at gamma " + fmt(gm));
    }
  });

  criterion(8, [](Outcome& o) {
    double n = bound_NAB(1, -1), d0 = bound_DABgamma(1, -1, 0).value, d1 = bound_DABgamma(1, -1, 1).value;
    o.detail << " N(1,-1)=" << fmt(n) << " D(1,-1,0)=" << fmt(d0) << " D(1,-1,1)=" << fmt(d1)
             << " target 8/3=" << fmt(8.0 / 3);
    o.need(std::abs(n - 4) <= 1e-6, "N(1,-1) = 4");
    o.need(std::abs(d0 - 2) <= 1e-6, "D(1,-1,0) = 2");
    o.need(std::abs(d1 - 8.0 / 3) <= 1e-6, "D(1,-1,1) = 8/3");
  });

  criterion(9, [](Outcome& o) {
    for (double b : {0.8, 0.9, 1.0}) {
      double direct = norm(alexander_g_beta_function(b)).value, formula = bound_L_beta(b, 1, 2).value;
      o.detail << " beta=" << fmt(b) << ": " << fmt(direct) << " vs " << fmt(formula);
      o.need(std::abs(direct - formula) <= 1e-4, "beta " + fmt(b));
    }
  });

  criterion(10, [](Outcome& o) {
    double r = radius_u(0, 1), res = radius_u_residual(0, 1, r);
    auto sp = radius_sp(0.5, 0);
    o.detail << " radius_u=" << fmt(r) << " residual=" << fmt(res) << " radius_sp=" << fmt(sp.r0)
             << " residual=" << fmt(sp.residual) << " quadrature gap=" << fmt(sp.cross_check);
    o.need(std::abs(r - 1 / std::sqrt(2.0)) <= 1e-12, "radius_u = 1/sqrt 2");
    o.need(std::abs(res) < 1e-10, "radius_u residual");
    o.need(std::abs(sp.residual) < 1e-10, "radius_sp residual");
    o.need(std::abs(sp.cross_check) < 1e-11, "quadratures agree");
  });

  criterion(11, [](Outcome& o) {
    double g = delta_gamma(1), h = delta_bernardi(-1, 1);
    double f = hypergeometric(1, 4, 3, 0.5).real();
    o.detail << " closed=" << fmt(g) << " hypergeometric=" << fmt(h) << " F(1,4;3;1/2)=" << fmt(f);
    o.need(std::abs(g + 0.25) <= 1e-10, "closed form");
    o.need(std::abs(h + 0.25) <= 1e-10, "hypergeometric route");
    o.need(std::abs(f - 8.0 / 3) <= 1e-10, "F(1,4;3;1/2)");
  });

  criterion(12, [](Outcome& o) {
    auto a = sp_single_term(2, 1.0 / 3, 0), b = sp_single_term(3, 0.5 / 4.5, 0.5);
    auto area = area_coefficient_check(reciprocal_form(koebe_series(64), 1), 1);
    o.detail << " slack(2,0)=" << fmt(a.slack) << " slack(3,0.5)=" << fmt(b.slack) << " area slack=" << fmt(area.slack);
    o.need(std::abs(a.slack) <= 1e-12 && a.satisfied, "(2,0) boundary");
    o.need(std::abs(b.slack) <= 1e-12 && b.satisfied, "(3,0.5) boundary");
    o.need(std::abs(area.slack) <= 1e-12, "koebe area sum = 1");
  });

  criterion(13, [](Outcome& o) {
    // metric axioms, round robin over domains and metrics
    MetricContext ctx;
    ctx.samples = 1024;
    const double tol = 3 * ctx.grid.tol;
    const std::vector<std::string> doms = {"disk", "square", "annulus", "strip", "lollipop", "punctured_disk"};
    const std::vector<MetricKind> kinds = {MetricKind::Apollonian, MetricKind::JMin, MetricKind::JProduct,
                                           MetricKind::Seittenranta, MetricKind::Quasihyperbolic};
    std::vector<std::vector<Point>> pts;
    for (auto& n : doms) pts.push_back(sample_points(named(n), 300, 11));
    const int triples = 1000;
    std::atomic<int> bad_axiom{0};
    parallel_for(triples, [&](size_t t) {
      size_t di = t % doms.size();
      auto d = named(doms[di]);
      auto k = kinds[(t / doms.size()) % kinds.size()];
      auto& P = pts[di];
      size_t base = (3 * (t / doms.size())) % (P.size() - 2);
      Point x = P[base], y = P[base + 1], z = P[base + 2];
      double xy = evaluate_metric(d, k, x, y, ctx), yx = evaluate_metric(d, k, y, x, ctx);
      double yz = evaluate_metric(d, k, y, z, ctx), xz = evaluate_metric(d, k, x, z, ctx);
      double xx = evaluate_metric(d, k, x, x, ctx);
      bool ok = std::abs(xy - yx) <= tol * std::max(1.0, xy) && xz <= (xy + yz) * (1 + tol) + 1e-12 && xy >= 0 &&
                std::abs(xx) <= 1e-12;
      if (!ok) bad_axiom++;
    });
    o.detail << " axiom violations=" << bad_axiom << "/" << triples;
    o.need(bad_axiom == 0, "metric axioms");

    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> U(-10, 10);
    double worst = 0;
    for (int i = 0; i < 10000; ++i) {
      Point c{U(rng), U(rng)}, p{U(rng), U(rng)};
      worst = std::max(worst, dist(invert(c, invert(c, p)), p) / std::max(1.0, norm(p)));
    }
    o.detail << " inversion=" << fmt(worst);
    o.need(worst <= 1e-10, "inversion involution");

    std::normal_distribution<double> N(0, 1);
    int jung_bad = 0;
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<Point> v;
      for (int i = 0; i < 2 + trial % 40; ++i) v.push_back({N(rng), N(rng)});
      double diam = 0;
      for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = i + 1; j < v.size(); ++j) diam = std::max(diam, dist(v[i], v[j]));
      double r = smallest_enclosing_disk(v).radius;
      jung_bad += !(r >= diam / 2 - 1e-12 && r <= diam / std::sqrt(3.0) + 1e-12);
    }
    o.need(jung_bad == 0, "Jung bounds");

    std::uniform_real_distribution<double> X(0, 50), C(0, 5);
    int bern_bad = 0;
    for (int i = 0; i < 10000; ++i) {
      double x = X(rng), c = C(rng);
      double lhs = std::log1p(c * x), rhs = c * std::log1p(x);
      bern_bad += c >= 1 ? !(lhs <= rhs * (1 + 1e-14) + 1e-15) : !(lhs >= rhs * (1 - 1e-14) - 1e-15);
    }
    o.need(bern_bad == 0, "Bernoulli inequalities");

    bool same = true;
    for (auto f : {koebe_series(50), g_beta_series(0.85, 50), ell_series(50)}) {
      auto b0 = bernardi(f, 0), al = alexander(f);
      for (int n = 0; n <= 50; ++n) same &= b0[n] == al[n];
    }
    o.need(same, "bernardi(., 0) = alexander");

    double fd_worst = 0;
    for (auto [a, b, c] : {std::tuple{1.0, 1.0, 2.0}, {1.0, 2.0, 3.0}, {0.5, 1.5, 2.5}, {3.0, 3.0, 4.0}})
      for (int i = 0; i <= 16; ++i) {
        double x = 0.8 * i / 16, h = 1e-5;
        double fd = (hypergeometric(a, b, c, x + h).real() - hypergeometric(a, b, c, x - h).real()) / (2 * h);
        double dv = hypergeometric_derivative(a, b, c, x).real();
        fd_worst = std::max(fd_worst, std::abs(fd - dv) / std::max(1.0, std::abs(dv)));
      }
    o.detail << " F' gap=" << fmt(fd_worst);
    o.need(fd_worst <= 1e-6, "F' against differences");

    double worst_deg = 0;
    auto ann = named("annulus");
    std::vector<Point> seeds;
    for (int k = 0; k < 8; ++k) seeds.push_back(polar(2 + 0.2 * (k % 3), 2 * kPi * k / 8));
    for (auto& g : hma_sample(ann, seeds, 4096).geodesics) {
      double c = std::abs(dot(unit(g.tangent_at_center), unit(g.hyperbolic_center)));
      worst_deg = std::max(worst_deg, std::acos(std::min(1.0, c)) * 180 / kPi);
    }
    for (auto& g : hma_sample(named("strip"), {{-1, 0.3}, {0, 0.3}, {2, -0.5}}, 4096).geodesics)
      worst_deg = std::max(worst_deg, std::asin(std::min(1.0, std::abs(unit(g.tangent_at_center).x))) * 180 / kPi);
    o.detail << " hma angle=" << fmt(worst_deg) << "deg";
    o.need(worst_deg <= 2, "hma orthogonality");
  });

  std::printf("%d of 13 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
