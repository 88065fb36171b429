#include "hypmetrica/relations.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "hypmetrica/numeric.hpp"
#include "hypmetrica/parallel.hpp"

namespace hm {

namespace {

struct KindName {
  MetricKind k;
  const char* name;
};

const KindName kKinds[] = {
    {MetricKind::Apollonian, "apollonian"},
    {MetricKind::JMin, "j"},
    {MetricKind::JProduct, "j_product"},
    {MetricKind::Quasihyperbolic, "quasihyperbolic"},
    {MetricKind::ApollonianInner, "apollonian_inner"},
    {MetricKind::Seittenranta, "seittenranta"},
    {MetricKind::LambdaLength, "lambda"},
    {MetricKind::LambdaApollonian, "lambda_apollonian"},
    {MetricKind::JPrime, "j_prime"},
};

const char* kVerdicts[] = {"APPROX", "MUCH_LESS", "MUCH_GREATER", "INCOMPARABLE",
                           "LESS_ONLY", "GREATER_ONLY", "UNDECIDED"};

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

void clipped_box(const Domain& d, double window, double& x0, double& y0, double& x1, double& y1) {
  d.bbox(x0, y0, x1, y1);
  x0 = std::max(x0, -window);
  y0 = std::max(y0, -window);
  x1 = std::min(x1, window);
  y1 = std::min(y1, window);
  if (!(x1 > x0) || !(y1 > y0)) d.bbox(x0, y0, x1, y1);
}

Point random_interior(const Domain& d, std::mt19937_64& rng, double x0, double y0, double x1, double y1) {
  for (int tries = 0; tries < 100000; ++tries) {
    Point p{x0 + (x1 - x0) * uniform01(rng), y0 + (y1 - y0) * uniform01(rng)};
    if (d.contains(p)) return p;
  }
  throw Error(ErrorCode::DegenerateBoundary, "could not sample an interior point");
}

}  // namespace

const char* metric_name(MetricKind k) {
  for (auto& e : kKinds)
    if (e.k == k) return e.name;
  return "?";
}

MetricKind metric_from_name(const std::string& s) {
  for (auto& e : kKinds)
    if (s == e.name) return e.k;
  if (s == "alpha") return MetricKind::Apollonian;
  if (s == "k") return MetricKind::Quasihyperbolic;
  if (s == "j_min") return MetricKind::JMin;
  if (s == "alpha_tilde") return MetricKind::ApollonianInner;
  if (s == "alpha_prime") return MetricKind::LambdaApollonian;
  throw Error(ErrorCode::MetricUnavailable, "unknown metric \"" + s + "\"");
}

double evaluate_metric(const Domain& d, MetricKind k, Point x, Point y, const MetricContext& ctx) {
  switch (k) {
    case MetricKind::Apollonian: return apollonian_distance(d, x, y, ctx.samples).metric.value;
    case MetricKind::JMin: return j_distance(d, x, y, JVariant::Min).value;
    case MetricKind::JProduct: return j_distance(d, x, y, JVariant::Product).value;
    case MetricKind::Quasihyperbolic: return quasihyperbolic_distance(d, x, y, ctx.grid).metric.value;
    case MetricKind::ApollonianInner: return apollonian_inner_distance(d, x, y, ctx.grid).metric.value;
    case MetricKind::Seittenranta: return seittenranta_distance(d, x, y, ctx.samples).value;
    case MetricKind::LambdaLength: return lambda_length(d, x, y, ctx.grid).metric.value;
    case MetricKind::LambdaApollonian: return lambda_apollonian_distance(d, x, y, ctx.samples, ctx.grid).value;
    case MetricKind::JPrime: return j_prime_distance(d, x, y, ctx.grid).value;
  }
  throw Error(ErrorCode::MetricUnavailable, "metric not available");
}

std::vector<Point> sample_points(const Domain& d, int n, std::uint64_t seed, double window) {
  double x0, y0, x1, y1;
  clipped_box(d, window, x0, y0, x1, y1);
  std::mt19937_64 rng(seed);
  std::vector<Point> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(random_interior(d, rng, x0, y0, x1, y1));
  return out;
}

std::vector<PairScale> sample_pairs(const Domain& d, const SamplerOptions& o) {
  if (o.scales < 1 || o.pairs_per_scale < 1) throw Error(ErrorCode::InvalidArgument, "sampler needs scales and pairs");
  double x0, y0, x1, y1;
  clipped_box(d, o.window, x0, y0, x1, y1);
  double diam = std::hypot(x1 - x0, y1 - y0);
  std::mt19937_64 rng(o.seed);
  const double hug[] = {1e-1, 1e-2, 1e-3};
  std::vector<PairScale> out;
  for (int s = 0; s < o.scales; ++s) {
    double f = o.scales == 1 ? 0.0 : static_cast<double>(s) / (o.scales - 1);
    PairScale ps;
    ps.scale = 0.5 * diam * std::pow(1e-3, f);
    int hugging = 0;
    for (int tries = 0; static_cast<int>(ps.pairs.size()) < o.pairs_per_scale; ++tries) {
      if (tries > 200 * o.pairs_per_scale) throw Error(ErrorCode::DegenerateBoundary, "pair sampler starved");
      Point x = random_interior(d, rng, x0, y0, x1, y1);
      bool hugs = ps.pairs.size() % 3 == 2;
      if (hugs) {
        auto [pi, t] = d.nearest(x);
        Point q = d.pieces()[pi].at(t);
        double h = hug[hugging % 3] * diam;
        double r = dist(x, q);
        if (r > h) {
          x = q + (h / r) * (x - q);
          if (!d.contains(x)) continue;
        }
      }
      double sep = ps.scale;
      if (hugs) sep = std::min(sep, 0.5 * d.boundary_distance(x));
      double phi = 2 * kPi * uniform01(rng);
      Point y = x + polar(sep, phi);
      if (!d.contains(y)) continue;
      if (hugs) ++hugging;
      ps.pairs.push_back({x, y});
    }
    out.push_back(std::move(ps));
  }
  return out;
}

RelationEstimate relation_from_values(const std::vector<PairScale>& scales, const std::vector<std::vector<double>>& va,
                                      const std::vector<std::vector<double>>& vb) {
  RelationEstimate e;
  for (size_t s = 0; s < scales.size(); ++s) {
    ScaleRatios h;
    h.scale = scales[s].scale;
    h.inf_ratio = kInf;
    for (size_t i = 0; i < scales[s].pairs.size(); ++i) {
      double a = va[s][i], b = vb[s][i];
      if (!(b > 1e-12) || !std::isfinite(a)) continue;
      double r = a / b;
      ++h.pairs;
      h.sup_ratio = std::max(h.sup_ratio, r);
      h.inf_ratio = std::min(h.inf_ratio, r);
      if (r > e.sup_ratio) {
        e.sup_ratio = r;
        e.argmax_pair = scales[s].pairs[i];
      }
      if (r < e.inf_ratio) {
        e.inf_ratio = r;
        e.argmin_pair = scales[s].pairs[i];
      }
    }
    e.sample_pairs += h.pairs;
    if (h.pairs) e.refinement_history.push_back(h);
  }
  if (e.sample_pairs == 0) e.inf_ratio = 0;
  return e;
}

RelationEstimate estimate_relation(const Domain& d, MetricKind a, MetricKind b, const std::vector<PairScale>& scales,
                                   const MetricContext& ctx) {
  std::vector<PointPair> flat;
  for (auto& s : scales) flat.insert(flat.end(), s.pairs.begin(), s.pairs.end());
  std::vector<double> fa(flat.size()), fb(flat.size());
  parallel_for(flat.size(), [&](size_t i) {
    fa[i] = evaluate_metric(d, a, flat[i].first, flat[i].second, ctx);
    fb[i] = a == b ? fa[i] : evaluate_metric(d, b, flat[i].first, flat[i].second, ctx);
  });
  std::vector<std::vector<double>> va, vb;
  size_t k = 0;
  for (auto& s : scales) {
    va.emplace_back(fa.begin() + k, fa.begin() + k + s.pairs.size());
    vb.emplace_back(fb.begin() + k, fb.begin() + k + s.pairs.size());
    k += s.pairs.size();
  }
  return relation_from_values(scales, va, vb);
}

const char* verdict_name(Verdict v) { return kVerdicts[static_cast<int>(v)]; }

Verdict verdict_from_name(const std::string& s) {
  for (int i = 0; i < 7; ++i)
    if (s == kVerdicts[i]) return static_cast<Verdict>(i);
  throw Error(ErrorCode::InvalidArgument, "unknown verdict \"" + s + "\"");
}

bool diverging_sequence(const std::vector<double>& v, const ClassifyThresholds& t) {
  if (v.size() < 2) return false;
  for (size_t i = 0; i + 1 < v.size(); ++i)
    if (!(v[i + 1] >= t.step_factor * v[i])) return false;
  return v.back() >= t.total_factor * v.front();
}

RelationVerdict classify(const RelationEstimate& e, const ClassifyThresholds& t) {
  RelationVerdict r;
  const auto& h = e.refinement_history;
  if (h.size() < 3) {
    r.confidence_note = "fewer than 3 scales";
    return r;
  }
  std::vector<double> sups, inv_infs;
  for (auto& s : h) {
    sups.push_back(s.sup_ratio);
    inv_infs.push_back(s.inf_ratio > 0 ? 1 / s.inf_ratio : kInf);
  }
  bool sup_up = diverging_sequence(sups, t);
  bool inf_down = diverging_sequence(inv_infs, t);
  bool sup_bounded = !sup_up && e.sup_ratio <= t.C;
  bool inf_bounded = !inf_down && e.inf_ratio >= 1 / t.C;
  char buf[200];
  std::snprintf(buf, sizeof buf, "evidence over %zu scales, %d pairs; ratios in [%.4g, %.4g]; C=%g", h.size(),
                e.sample_pairs, e.inf_ratio, e.sup_ratio, t.C);
  r.confidence_note = buf;
  if (sup_up && inf_down)
    r.cls = Verdict::Incomparable;
  else if (inf_down && e.sup_ratio <= t.C)
    r.cls = Verdict::MuchLess;
  else if (sup_up && e.inf_ratio >= 1 / t.C)
    r.cls = Verdict::MuchGreater;
  else if (sup_bounded && inf_bounded)
    r.cls = Verdict::Approx;
  else if (sup_bounded)
    r.cls = Verdict::LessOnly;
  else if (inf_bounded)
    r.cls = Verdict::GreaterOnly;
  else
    r.cls = Verdict::Undecided;
  return r;
}

QuasiIsotropy quasi_isotropy_constant(const Domain& d, const std::vector<Point>& points, int directions) {
  if (directions < 16) throw Error(ErrorCode::InvalidArgument, "at least 16 directions per point");
  QuasiIsotropy q;
  q.ratios.assign(points.size(), 1.0);
  parallel_for(points.size(), [&](size_t i) {
    Point x = points[i];
    if (!d.contains(x)) throw Error(ErrorCode::PointOutsideDomain, "point is not interior to the domain");
    auto dens = [&](double phi) { return apollonian_directed_density(d, x, polar(1, phi), 0).value; };
    double hi = grid_golden_max(dens, 0, kPi, directions).second;
    double lo = -grid_golden_max([&](double phi) { return -dens(phi); }, 0, kPi, directions).second;
    q.ratios[i] = lo > 0 ? hi / lo : kInf;
  });
  double worst = 1;
  for (size_t i = 0; i < points.size(); ++i)
    if (q.ratios[i] > worst) {
      worst = q.ratios[i];
      q.worst_point = points[i];
    }
  q.low = worst;
  q.high = 2 * worst;
  return q;
}

PathRatios path_ratios(const Domain& d, const std::vector<Point>& path) {
  PathRatios r;
  if (path.size() < 2) return r;
  double total = polyline_length(path);
  double chord = dist(path.front(), path.back());
  r.cigar = chord > 0 ? total / chord : 1.0;
  double run = 0;
  for (size_t i = 0; i + 1 < path.size(); ++i) {
    double seg = dist(path[i], path[i + 1]);
    const int sub = 8;
    for (int k = (i == 0 ? 1 : 0); k <= sub; ++k) {
      if (i + 2 == path.size() && k == sub) break;
      double s = static_cast<double>(k) / sub;
      Point z = path[i] + s * (path[i + 1] - path[i]);
      double l = run + s * seg;
      double dz = d.boundary_distance(z);
      if (dz <= 0) {
        r.carrot = kInf;
        continue;
      }
      r.carrot = std::max(r.carrot, std::min(l, total - l) / dz);
    }
    run += seg;
  }
  return r;
}

namespace {

PathConstant path_constant(const Domain& d, const std::vector<PointPair>& pairs, const GridOptions& g, bool cigar) {
  PathConstant c;
  c.per_pair.assign(pairs.size(), 0.0);
  parallel_for(pairs.size(), [&](size_t i) {
    auto geo = quasihyperbolic_distance(d, pairs[i].first, pairs[i].second, g);
    auto r = path_ratios(d, geo.path.vertices);
    c.per_pair[i] = cigar ? std::max(r.cigar, r.carrot) : r.carrot;
  });
  for (size_t i = 0; i < pairs.size(); ++i)
    if (c.per_pair[i] > c.value) {
      c.value = c.per_pair[i];
      c.worst_pair = pairs[i];
    }
  return c;
}

}  // namespace

PathConstant uniformity_constant(const Domain& d, const std::vector<PointPair>& pairs, const GridOptions& g) {
  return path_constant(d, pairs, g, true);
}

PathConstant john_constant(const Domain& d, const std::vector<PointPair>& pairs, const GridOptions& g) {
  return path_constant(d, pairs, g, false);
}

}  // namespace hm
