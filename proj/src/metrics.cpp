#include "hypmetrica/metrics.hpp"

#include <algorithm>
#include <numeric>

#include "hypmetrica/numeric.hpp"

namespace hm {

namespace {

void require_interior(const Domain& d, Point p) {
  if (!d.contains(p)) throw Error(ErrorCode::PointOutsideDomain, "point is not interior to the domain");
}

// a boundary point with enough bookkeeping to move it along its piece
struct Cand {
  Point p;
  int piece = -1;  // -1: the point at infinity
  double param = 0;
  double width = 0;  // golden half-width in parameter units
};

double sample_width(const Domain& d, const BoundarySampling& s, size_t i) {
  const auto& pc = d.pieces()[s.piece[i]];
  double L = pc.param_length();
  if (!(L > 0)) return 0;
  return std::clamp(1.5 * s.spacing / L, 1e-9, 0.5);
}

std::vector<Cand> candidates(const Domain& d, const BoundarySampling& s) {
  std::vector<Cand> c(s.size());
  for (size_t i = 0; i < s.size(); ++i) c[i] = {s.points[i], s.piece[i], s.param[i], sample_width(d, s, i)};
  return c;
}

Cand nearest_cand(const Domain& d, Point z) {
  auto [pi, t] = d.nearest(z);
  const auto& pc = d.pieces()[pi];
  double L = pc.param_length();
  double w = L > 0 ? std::clamp(0.05, 1e-9, 0.5) : 0;
  return {pc.at(t), pi, t, w};
}

// maximise g along the candidate's piece; returns the improved candidate
template <class G>
Cand refine_cand(const Domain& d, Cand c, G&& g, double& best) {
  if (c.piece < 0) return c;
  if (c.width <= 0) {
    best = std::max(best, g(c.p));
    return c;
  }
  const auto& pc = d.pieces()[c.piece];
  double lo = std::max(0.0, c.param - c.width), hi = std::min(1.0, c.param + c.width);
  auto f = [&](double s) { return g(pc.at(s)); };
  auto [s, v] = golden_max(f, lo, hi, 90);
  double v0 = g(c.p);
  if (v > v0) {
    c.param = s;
    c.p = pc.at(s);
    c.width = std::max((hi - lo) * 1e-3, 1e-12);
  }
  best = std::max({best, v, v0});
  return c;
}

double ratio_or_zero(double num, double den) { return den > 0 ? num / den : kInf; }

}  // namespace

// ---------------------------------------------------------------- Apollonian

static double apollonian_plain(const Domain& d, const BoundarySampling& s, Point x, Point y, size_t* ia, size_t* ib,
                               double* qx, double* qy) {
  double bx = s.has_infinity ? 1.0 : 0.0, by = bx;
  size_t ax = SIZE_MAX, ay = SIZE_MAX;
  for (size_t i = 0; i < s.size(); ++i) {
    Point a = s.points[i];
    double rx = ratio_or_zero(dist(a, y), dist(a, x));
    double ry = ratio_or_zero(dist(a, x), dist(a, y));
    if (rx > bx) {
      bx = rx;
      ax = i;
    }
    if (ry > by) {
      by = ry;
      ay = i;
    }
  }
  (void)d;
  if (ia) *ia = ax;
  if (ib) *ib = ay;
  *qx = bx;
  *qy = by;
  return std::log(bx * by);
}

ApollonianResult apollonian_distance(const Domain& d, Point x, Point y, int m, bool refine) {
  require_interior(d, x);
  require_interior(d, y);
  ApollonianResult r;
  if (x == y) {
    r.metric.refinement_trace.push_back({static_cast<double>(m), 0.0});
    r.params.argmax_a = r.params.argmax_b = x;
    return r;
  }
  for (int mm : {m / 4, m / 2}) {
    if (mm < 2) continue;
    auto s = sample_boundary(d, mm);
    double qx, qy;
    r.metric.refinement_trace.push_back({static_cast<double>(mm), apollonian_plain(d, s, x, y, nullptr, nullptr, &qx, &qy)});
  }
  auto s = sample_boundary(d, m);
  size_t ia, ib;
  double qx, qy;
  double plain = apollonian_plain(d, s, x, y, &ia, &ib, &qx, &qy);
  r.metric.refinement_trace.push_back({static_cast<double>(m), plain});
  auto& P = r.params;
  P.a_at_infinity = ia == SIZE_MAX;
  P.b_at_infinity = ib == SIZE_MAX;
  if (!P.a_at_infinity) P.argmax_a = s.points[ia];
  if (!P.b_at_infinity) P.argmax_b = s.points[ib];
  if (refine) {
    auto cs = candidates(d, s);
    auto gx = [&](Point a) { return ratio_or_zero(dist(a, y), dist(a, x)); };
    auto gy = [&](Point a) { return ratio_or_zero(dist(a, x), dist(a, y)); };
    auto top = [&](auto&& g, size_t k) {
      std::vector<size_t> idx(cs.size());
      std::iota(idx.begin(), idx.end(), 0);
      k = std::min(k, idx.size());
      std::partial_sort(idx.begin(), idx.begin() + k, idx.end(),
                        [&](size_t a, size_t b) { return g(cs[a].p) > g(cs[b].p); });
      idx.resize(k);
      return idx;
    };
    auto improve = [&](auto&& g, double& q, Point& arg, bool& inf, Point z) {
      std::vector<Cand> list;
      for (size_t i : top(g, 4)) list.push_back(cs[i]);
      list.push_back(nearest_cand(d, z));
      for (auto& c : list) {
        double before = q;
        Cand c2 = refine_cand(d, c, g, q);
        if (q > before) {
          arg = c2.p;
          inf = false;
        }
      }
    };
    improve(gx, qx, P.argmax_a, P.a_at_infinity, x);
    improve(gy, qy, P.argmax_b, P.b_at_infinity, y);
  }
  P.q_x = qx;
  P.q_y = qy;
  double xy = dist(x, y);
  if (qx > 1) {
    P.ball_x_center = x + (x - y) / (qx * qx - 1);
    P.ball_x_radius = qx * xy / (qx * qx - 1);
  }
  if (qy > 1) {
    P.ball_y_center = y + (y - x) / (qy * qy - 1);
    P.ball_y_radius = qy * xy / (qy * qy - 1);
  }
  r.metric.value = std::max(0.0, std::log(qx * qy));
  r.metric.error_estimate = std::abs(r.metric.value - plain);
  if (refine) r.metric.refinement_trace.push_back({static_cast<double>(m) * 2, r.metric.value});
  return r;
}

// ---------------------------------------------------------------- j

MetricValue j_distance(const Domain& d, Point x, Point y, JVariant v) {
  double dx = dist_to_boundary(d, x), dy = dist_to_boundary(d, y);
  double t = dist(x, y);
  MetricValue r;
  if (v == JVariant::Min) r.value = std::log1p(t / std::min(dx, dy));
  else r.value = std::log1p(t / dx) + std::log1p(t / dy);
  r.refinement_trace.push_back({0, r.value});
  return r;
}

// ---------------------------------------------------------------- densities

DirectedDensity make_directed_density(double rp, double rm) {
  DirectedDensity dd;
  dd.r_plus = rp;
  dd.r_minus = rm;
  dd.value = (std::isfinite(rp) ? 0.5 / rp : 0.0) + (std::isfinite(rm) ? 0.5 / rm : 0.0);
  return dd;
}

DirectedDensity apollonian_directed_density(const Domain& d, Point x, Point theta, const BoundarySampling& s) {
  if (std::abs(norm(theta) - 1) > 1e-9) throw Error(ErrorCode::InvalidArgument, "direction must be a unit vector");
  auto r = tangent_ball_radii(d, x, theta, s);
  if (d.unbounded() && s.has_infinity) {
    // the sampling window hides far boundary; the closed forms see all of it
    auto e = tangent_ball_radii_exact(d, x, theta);
    r.r_plus = std::min(r.r_plus, e.r_plus);
    r.r_minus = std::min(r.r_minus, e.r_minus);
  }
  return make_directed_density(r.r_plus, r.r_minus);
}

DirectedDensity apollonian_directed_density(const Domain& d, Point x, Point theta, int m) {
  if (m <= 0) {
    if (std::abs(norm(theta) - 1) > 1e-9) throw Error(ErrorCode::InvalidArgument, "direction must be a unit vector");
    require_interior(d, x);
    auto r = tangent_ball_radii_exact(d, x, theta);
    return make_directed_density(r.r_plus, r.r_minus);
  }
  return apollonian_directed_density(d, x, theta, sample_boundary(d, m));
}

double hyperbolic_density(const Disk& b, Point z) {
  double r2 = norm2(z - b.center);
  if (!(b.radius > 0) || r2 >= b.radius * b.radius)
    throw Error(ErrorCode::PointOutsideDomain, "point is not inside the disk");
  return 2 * b.radius / (b.radius * b.radius - r2);
}

double hyperbolic_density(const HalfPlane& h, Point z) {
  double t = dot(h.normal, z) - h.offset;
  if (!(t > 0)) throw Error(ErrorCode::PointOutsideDomain, "point is not inside the half-plane");
  return 1 / t;
}

// ---------------------------------------------------------------- Ferrand

static std::vector<size_t> convex_hull(const std::vector<Point>& p) {
  std::vector<size_t> idx(p.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return p[a].x < p[b].x || (p[a].x == p[b].x && p[a].y < p[b].y); });
  if (idx.size() < 3) return idx;
  std::vector<size_t> h(2 * idx.size());
  size_t k = 0;
  for (size_t i = 0; i < idx.size(); ++i) {
    while (k >= 2 && cross(p[h[k - 1]] - p[h[k - 2]], p[idx[i]] - p[h[k - 2]]) <= 0) --k;
    h[k++] = idx[i];
  }
  for (size_t i = idx.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(p[h[k - 1]] - p[h[k - 2]], p[idx[i]] - p[h[k - 2]]) <= 0) --k;
    h[k++] = idx[i];
  }
  h.resize(k - 1);
  return h;
}

// farthest pair by rotating calipers
static std::pair<size_t, size_t> diameter_pair(const std::vector<Point>& p) {
  auto h = convex_hull(p);
  if (h.size() == 1) return {h[0], h[0]};
  if (h.size() == 2) return {h[0], h[1]};
  size_t n = h.size(), j = 1;
  double best = -1;
  std::pair<size_t, size_t> arg{h[0], h[1]};
  auto area = [&](size_t a, size_t b, size_t c) { return std::abs(cross(p[h[b]] - p[h[a]], p[h[c]] - p[h[a]])); };
  for (size_t i = 0; i < n; ++i) {
    size_t ni = (i + 1) % n;
    while (area(i, ni, (j + 1) % n) > area(i, ni, j)) j = (j + 1) % n;
    for (size_t a : {i, ni}) {
      double dd = norm2(p[h[a]] - p[h[j]]);
      if (dd > best) {
        best = dd;
        arg = {h[a], h[j]};
      }
    }
  }
  return arg;
}

MetricValue ferrand_density(const Domain& d, Point z, int m, bool refine) {
  require_interior(d, z);
  MetricValue r;
  auto compute = [&](int mm, bool ref) {
    auto s = sample_boundary(d, mm);
    auto cs = candidates(d, s);
    cs.push_back(nearest_cand(d, z));
    if (s.has_infinity) cs.push_back({z, -1, 0, 0});
    std::vector<Point> img(cs.size());
    for (size_t i = 0; i < cs.size(); ++i) img[i] = cs[i].piece < 0 ? z : invert(z, cs[i].p);
    auto [i, j] = diameter_pair(img);
    double best = dist(img[i], img[j]);
    if (!ref) return best;
    Cand a = cs[i], b = cs[j];
    auto chart = [&](const Cand& c, Point p) { return c.piece < 0 ? z : invert(z, p); };
    for (int round = 0; round < 4; ++round) {
      Point ib = chart(b, b.p);
      a = refine_cand(d, a, [&](Point p) { return dist(invert(z, p), ib); }, best);
      Point ia = chart(a, a.p);
      b = refine_cand(d, b, [&](Point p) { return dist(invert(z, p), ia); }, best);
    }
    return best;
  };
  for (int mm : {m / 4, m / 2})
    if (mm >= 2) r.refinement_trace.push_back({static_cast<double>(mm), compute(mm, false)});
  double plain = compute(m, false);
  r.refinement_trace.push_back({static_cast<double>(m), plain});
  r.value = refine ? std::max(plain, compute(m, true)) : plain;
  if (refine) r.refinement_trace.push_back({2.0 * m, r.value});
  r.error_estimate = r.value - plain;
  return r;
}

// ---------------------------------------------------------------- Kulkarni-Pinkall

namespace {

struct KPChart {
  Point c;
  double R = 0;
  BoundarySampling s;
  std::vector<Point> img;  // inverted samples
};

KPChart kp_chart(const Domain& d, Point z, int m) {
  KPChart K;
  K.s = sample_boundary(d, m);
  auto cs = candidates(d, K.s);
  std::vector<Point> pts;
  for (auto& c : cs) pts.push_back(invert(z, c.p));
  K.img = pts;
  Cand nc = nearest_cand(d, z);
  pts.push_back(invert(z, nc.p));
  if (K.s.has_infinity) pts.push_back(z);
  Disk B = smallest_enclosing_disk(pts);
  // per piece, push the farthest chart point outwards until nothing sticks out
  const auto& pcs = d.pieces();
  for (int iter = 0; iter < 30; ++iter) {
    bool added = false;
    std::vector<double> best(pcs.size(), -1);
    std::vector<size_t> arg(pcs.size(), SIZE_MAX);
    for (size_t i = 0; i < cs.size(); ++i) {
      double v = dist(K.img[i], B.center);
      if (v > best[cs[i].piece]) {
        best[cs[i].piece] = v;
        arg[cs[i].piece] = i;
      }
    }
    for (size_t p = 0; p < pcs.size(); ++p) {
      if (arg[p] == SIZE_MAX) continue;
      double v = -1;
      Cand c = refine_cand(d, cs[arg[p]], [&](Point q) { return dist(invert(z, q), B.center); }, v);
      if (v > B.radius * (1 + 1e-13)) {
        pts.push_back(invert(z, c.p));
        added = true;
      }
    }
    if (!added) break;
    B = smallest_enclosing_disk(pts);
  }
  K.c = B.center;
  K.R = B.radius;
  return K;
}

ExtremalDisk extremal_from_chart(const Domain& d, Point z, const KPChart& K, double contact_tol) {
  ExtremalDisk e;
  e.chart_center = K.c;
  e.chart_radius = K.R;
  double R = K.R, dz = dist(K.c, z);
  if (dz > R * (1 + 1e-9)) {
    if (d.spec().contains_infinity)
      throw Error(ErrorCode::UnsupportedMoebiusDisk, "extremal region contains infinity");
    dz = R;
  }
  if (dz < R * (1 - 1e-9)) {
    double k = R * R - dz * dz;
    e.disk = {z - (K.c - z) / k, R / k};
  } else {
    e.is_half_plane = true;
    Point n = unit(z - K.c);
    Point foot = z + (K.c - z) / (2 * R * R);
    e.half_plane = {n, dot(n, foot)};
    e.contact_at_infinity = K.s.has_infinity;
  }
  // contact runs: consecutive samples of one component near the chart circle
  const auto& s = K.s;
  const auto& pcs = d.pieces();
  std::vector<char> on(s.size());
  for (size_t i = 0; i < s.size(); ++i) on[i] = dist(K.img[i], K.c) >= R * (1 - contact_tol);
  std::vector<std::vector<size_t>> runs;
  for (size_t i = 0; i < s.size(); ++i) {
    if (!on[i]) continue;
    bool cont = i > 0 && on[i - 1] && pcs[s.piece[i - 1]].component == pcs[s.piece[i]].component &&
                pcs[s.piece[i]].kind != PieceKind::Point;
    if (cont) runs.back().push_back(i);
    else runs.push_back({i});
  }
  // closed components wrap around
  for (size_t f = 0; f < runs.size(); ++f) {
    int comp = pcs[s.piece[runs[f][0]]].component;
    size_t l = f;
    for (size_t k = f + 1; k < runs.size(); ++k)
      if (pcs[s.piece[runs[k][0]]].component == comp) l = k;
    if (l == f || pcs[s.piece[runs[f][0]]].kind == PieceKind::Point) continue;
    bool closed = true;
    size_t lo = SIZE_MAX, hi = 0;
    for (size_t i = 0; i < s.size(); ++i) {
      if (pcs[s.piece[i]].component != comp) continue;
      lo = std::min(lo, i);
      hi = std::max(hi, i);
      if (!pcs[s.piece[i]].finite()) closed = false;
    }
    if (closed && runs[f][0] == lo && runs[l].back() == hi) {
      runs[f].insert(runs[f].begin(), runs[l].begin(), runs[l].end());
      runs.erase(runs.begin() + l);
    }
  }
  for (auto& run : runs) {
    int comp = pcs[s.piece[run[0]]].component;
    size_t comp_n = 0;
    for (size_t i = 0; i < s.size(); ++i) comp_n += pcs[s.piece[i]].component == comp;
    if (run.size() == comp_n && comp_n >= 8) {
      e.continuum = true;
      for (size_t i : run) e.contact_points.push_back(s.points[i]);
      continue;
    }
    size_t bi = run[0];
    for (size_t i : run)
      if (dist(K.img[i], K.c) > dist(K.img[bi], K.c)) bi = i;
    Cand c{s.points[bi], s.piece[bi], s.param[bi], sample_width(d, s, bi)};
    double v = -1;
    c = refine_cand(d, c, [&](Point q) { return dist(invert(z, q), K.c); }, v);
    e.contact_points.push_back(c.p);
  }
  e.contact_count = static_cast<int>(e.contact_points.size()) + (e.contact_at_infinity ? 1 : 0);
  return e;
}

}  // namespace

KPResult kp_density(const Domain& d, Point z, int m, double contact_tol) {
  require_interior(d, z);
  KPResult r;
  for (int mm : {m / 4, m / 2}) {
    if (mm < 2) continue;
    auto s = sample_boundary(d, mm);
    std::vector<Point> pts;
    for (auto p : s.points) pts.push_back(invert(z, p));
    if (s.has_infinity) pts.push_back(z);
    r.metric.refinement_trace.push_back({static_cast<double>(mm), 2 * smallest_enclosing_disk(pts).radius});
  }
  auto K = kp_chart(d, z, m);
  r.metric.value = 2 * K.R;
  r.metric.refinement_trace.push_back({static_cast<double>(m), r.metric.value});
  if (r.metric.refinement_trace.size() >= 2)
    r.metric.error_estimate =
        std::abs(r.metric.value - r.metric.refinement_trace[r.metric.refinement_trace.size() - 2].value);
  r.extremal = extremal_from_chart(d, z, K, contact_tol);
  return r;
}

ExtremalDisk extremal_disk(const Domain& d, Point z, int m, double contact_tol) {
  return kp_density(d, z, m, contact_tol).extremal;
}

double extremal_disk_density(const ExtremalDisk& e, Point z) {
  return e.is_half_plane ? hyperbolic_density(e.half_plane, z) : hyperbolic_density(e.disk, z);
}

// ---------------------------------------------------------------- Seittenranta

MetricValue seittenranta_distance(const Domain& d, Point x, Point y, int m, bool refine) {
  require_interior(d, x);
  require_interior(d, y);
  MetricValue r;
  double xy = dist(x, y);
  if (xy == 0) {
    r.refinement_trace.push_back({static_cast<double>(m), 0.0});
    return r;
  }
  auto term = [&](const Cand& a, const Cand& b) {
    if (a.piece < 0 && b.piece < 0) return 0.0;
    if (a.piece < 0) return xy / dist(b.p, y);
    if (b.piece < 0) return xy / dist(a.p, x);
    return dist(a.p, b.p) * xy / (dist(a.p, x) * dist(b.p, y));
  };
  auto compute = [&](int mm, bool ref) {
    auto s = sample_boundary(d, mm);
    auto cs = candidates(d, s);
    cs.push_back(nearest_cand(d, x));
    cs.push_back(nearest_cand(d, y));
    if (s.has_infinity) cs.push_back({Point{}, -1, 0, 0});
    // cached reciprocal distances; the point at infinity is handled by term()
    std::vector<double> ix(cs.size()), iy(cs.size());
    for (size_t i = 0; i < cs.size(); ++i)
      if (cs[i].piece >= 0) ix[i] = xy / dist(cs[i].p, x), iy[i] = 1 / dist(cs[i].p, y);
    double best = 0;
    size_t ia = 0, ib = 0;
    for (size_t i = 0; i < cs.size(); ++i)
      for (size_t j = 0; j < cs.size(); ++j) {
        double v = cs[i].piece >= 0 && cs[j].piece >= 0 ? dist(cs[i].p, cs[j].p) * ix[i] * iy[j] : term(cs[i], cs[j]);
        if (v > best) {
          best = v;
          ia = i;
          ib = j;
        }
      }
    double plain = std::log1p(best);
    if (ref) {
      Cand a = cs[ia], b = cs[ib];
      for (int round = 0; round < 4; ++round) {
        a = refine_cand(d, a, [&](Point p) { return term({p, 0, 0, 0}, b); }, best);
        b = refine_cand(d, b, [&](Point p) { return term(a, {p, 0, 0, 0}); }, best);
      }
    }
    return std::pair{plain, std::log1p(best)};
  };
  for (int mm : {m / 4, m / 2})
    if (mm >= 2) r.refinement_trace.push_back({static_cast<double>(mm), compute(mm, false).first});
  auto [plain, refined] = compute(m, refine);
  r.refinement_trace.push_back({static_cast<double>(m), plain});
  r.value = refine ? std::max(plain, refined) : plain;
  if (refine) r.refinement_trace.push_back({2.0 * m, r.value});
  r.error_estimate = r.value - plain;
  return r;
}

// ---------------------------------------------------------------- circular geodesics

CircularGeodesic circular_geodesic(const Domain& d, Point z, int m, double contact_tol) {
  CircularGeodesic g;
  g.extremal = extremal_disk(d, z, m, contact_tol);
  const auto& e = g.extremal;
  if (e.continuum || e.contact_count != 2)
    throw Error(ErrorCode::NotTwoExtremal,
                "extremal disk has " + std::string(e.continuum ? "a continuum of" : std::to_string(e.contact_count)) +
                    " contacts");
  if (e.contact_at_infinity) throw Error(ErrorCode::NotTwoExtremal, "one contact lies at infinity");
  g.p = e.contact_points[0];
  g.q = e.contact_points[1];
  if (e.is_half_plane) {
    Point mid = (g.p + g.q) / 2;
    double r = dist(g.p, g.q) / 2;
    g.arc_center = mid;
    g.arc_radius = r;
    g.hyperbolic_center = mid + r * e.half_plane.normal;
    g.tangent_at_center = unit(g.q - g.p);
    return g;
  }
  Point C = e.disk.center;
  double rho = e.disk.radius;
  Point up = unit(g.p - C), uq = unit(g.q - C);
  double c = dot(up, uq);
  if (1 + c < 1e-6) {
    g.is_segment = true;
    g.hyperbolic_center = C;
    g.tangent_at_center = unit(g.q - g.p);
    return g;
  }
  Point P = C + (rho / (1 + c)) * (up + uq);
  double r = dist(P, g.p);
  g.arc_center = P;
  g.arc_radius = r;
  g.hyperbolic_center = P - r * unit(P - C);
  g.tangent_at_center = perp(unit(g.hyperbolic_center - P));
  return g;
}

HmaSample hma_sample(const Domain& d, const std::vector<Point>& seeds, int m, double contact_tol) {
  HmaSample out;
  for (size_t i = 0; i < seeds.size(); ++i) {
    try {
      out.geodesics.push_back(circular_geodesic(d, seeds[i], m, contact_tol));
      out.seed_index.push_back(i);
    } catch (const Error& err) {
      out.skipped.push_back("seed " + std::to_string(i) + ": " + error_name(err.code()) + ": " + err.what());
    }
  }
  return out;
}

// ---------------------------------------------------------------- curvature

double qh_curvature(const Domain& d, Point z, double tol) {
  double delta = dist_to_boundary(d, z);
  const auto& pcs = d.pieces();
  int best = -1;
  Point foot;
  for (size_t i = 0; i < pcs.size(); ++i) {
    double di = pcs[i].distance(z);
    if (di > delta * (1 + 1e-9) + 1e-15) continue;
    Point fi = pcs[i].at(pcs[i].closest_param(z));
    if (pcs[i].kind == PieceKind::Line) fi = z - cross(pcs[i].q, z - pcs[i].p) * perp(pcs[i].q);
    if (best >= 0 && dist(fi, foot) > 1e-6 * delta) return -kInf;
    if (best < 0) {
      best = static_cast<int>(i);
      foot = fi;
    }
  }
  const auto& pc = pcs[best];
  if (pc.kind == PieceKind::Arc && pc.domain_inside && dist(z, pc.center) < 1e-9 * pc.radius) return -kInf;
  double t = pc.closest_param(z);
  bool endpoint = (t <= 1e-12 || t >= 1 - 1e-12);
  switch (pc.kind) {
    case PieceKind::Point: throw Error(ErrorCode::UnknownCurvature, "nearest boundary point is a puncture");
    case PieceKind::Segment:
    case PieceKind::Ray:
      if (endpoint && !(pc.kind == PieceKind::Ray && t > 0))
        throw Error(ErrorCode::UnknownCurvature, "nearest boundary point is a corner");
      break;
    case PieceKind::Arc:
      if (!pc.full_circle && endpoint) throw Error(ErrorCode::UnknownCurvature, "nearest boundary point is a corner");
      break;
    case PieceKind::Line: break;
  }
  double R = pc.curvature_radius();
  if (!std::isfinite(R)) return -1;
  if (std::abs(R - delta) < tol * std::max(1.0, R)) return -kInf;
  return -R / (R - delta);
}

// ---------------------------------------------------------------- path integrals

static double simpson_adapt(const std::function<double(double)>& f, double a, double b, double fa, double fm,
                            double fb, double whole, double eps, int depth) {
  double m = 0.5 * (a + b), lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = f(lm), frm = f(rm);
  double left = (m - a) / 6 * (fa + 4 * flm + fm), right = (b - m) / 6 * (fm + 4 * frm + fb);
  double diff = left + right - whole;
  if (depth <= 0 || std::abs(diff) <= 15 * eps) return left + right + diff / 15;
  return simpson_adapt(f, a, m, fa, flm, fm, left, eps / 2, depth - 1) +
         simpson_adapt(f, m, b, fm, frm, fb, right, eps / 2, depth - 1);
}

double path_length_with_density(const std::vector<Point>& path, const std::function<double(Point)>& density,
                                double rel_tol) {
  double total = 0;
  for (size_t i = 1; i < path.size(); ++i) {
    Point a = path[i - 1], b = path[i];
    double L = dist(a, b);
    if (L == 0) continue;
    auto f = [&](double t) { return density(a + t * (b - a)) * L; };
    double fa = f(0), fm = f(0.5), fb = f(1);
    double whole = (fa + 4 * fm + fb) / 6;
    total += simpson_adapt(f, 0, 1, fa, fm, fb, whole, rel_tol * std::abs(whole) + 1e-300, 40);
  }
  return total;
}

}  // namespace hm
