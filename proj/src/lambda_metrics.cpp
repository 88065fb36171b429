// Inner Euclidean (lambda) lengths via a visibility graph over corner and arc nodes.
#include <algorithm>
#include <map>
#include <queue>

#include "hypmetrica/metrics.hpp"
#include "hypmetrica/numeric.hpp"

namespace hm {

namespace {

struct VisGraph {
  std::vector<Point> nodes;
  std::vector<std::vector<std::pair<int, double>>> adj;
};

VisGraph build_vis(const Domain& d, int arc_nodes) {
  VisGraph g;
  double eps = 1e-9 * d.diameter_scale();
  auto ring = [&](Point c) {
    for (int k = 0; k < 8; ++k) {
      Point q = c + polar(eps, kPi / 8 + k * kPi / 4);
      if (d.contains(q)) g.nodes.push_back(q);
    }
  };
  for (const auto& pc : d.pieces()) {
    switch (pc.kind) {
      case PieceKind::Point: ring(pc.p); break;
      case PieceKind::Segment:
        ring(pc.p);
        ring(pc.q);
        break;
      case PieceKind::Ray: ring(pc.p); break;
      case PieceKind::Line: break;
      case PieceKind::Arc: {
        if (!pc.full_circle) {
          ring(pc.at(0));
          ring(pc.at(1));
        }
        if (pc.domain_inside) break;
        double span = pc.t1 - pc.t0;
        int K = std::max(4, static_cast<int>(std::ceil(arc_nodes * span / (2 * kPi))));
        double half = 0.5 * span / K;
        double R = pc.radius / std::cos(half) * (1 + 1e-12);
        for (int k = 0; k <= K; ++k) {
          if (pc.full_circle && k == K) break;
          Point q = pc.center + polar(R, pc.t0 + k * span / K);
          if (d.contains(q)) g.nodes.push_back(q);
        }
        break;
      }
    }
  }
  size_t n = g.nodes.size();
  g.adj.assign(n, {});
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (d.segment_admissible(g.nodes[i], g.nodes[j])) {
        double w = dist(g.nodes[i], g.nodes[j]);
        g.adj[i].push_back({static_cast<int>(j), w});
        g.adj[j].push_back({static_cast<int>(i), w});
      }
  return g;
}

struct Tree {
  std::vector<double> D;
  std::vector<int> prev;  // -1: straight from the source
};

Tree from_source(const Domain& d, const VisGraph& g, Point s) {
  size_t n = g.nodes.size();
  Tree t{std::vector<double>(n, kInf), std::vector<int>(n, -1)};
  using QE = std::pair<double, int>;
  std::priority_queue<QE, std::vector<QE>, std::greater<QE>> pq;
  for (size_t i = 0; i < n; ++i)
    if (d.segment_admissible(s, g.nodes[i])) {
      t.D[i] = dist(s, g.nodes[i]);
      pq.push({t.D[i], static_cast<int>(i)});
    }
  std::vector<char> done(n, 0);
  while (!pq.empty()) {
    auto [du, u] = pq.top();
    pq.pop();
    if (done[u]) continue;
    done[u] = 1;
    for (auto [v, w] : g.adj[u])
      if (du + w < t.D[v]) {
        t.D[v] = du + w;
        t.prev[v] = u;
        pq.push({t.D[v], v});
      }
  }
  return t;
}

// distance from the tree's source to target, with the last node used (-1 direct, -2 unreachable)
std::pair<double, int> reach(const Domain& d, const VisGraph& g, const Tree& t, Point s, Point target) {
  if (d.segment_admissible(s, target)) return {dist(s, target), -1};
  double best = kInf;
  int arg = -2;
  for (size_t i = 0; i < g.nodes.size(); ++i) {
    if (!std::isfinite(t.D[i])) continue;
    double c = t.D[i] + dist(g.nodes[i], target);
    if (c < best && d.segment_admissible(g.nodes[i], target)) {
      best = c;
      arg = static_cast<int>(i);
    }
  }
  return {best, arg};
}

// interior stand-in for a boundary point, pushed off by eps towards the requested side
Point pushed_inside(const Domain& d, Point w, int piece, int side) {
  double eps = 1e-9 * d.diameter_scale();
  if (d.contains(w)) return w;
  std::vector<Point> dirs;
  if (piece >= 0) {
    const auto& pc = d.pieces()[piece];
    Point n{0, 1};
    switch (pc.kind) {
      case PieceKind::Segment: n = perp(unit(pc.q - pc.p)); break;
      case PieceKind::Ray:
      case PieceKind::Line: n = perp(pc.q); break;
      case PieceKind::Arc: n = unit(w - pc.center); break;
      case PieceKind::Point: break;
    }
    if (side < 0) n = -n;
    dirs.push_back(n);
    if (side == 0) dirs.push_back(-n);
  }
  for (int k = 0; k < 16; ++k) dirs.push_back(polar(1, k * kPi / 8));
  for (Point u : dirs) {
    Point q = w + eps * u;
    if (d.contains(q)) return q;
  }
  throw Error(ErrorCode::PointOutsideDomain, "boundary point has no interior neighbourhood");
}

Point endpoint_inside(const Domain& d, Point p) {
  if (d.contains(p)) return p;
  auto [pi, t] = d.nearest(p);
  if (pi < 0 || d.pieces()[pi].distance(p) > 1e-9 * d.diameter_scale())
    throw Error(ErrorCode::PointOutsideDomain, "point is neither interior nor on the boundary");
  (void)t;
  return pushed_inside(d, p, pi, 0);
}

int arc_nodes_for(const GridOptions& g, int level) { return std::max(16, g.grid * 8) << level; }

bool has_hole_arcs(const Domain& d) {
  for (const auto& pc : d.pieces())
    if (pc.kind == PieceKind::Arc && !pc.domain_inside) return true;
  return false;
}

}  // namespace

GeodesicResult lambda_length(const Domain& d, Point x, Point y, const GridOptions& opt) {
  Point xi = endpoint_inside(d, x), yi = endpoint_inside(d, y);
  GeodesicResult r;
  int levels = has_hole_arcs(d) ? std::max(1, opt.max_levels) : 1;
  double prev = kInf;
  for (int level = 0; level < levels; ++level) {
    if (d.segment_admissible(xi, yi)) {
      r.metric.value = dist(x, y);
      r.path.vertices = {x, y};
      r.metric.refinement_trace.push_back({static_cast<double>(arc_nodes_for(opt, level)), r.metric.value});
      break;
    }
    auto g = build_vis(d, arc_nodes_for(opt, level));
    auto t = from_source(d, g, xi);
    auto [len, last] = reach(d, g, t, xi, yi);
    if (last == -2) throw Error(ErrorCode::Disconnected, "no interior path joins the points");
    std::vector<Point> path{y};
    for (int v = last; v >= 0; v = t.prev[v]) path.push_back(g.nodes[v]);
    path.push_back(x);
    std::reverse(path.begin(), path.end());
    r.path.vertices = path;
    r.metric.value = len + dist(x, xi) + dist(y, yi);
    r.metric.refinement_trace.push_back({static_cast<double>(arc_nodes_for(opt, level)), r.metric.value});
    if (level + 1 >= opt.min_levels && std::abs(prev - r.metric.value) <= opt.tol * r.metric.value) break;
    prev = r.metric.value;
  }
  const auto& tr = r.metric.refinement_trace;
  r.metric.error_estimate = tr.size() >= 2 ? std::abs(tr[tr.size() - 2].value - tr.back().value) : 0;
  r.path.length = polyline_length(r.path.vertices);
  return r;
}

MetricValue lambda_apollonian_distance(const Domain& d, Point x, Point y, int m, const GridOptions& opt, bool refine) {
  if (!d.contains(x) || !d.contains(y)) throw Error(ErrorCode::PointOutsideDomain, "point is not interior to the domain");
  MetricValue r;
  if (x == y) {
    r.refinement_trace.push_back({static_cast<double>(m), 0.0});
    return r;
  }
  auto s = sample_boundary(d, m);
  std::vector<Point> w(s.size());
  for (size_t i = 0; i < s.size(); ++i) w[i] = pushed_inside(d, s.points[i], s.piece[i], s.side[i]);
  int levels = has_hole_arcs(d) ? std::max(1, opt.max_levels) : 1;
  double prev = kInf;
  for (int level = 0; level < levels; ++level) {
    auto g = build_vis(d, arc_nodes_for(opt, level));
    auto tx = from_source(d, g, x), ty = from_source(d, g, y);
    double qx = s.has_infinity ? 1.0 : 0.0, qy = qx;
    // best sample per (piece, side) for each quotient
    std::map<std::pair<int, int>, std::pair<double, double>> best_x, best_y;
    for (size_t i = 0; i < s.size(); ++i) {
      double lx = reach(d, g, tx, x, w[i]).first, ly = reach(d, g, ty, y, w[i]).first;
      if (!std::isfinite(lx) || !std::isfinite(ly)) continue;
      auto key = std::make_pair(s.piece[i], s.side[i]);
      if (ly > 0) {
        qx = std::max(qx, lx / ly);
        auto it = best_x.find(key);
        if (it == best_x.end() || lx / ly > it->second.second) best_x[key] = {s.param[i], lx / ly};
      }
      if (lx > 0) {
        qy = std::max(qy, ly / lx);
        auto it = best_y.find(key);
        if (it == best_y.end() || ly / lx > it->second.second) best_y[key] = {s.param[i], ly / lx};
      }
    }
    if (refine) {
      auto quotient = [&](int piece, int side, double t, bool forx) {
        const auto& pc = d.pieces()[piece];
        Point b = pc.at(std::clamp(t, 0.0, 1.0));
        Point wi;
        try {
          wi = pushed_inside(d, b, piece, side);
        } catch (const Error&) {
          return 0.0;
        }
        double lx = reach(d, g, tx, x, wi).first, ly = reach(d, g, ty, y, wi).first;
        if (!std::isfinite(lx) || !std::isfinite(ly)) return 0.0;
        double num = forx ? lx : ly, den = forx ? ly : lx;
        return den > 0 ? num / den : 0.0;
      };
      auto polish = [&](const std::map<std::pair<int, int>, std::pair<double, double>>& best, bool forx) {
        double q = 0;
        for (const auto& [key, bv] : best) {
          const auto& pc = d.pieces()[key.first];
          if (pc.kind == PieceKind::Point) continue;
          double h = s.spacing / std::max(pc.param_length(), 1e-300);
          for (double c : {bv.first, pc.closest_param(x), pc.closest_param(y)}) {
            double lo = std::max(0.0, c - h), hi = std::min(1.0, c + h);
            auto f = [&](double t) { return quotient(key.first, key.second, t, forx); };
            q = std::max(q, golden_max(f, lo, hi, 60).second);
          }
        }
        return q;
      };
      qx = std::max(qx, polish(best_x, true));
      qy = std::max(qy, polish(best_y, false));
    }
    double v = std::log(qx * qy);
    r.refinement_trace.push_back({static_cast<double>(arc_nodes_for(opt, level)), v});
    r.value = v;
    if (level + 1 >= opt.min_levels && std::abs(prev - v) <= opt.tol * std::max(v, 1e-300)) break;
    prev = v;
  }
  const auto& tr = r.refinement_trace;
  r.error_estimate = tr.size() >= 2 ? std::abs(tr[tr.size() - 2].value - tr.back().value) : 0;
  return r;
}

MetricValue j_prime_distance(const Domain& d, Point x, Point y, const GridOptions& g) {
  double dx = dist_to_boundary(d, x), dy = dist_to_boundary(d, y);
  auto L = lambda_length(d, x, y, g);
  MetricValue r;
  r.value = std::log1p(L.metric.value / dx) + std::log1p(L.metric.value / dy);
  r.error_estimate = L.metric.error_estimate * (1 / dx + 1 / dy);
  for (auto t : L.metric.refinement_trace)
    r.refinement_trace.push_back({t.resolution, std::log1p(t.value / dx) + std::log1p(t.value / dy)});
  return r;
}

}  // namespace hm
