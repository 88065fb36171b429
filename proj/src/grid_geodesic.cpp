// Path metrics with a point-dependent (possibly direction-dependent) density:
// graded quadtree graph + Dijkstra for the route, then polyline relaxation.
#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <queue>

#include "hypmetrica/metrics.hpp"

namespace hm {

namespace {

using DensityFn = std::function<double(Point, Point)>;  // (position, unit direction)

struct CostModel {
  const Domain* d;
  DensityFn rho;
  bool isotropic = true;

  double fast(Point a, Point b) const {
    double L = dist(a, b);
    if (L == 0) return 0;
    Point u = (b - a) / L;
    if (!isotropic) return rho((a + b) / 2, u) * L;
    return L / 6 * (rho(a, u) + 4 * rho((a + b) / 2, u) + rho(b, u));
  }

  // composite 4-point Gauss-Legendre, panels sized by the local boundary distance
  double accurate(Point a, Point b) const {
    static const std::array<double, 4> xs{-0.8611363115940526, -0.3399810435848563, 0.3399810435848563,
                                          0.8611363115940526};
    static const std::array<double, 4> ws{0.3478548451374538, 0.6521451548625461, 0.6521451548625461,
                                          0.3478548451374538};
    double L = dist(a, b);
    if (L == 0) return 0;
    Point u = (b - a) / L;
    double dm = std::min({d->boundary_distance(a), d->boundary_distance(b), d->boundary_distance((a + b) / 2)});
    int n = static_cast<int>(std::clamp(std::ceil(L / (0.5 * dm)), 1.0, 256.0));
    double h = L / n, s = 0;
    for (int k = 0; k < n; ++k) {
      Point c = a + ((k + 0.5) * h) * u;
      for (int i = 0; i < 4; ++i) s += ws[i] * rho(c + (0.5 * h * xs[i]) * u, u);
    }
    return s * 0.5 * h;
  }
};

class QuadGraph {
 public:
  struct Cell {
    Point c;
    double h = 0;  // half side
    int child = -1;
    int node = -1;
  };

  std::vector<Cell> cells;
  std::vector<int> roots;
  std::vector<Point> nodes;
  std::vector<double> size;

  void build(const Domain& d, Point x, Point y, double x0, double y0, double x1, double y1, double eta, double beta,
             double hmin, size_t cap) {
    double S = std::min(x1 - x0, y1 - y0);
    S = std::max(S, std::max(x1 - x0, y1 - y0) / 64);
    int nx = std::max(1, static_cast<int>(std::ceil((x1 - x0) / S - 1e-9)));
    int ny = std::max(1, static_cast<int>(std::ceil((y1 - y0) / S - 1e-9)));
    std::vector<int> stack;
    for (int i = 0; i < nx; ++i)
      for (int j = 0; j < ny; ++j) {
        cells.push_back({{x0 + (i + 0.5) * S, y0 + (j + 0.5) * S}, S / 2});
        roots.push_back(static_cast<int>(cells.size()) - 1);
        stack.push_back(roots.back());
      }
    while (!stack.empty()) {
      int ci = stack.back();
      stack.pop_back();
      Point c = cells[ci].c;
      double h = cells[ci].h;
      bool in = d.contains(c);
      double bd = d.boundary_distance(c);
      if (!in && bd > h * 1.4143) continue;
      double r = std::min(dist(c, x), dist(c, y));
      double target = in ? eta * std::max(bd, beta * r) : eta * beta * r;
      if (2 * h > std::max(target, hmin)) {
        if (cells.size() + 4 > cap) throw Error(ErrorCode::ResolutionTooCoarse, "geodesic graph exceeds its size cap");
        int first = static_cast<int>(cells.size());
        cells[ci].child = first;
        for (int k = 0; k < 4; ++k) {
          Point o{(k & 1) ? h / 2 : -h / 2, (k & 2) ? h / 2 : -h / 2};
          cells.push_back({c + o, h / 2});
          stack.push_back(first + k);
        }
      } else if (in) {
        cells[ci].node = static_cast<int>(nodes.size());
        nodes.push_back(c);
        size.push_back(2 * h);
      }
    }
  }

  // leaves u with |u - p| <= max(r, 2.5 size(u))
  void query(Point p, double r, std::vector<int>& out) const {
    out.clear();
    std::vector<int> stack(roots.begin(), roots.end());
    while (!stack.empty()) {
      int ci = stack.back();
      stack.pop_back();
      const Cell& c = cells[ci];
      double dx = std::max(0.0, std::abs(p.x - c.c.x) - c.h), dy = std::max(0.0, std::abs(p.y - c.c.y) - c.h);
      double bd = std::hypot(dx, dy);
      if (c.child < 0) {
        if (c.node >= 0 && dist(p, c.c) <= std::max(r, 2.5 * 2 * c.h)) out.push_back(c.node);
        continue;
      }
      if (bd > std::max(r, 2.5 * c.h)) continue;
      for (int k = 0; k < 4; ++k) stack.push_back(c.child + k);
    }
  }

  double local_size(Point p) const {
    for (int ri : roots) {
      const Cell* c = &cells[ri];
      if (std::abs(p.x - c->c.x) > c->h || std::abs(p.y - c->c.y) > c->h) continue;
      while (c->child >= 0) {
        int k = (p.x > c->c.x ? 1 : 0) + (p.y > c->c.y ? 2 : 0);
        c = &cells[c->child + k];
      }
      return 2 * c->h;
    }
    return 0;
  }
};

// Dijkstra from x to y; empty result when y is unreachable
std::vector<Point> graph_route(const Domain& d, const CostModel& cm, Point x, Point y, const QuadGraph& g) {
  int N = static_cast<int>(g.nodes.size());
  int X = N, Y = N + 1;
  auto pos = [&](int u) { return u == X ? x : (u == Y ? y : g.nodes[u]); };
  double sx = g.local_size(x), sy = g.local_size(y);
  if (sx <= 0) sx = 1e-3 * d.diameter_scale();
  if (sy <= 0) sy = 1e-3 * d.diameter_scale();
  std::vector<double> D(N + 2, kInf);
  std::vector<int> prev(N + 2, -1);
  std::vector<char> done(N + 2, 0);
  using QE = std::pair<double, int>;
  std::priority_queue<QE, std::vector<QE>, std::greater<QE>> pq;
  D[X] = 0;
  pq.push({0, X});
  std::vector<int> nb;
  while (!pq.empty()) {
    auto [du, u] = pq.top();
    pq.pop();
    if (done[u]) continue;
    done[u] = 1;
    if (u == Y) break;
    Point pu = pos(u);
    double su = u == X ? sx : g.size[u];
    g.query(pu, 2.5 * su, nb);
    if (dist(pu, y) <= 2.5 * std::max(su, sy) || u == X) nb.push_back(Y);
    for (int v : nb) {
      if (v == u || done[v]) continue;
      Point pv = pos(v);
      if (!d.segment_admissible(pu, pv)) continue;
      double nd = du + cm.fast(pu, pv);
      if (nd < D[v]) {
        D[v] = nd;
        prev[v] = u;
        pq.push({nd, v});
      }
    }
  }
  if (!done[Y]) return {};
  std::vector<Point> path;
  for (int v = Y; v >= 0; v = prev[v]) path.push_back(pos(v));
  std::reverse(path.begin(), path.end());
  return path;
}

double path_cost(const CostModel& cm, const std::vector<Point>& p) {
  double s = 0;
  for (size_t i = 1; i < p.size(); ++i) s += cm.accurate(p[i - 1], p[i]);
  return s;
}

std::vector<Point> subdivide(const Domain& d, std::vector<Point> p, double sigma, size_t cap) {
  for (int pass = 0; pass < 40; ++pass) {
    std::vector<Point> q{p[0]};
    bool changed = false;
    for (size_t i = 1; i < p.size(); ++i) {
      Point a = p[i - 1], b = p[i];
      double dm = std::min({d.boundary_distance(a), d.boundary_distance(b), d.boundary_distance((a + b) / 2)});
      if (dist(a, b) > sigma * dm && q.size() + (p.size() - i) < cap) {
        q.push_back((a + b) / 2);
        changed = true;
      }
      q.push_back(b);
    }
    p.swap(q);
    if (!changed) break;
  }
  return p;
}

// moves each interior vertex along the local path normal, keeping every segment admissible
void relax(const Domain& d, const CostModel& cm, std::vector<Point>& p, int sweeps) {
  size_t n = p.size();
  if (n < 3) return;
  std::vector<double> seg(n - 1);
  for (size_t i = 0; i + 1 < n; ++i) seg[i] = cm.accurate(p[i], p[i + 1]);
  double total = std::accumulate(seg.begin(), seg.end(), 0.0);
  for (int sw = 0; sw < sweeps; ++sw) {
    double gain = 0;
    for (size_t i = 1; i + 1 < n; ++i) {
      Point chord = p[i + 1] - p[i - 1];
      if (norm(chord) == 0) continue;
      Point nrm = perp(unit(chord));
      double local = seg[i - 1] + seg[i];
      double step = 0.25 * std::min(dist(p[i], p[i - 1]), dist(p[i], p[i + 1]));
      double floor = 1e-4 * step;
      int moves = 0;
      while (step > floor && moves < 60) {
        bool moved = false;
        for (double sgn : {1.0, -1.0}) {
          Point v = p[i] + (sgn * step) * nrm;
          if (!d.contains(v) || !d.segment_admissible(p[i - 1], v) || !d.segment_admissible(v, p[i + 1])) continue;
          double c0 = cm.accurate(p[i - 1], v), c1 = cm.accurate(v, p[i + 1]);
          if (c0 + c1 < local - 1e-12 * local) {
            gain += local - (c0 + c1);
            p[i] = v;
            seg[i - 1] = c0;
            seg[i] = c1;
            local = c0 + c1;
            moved = true;
            ++moves;
            break;
          }
        }
        if (!moved) step *= 0.5;
      }
    }
    if (gain < 1e-9 * total) break;
    total -= gain;
  }
}

struct Window {
  double x0, y0, x1, y1;
};

Window pair_window(const Domain& d, Point x, Point y, bool full) {
  double bx0, by0, bx1, by1;
  d.bbox(bx0, by0, bx1, by1);
  if (full) return {bx0, by0, bx1, by1};
  double t = dist(x, y);
  double reach = 0.5 * t + std::max({0.5 * t, d.boundary_distance(x), d.boundary_distance(y)});
  Point c = (x + y) / 2;
  Window w{std::max(bx0, c.x - reach), std::max(by0, c.y - reach), std::min(bx1, c.x + reach),
           std::min(by1, c.y + reach)};
  return w;
}

GeodesicResult solve(const Domain& d, Point x, Point y, const GridOptions& opt, CostModel cm) {
  if (!d.contains(x) || !d.contains(y)) throw Error(ErrorCode::PointOutsideDomain, "point is not interior to the domain");
  GeodesicResult r;
  if (x == y) {
    r.path.vertices = {x, y};
    r.metric.refinement_trace.push_back({static_cast<double>(opt.grid), 0.0});
    return r;
  }
  double eta0 = 4.0 / std::max(1, opt.grid);
  double sigma0 = 0.5;
  double hmin0 = 0.5 * std::min(d.boundary_distance(x), d.boundary_distance(y));
  const size_t cap = 1500000;
  std::vector<Point> best_path;
  double best = kInf, prev_best = kInf;
  std::vector<Point> route;
  bool full = false;
  double beta_used = 0.3;
  for (int level = 0; level < std::max(1, opt.max_levels); ++level) {
    double sigma = sigma0 / (1 << level);
    std::vector<Point> cand;
    if (level <= 1) {
      double eta = eta0 / (1 << level);
      route.clear();
      struct Attempt {
        bool full;
        double beta;
      };
      std::vector<Attempt> ladder{{full, beta_used}};
      for (double b : {0.3, 0.1, 0.03, 0.01})
        if (b <= beta_used) ladder.push_back({true, b});
      for (auto at : ladder) {
        Window w = pair_window(d, x, y, at.full);
        QuadGraph g;
        g.build(d, x, y, w.x0, w.y0, w.x1, w.y1, eta, at.beta, eta * hmin0, cap);
        route = graph_route(d, cm, x, y, g);
        if (!route.empty()) {
          full = at.full;
          beta_used = at.beta;
          break;
        }
      }
      if (route.empty()) {
        if (best_path.empty()) throw Error(ErrorCode::Disconnected, "no interior path joins the points");
      } else {
        cand = subdivide(d, route, sigma, 20000);
        relax(d, cm, cand, 60);
      }
    }
    double c_cand = cand.empty() ? kInf : path_cost(cm, cand);
    if (!best_path.empty()) {
      auto warm = subdivide(d, best_path, sigma, 20000);
      relax(d, cm, warm, 60);
      double c_warm = path_cost(cm, warm);
      if (c_warm < c_cand) {
        cand.swap(warm);
        c_cand = c_warm;
      }
    }
    if (c_cand < best) {
      best = c_cand;
      best_path = cand;
    }
    r.metric.refinement_trace.push_back({static_cast<double>(opt.grid << level), best});
    if (level + 1 >= opt.min_levels && std::isfinite(prev_best) && prev_best - best <= opt.tol * best) break;
    prev_best = best;
  }
  r.metric.value = best;
  const auto& tr = r.metric.refinement_trace;
  r.metric.error_estimate = tr.size() >= 2 ? tr[tr.size() - 2].value - tr.back().value : opt.tol * best;
  r.path.vertices = best_path;
  r.path.length = polyline_length(best_path);
  return r;
}

}  // namespace

GeodesicResult quasihyperbolic_distance(const Domain& d, Point x, Point y, const GridOptions& g) {
  CostModel cm{&d, [&d](Point p, Point) { return 1 / d.boundary_distance(p); }, true};
  return solve(d, x, y, g, cm);
}

GeodesicResult apollonian_inner_distance(const Domain& d, Point x, Point y, const GridOptions& g) {
  if (d.spec().contains_infinity)
    throw Error(ErrorCode::UnsupportedInfinityInDomain, "tangent balls through infinity are not supported");
  CostModel cm{&d,
               [&d](Point p, Point u) {
                 return make_directed_density(tangent_radius_exact(d, p, u), tangent_radius_exact(d, p, -u)).value;
               },
               false};
  return solve(d, x, y, g, cm);
}

}  // namespace hm
