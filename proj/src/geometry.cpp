#include "hypmetrica/geometry.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>

namespace hm {

const char* error_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::PointOutsideDomain: return "PointOutsideDomain";
    case ErrorCode::DegenerateBoundary: return "DegenerateBoundary";
    case ErrorCode::InversionAtCenter: return "InversionAtCenter";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::UnsupportedInfinityInDomain: return "UnsupportedInfinityInDomain";
    case ErrorCode::UnsupportedMoebiusDisk: return "UnsupportedMoebiusDisk";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::ResolutionTooCoarse: return "ResolutionTooCoarse";
    case ErrorCode::NotTwoExtremal: return "NotTwoExtremal";
    case ErrorCode::UnknownCurvature: return "UnknownCurvature";
    case ErrorCode::MetricUnavailable: return "MetricUnavailable";
    case ErrorCode::OutsideDisk: return "OutsideDisk";
    case ErrorCode::VanishingCore: return "VanishingCore";
    case ErrorCode::VanishingDerivative: return "VanishingDerivative";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::PolyLikePole: return "PolyLikePole";
    case ErrorCode::NonConvergent: return "NonConvergent";
    case ErrorCode::NegativeCoefficient: return "NegativeCoefficient";
    case ErrorCode::NotAttestedUnivalent: return "NotAttestedUnivalent";
    case ErrorCode::NoRoot: return "NoRoot";
    case ErrorCode::ConstraintViolation: return "ConstraintViolation";
    case ErrorCode::HypergeometricFailure: return "HypergeometricFailure";
  }
  return "Unknown";
}

double polyline_length(const std::vector<Point>& v) {
  double L = 0;
  for (size_t i = 1; i < v.size(); ++i) L += dist(v[i - 1], v[i]);
  return L;
}

double polygon_signed_area(const std::vector<Point>& v) {
  double a = 0;
  for (size_t i = 0, n = v.size(); i < n; ++i) a += cross(v[i], v[(i + 1) % n]);
  return 0.5 * a;
}

bool point_in_polygon(const std::vector<Point>& v, Point p) {
  bool in = false;
  for (size_t i = 0, n = v.size(), j = n - 1; i < n; j = i++) {
    if ((v[i].y > p.y) != (v[j].y > p.y)) {
      double xc = v[j].x + (p.y - v[j].y) * (v[i].x - v[j].x) / (v[i].y - v[j].y);
      if (p.x < xc) in = !in;
    }
  }
  return in;
}

double segment_distance(Point a, Point b, Point p) {
  Point d = b - a;
  double L2 = norm2(d);
  if (L2 == 0) return dist(a, p);
  double t = std::clamp(dot(p - a, d) / L2, 0.0, 1.0);
  return dist(a + t * d, p);
}

static int orient(Point a, Point b, Point c) {
  double v = cross(b - a, c - a);
  double s = 1e-15 * (norm(b - a) * norm(c - a));
  if (v > s) return 1;
  if (v < -s) return -1;
  return 0;
}

static bool on_segment(Point a, Point b, Point p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

bool segments_intersect(Point a, Point b, Point c, Point d) {
  int o1 = orient(a, b, c), o2 = orient(a, b, d), o3 = orient(c, d, a), o4 = orient(c, d, b);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(a, b, c)) return true;
  if (o2 == 0 && on_segment(a, b, d)) return true;
  if (o3 == 0 && on_segment(c, d, a)) return true;
  if (o4 == 0 && on_segment(c, d, b)) return true;
  return false;
}

double segment_segment_distance(Point a, Point b, Point c, Point d) {
  if (segments_intersect(a, b, c, d)) return 0;
  return std::min({segment_distance(a, b, c), segment_distance(a, b, d), segment_distance(c, d, a),
                   segment_distance(c, d, b)});
}

// ---------------------------------------------------------------- pieces

static double wrap_angle(double phi, double t0) {
  double r = std::fmod(phi - t0, 2 * kPi);
  if (r < 0) r += 2 * kPi;
  return t0 + r;
}

Point BoundaryPiece::at(double s) const {
  switch (kind) {
    case PieceKind::Point: return p;
    case PieceKind::Segment: return p + s * (q - p);
    case PieceKind::Arc: return center + polar(radius, t0 + s * (t1 - t0));
    case PieceKind::Ray: return p + (s * window) * q;
    case PieceKind::Line: return p + ((2 * s - 1) * window) * q;
  }
  return p;
}

double BoundaryPiece::param_length() const {
  switch (kind) {
    case PieceKind::Point: return 0;
    case PieceKind::Segment: return dist(p, q);
    case PieceKind::Arc: return radius * (t1 - t0);
    case PieceKind::Ray: return window;
    case PieceKind::Line: return 2 * window;
  }
  return 0;
}

double BoundaryPiece::length() const { return finite() ? param_length() : kInf; }

double BoundaryPiece::distance(Point z) const {
  switch (kind) {
    case PieceKind::Point: return dist(z, p);
    case PieceKind::Segment: return segment_distance(p, q, z);
    case PieceKind::Arc: {
      Point u = z - center;
      double r = norm(u);
      if (full_circle) return std::abs(r - radius);
      if (r == 0) return radius;
      double phi = wrap_angle(std::atan2(u.y, u.x), t0);
      if (phi <= t1) return std::abs(r - radius);
      return std::min(dist(z, at(0)), dist(z, at(1)));
    }
    case PieceKind::Ray: {
      double t = std::max(0.0, dot(z - p, q));
      return dist(z, p + t * q);
    }
    case PieceKind::Line: return std::abs(cross(q, z - p));
  }
  return kInf;
}

double BoundaryPiece::closest_param(Point z) const {
  switch (kind) {
    case PieceKind::Point: return 0;
    case PieceKind::Segment: {
      Point d = q - p;
      double L2 = norm2(d);
      return L2 == 0 ? 0 : std::clamp(dot(z - p, d) / L2, 0.0, 1.0);
    }
    case PieceKind::Arc: {
      Point u = z - center;
      if (norm2(u) == 0) return 0;
      double phi = wrap_angle(std::atan2(u.y, u.x), t0);
      if (phi <= t1) return (phi - t0) / (t1 - t0);
      return dist(z, at(0)) <= dist(z, at(1)) ? 0.0 : 1.0;
    }
    case PieceKind::Ray: return std::max(0.0, dot(z - p, q)) / window;
    case PieceKind::Line: return 0.5 * (dot(z - p, q) / window + 1);
  }
  return 0;
}

// ---------------------------------------------------------------- domain

static void check_finite(Point p, const char* what) {
  if (!std::isfinite(p.x) || !std::isfinite(p.y))
    throw Error(ErrorCode::InvalidArgument, std::string("non-finite coordinate in ") + what);
}

static std::vector<Point> ccw(std::vector<Point> v, const char* what) {
  if (v.size() < 3) throw Error(ErrorCode::InvalidArgument, std::string(what) + ": polygon needs 3 vertices");
  for (auto& p : v) check_finite(p, what);
  double a = polygon_signed_area(v);
  if (std::abs(a) < 1e-300) throw Error(ErrorCode::InvalidArgument, std::string(what) + ": zero-area polygon");
  if (a < 0) std::reverse(v.begin(), v.end());
  return v;
}

static bool point_in_polygon_strict(const std::vector<Point>& v, Point p, double tol) {
  if (!point_in_polygon(v, p)) return false;
  for (size_t i = 0; i < v.size(); ++i)
    if (segment_distance(v[i], v[(i + 1) % v.size()], p) <= tol) return false;
  return true;
}

static bool point_in_polygon_closed(const std::vector<Point>& v, Point p, double tol) {
  if (point_in_polygon(v, p)) return true;
  for (size_t i = 0; i < v.size(); ++i)
    if (segment_distance(v[i], v[(i + 1) % v.size()], p) <= tol) return true;
  return false;
}

Domain::Domain(DomainSpec spec) : spec_(std::move(spec)) {
  auto& b = spec_.base;
  if (!(spec_.window > 0)) throw Error(ErrorCode::InvalidArgument, "window must be positive");
  switch (b.kind) {
    case BaseKind::Disk:
      check_finite(b.center, "disk");
      if (!(b.radius > 0)) throw Error(ErrorCode::InvalidArgument, "disk radius must be positive");
      break;
    case BaseKind::HalfPlane: {
      double n = norm(b.normal);
      if (std::abs(n - 1) > 1e-12) throw Error(ErrorCode::InvalidArgument, "half-plane normal must be a unit vector");
      break;
    }
    case BaseKind::Strip:
    case BaseKind::HalfStrip: {
      double n = norm(b.axis);
      if (!(n > 0)) throw Error(ErrorCode::InvalidArgument, "strip axis must be nonzero");
      b.axis = b.axis / n;
      if (!(b.radius > 0)) throw Error(ErrorCode::InvalidArgument, "strip half-width must be positive");
      break;
    }
    case BaseKind::Polygon: b.vertices = ccw(b.vertices, "base polygon"); break;
    case BaseKind::Plane: break;
  }
  unbounded_ = !(b.kind == BaseKind::Disk || b.kind == BaseKind::Polygon);
  spec_.unbounded = unbounded_;
  for (auto& h : spec_.holes) {
    switch (h.kind) {
      case HoleKind::Disk:
        check_finite(h.center, "hole disk");
        if (!(h.radius > 0)) throw Error(ErrorCode::InvalidArgument, "hole radius must be positive");
        break;
      case HoleKind::Polygon: h.vertices = ccw(h.vertices, "hole polygon"); break;
      case HoleKind::Puncture:
        check_finite(h.center, "puncture");
        if (!in_base_open(h.center))
          throw Error(ErrorCode::InvalidArgument, "puncture must lie in the open base");
        break;
      case HoleKind::Segment:
        check_finite(h.a, "slit");
        check_finite(h.b, "slit");
        if (dist(h.a, h.b) == 0) throw Error(ErrorCode::InvalidArgument, "slit endpoints coincide");
        if (!in_base_closed(h.a, 0) || !in_base_closed(h.b, 0) || !in_base_open(0.5 * (h.a + h.b)))
          throw Error(ErrorCode::InvalidArgument, "slit must lie in the base");
        break;
    }
  }
  build_pieces();
  double x0, y0, x1, y1;
  bbox(x0, y0, x1, y1);
  scale_ = std::max(1e-300, std::hypot(x1 - x0, y1 - y0));
  bool any_interior = false;
  for (int i = 0; i <= 8 && !any_interior; ++i)
    for (int j = 0; j <= 8 && !any_interior; ++j) {
      Point p{x0 + (x1 - x0) * (i + 0.5) / 9.0, y0 + (y1 - y0) * (j + 0.37) / 9.0};
      any_interior = contains(p);
    }
  if (!any_interior && b.kind != BaseKind::Plane) {
    // coarse probe missed; try the centroid of finite boundary pieces
    for (auto& pc : pieces_)
      if (pc.finite() && contains(pc.at(0.5) + Point{1e-9 * scale_, 1e-9 * scale_})) any_interior = true;
  }
  if (!any_interior) throw Error(ErrorCode::InvalidArgument, "domain interior appears empty");
}

bool Domain::in_base_closed(Point p, double tol) const {
  const auto& b = spec_.base;
  switch (b.kind) {
    case BaseKind::Disk: return dist(p, b.center) <= b.radius + tol;
    case BaseKind::HalfPlane: return dot(b.normal, p) >= b.offset - tol;
    case BaseKind::Strip: return std::abs(cross(b.axis, p - b.center)) <= b.radius + tol;
    case BaseKind::HalfStrip:
      return dot(b.axis, p - b.center) >= -tol && std::abs(cross(b.axis, p - b.center)) <= b.radius + tol;
    case BaseKind::Polygon:
      return tol >= 0 ? point_in_polygon_closed(b.vertices, p, tol) : point_in_polygon_strict(b.vertices, p, -tol);
    case BaseKind::Plane: return true;
  }
  return false;
}

bool Domain::in_hole_open(const HoleSpec& h, Point p, double tol) const {
  switch (h.kind) {
    case HoleKind::Disk: return dist(p, h.center) < h.radius - tol;
    case HoleKind::Polygon: return point_in_polygon_strict(h.vertices, p, tol);
    default: return false;
  }
}

bool Domain::in_base_open(Point p) const {
  const auto& b = spec_.base;
  bool in = false;
  switch (b.kind) {
    case BaseKind::Disk: in = dist(p, b.center) < b.radius; break;
    case BaseKind::HalfPlane: in = dot(b.normal, p) > b.offset; break;
    case BaseKind::Strip: in = std::abs(cross(b.axis, p - b.center)) < b.radius; break;
    case BaseKind::HalfStrip:
      in = dot(b.axis, p - b.center) > 0 && std::abs(cross(b.axis, p - b.center)) < b.radius;
      break;
    case BaseKind::Polygon: in = point_in_polygon_strict(b.vertices, p, 0); break;
    case BaseKind::Plane: in = true; break;
  }
  return in;
}

bool Domain::contains(Point p) const {
  if (!std::isfinite(p.x) || !std::isfinite(p.y)) return false;
  if (!in_base_open(p)) return false;
  for (const auto& h : spec_.holes) {
    switch (h.kind) {
      case HoleKind::Disk:
        if (dist(p, h.center) <= h.radius) return false;
        break;
      case HoleKind::Polygon:
        if (point_in_polygon_closed(h.vertices, p, 0)) return false;
        break;
      case HoleKind::Puncture:
        if (p == h.center) return false;
        break;
      case HoleKind::Segment:
        if (segment_distance(h.a, h.b, p) == 0) return false;
        break;
    }
  }
  return true;
}

bool Domain::covered(Point p, int owner) const {
  double tol = 1e-12 * scale_;
  if (owner >= 0 && !in_base_closed(p, tol)) return true;
  for (size_t j = 0; j < spec_.holes.size(); ++j) {
    if (static_cast<int>(j) == owner) continue;
    if (in_hole_open(spec_.holes[j], p, tol)) return true;
  }
  return false;
}

void Domain::add_clipped(BoundaryPiece pc, int owner) {
  if (!pc.finite() || pc.kind == PieceKind::Point) {
    if (pc.kind != PieceKind::Point || !covered(pc.p, owner)) pieces_.push_back(pc);
    return;
  }
  const int K = 512;
  std::vector<char> keep(K);
  bool all = true, none = true;
  for (int k = 0; k < K; ++k) {
    keep[k] = !covered(pc.at((k + 0.5) / K), owner);
    all = all && keep[k];
    none = none && !keep[k];
  }
  if (all) {
    pieces_.push_back(pc);
    return;
  }
  if (none) return;
  auto refine = [&](double lo, double hi, bool lo_kept) {
    for (int it = 0; it < 60; ++it) {
      double mid = 0.5 * (lo + hi);
      if ((!covered(pc.at(mid), owner)) == lo_kept) lo = mid; else hi = mid;
    }
    return 0.5 * (lo + hi);
  };
  auto emit = [&](double s0, double s1) {
    if (s1 - s0 < 1e-14) return;
    BoundaryPiece sub = pc;
    if (pc.kind == PieceKind::Segment) {
      sub.p = pc.at(s0);
      sub.q = pc.at(s1);
    } else {
      sub.t0 = pc.t0 + s0 * (pc.t1 - pc.t0);
      sub.t1 = pc.t0 + s1 * (pc.t1 - pc.t0);
      sub.full_circle = false;
    }
    pieces_.push_back(sub);
  };
  auto mid = [&](int u) { return (u + 0.5) / K; };
  auto kept = [&](int u) { return keep[((u % K) + K) % K] != 0; };
  // a full circle is walked from a dropped cell all the way round
  bool closed = pc.kind == PieceKind::Arc && pc.full_circle;
  int u0 = 0;
  if (closed)
    while (keep[u0]) ++u0;
  double rb = (!closed && keep[0]) ? 0.0 : -1.0;
  for (int u = u0 + 1; u <= u0 + K; ++u) {
    if (!closed && u == K) {
      if (rb >= 0) emit(rb, 1);
      break;
    }
    bool cur = kept(u), prev = kept(u - 1);
    if (cur && !prev) {
      rb = refine(mid(u - 1), mid(u), false);
    } else if (!cur && prev && rb >= 0) {
      emit(rb, refine(mid(u - 1), mid(u), true));
      rb = -1;
    }
  }
}

void Domain::build_pieces() {
  const auto& b = spec_.base;
  double W = spec_.window;
  auto arc = [&](Point c, double r, bool inside, bool hole, int comp) {
    BoundaryPiece pc;
    pc.kind = PieceKind::Arc;
    pc.center = c;
    pc.radius = r;
    pc.t0 = 0;
    pc.t1 = 2 * kPi;
    pc.full_circle = true;
    pc.domain_inside = inside;
    pc.hole = hole;
    pc.component = comp;
    return pc;
  };
  auto seg = [&](Point p, Point q, bool hole, int comp) {
    BoundaryPiece pc;
    pc.kind = PieceKind::Segment;
    pc.p = p;
    pc.q = q;
    pc.hole = hole;
    pc.component = comp;
    return pc;
  };
  auto straight = [&](PieceKind k, Point p, Point dir, int comp) {
    BoundaryPiece pc;
    pc.kind = k;
    pc.p = p;
    pc.q = dir;
    pc.window = W;
    pc.component = comp;
    return pc;
  };
  switch (b.kind) {
    case BaseKind::Disk: add_clipped(arc(b.center, b.radius, true, false, 0), -1); break;
    case BaseKind::HalfPlane: {
      Point foot = b.offset * b.normal;
      pieces_.push_back(straight(PieceKind::Line, foot, perp(b.normal), 0));
      break;
    }
    case BaseKind::Strip: {
      Point n = perp(b.axis);
      Point c = b.center - dot(b.center, b.axis) * b.axis;
      pieces_.push_back(straight(PieceKind::Line, c + b.radius * n, b.axis, 0));
      pieces_.push_back(straight(PieceKind::Line, c - b.radius * n, b.axis, 1));
      break;
    }
    case BaseKind::HalfStrip: {
      Point n = perp(b.axis);
      Point lo = b.center - b.radius * n, hi = b.center + b.radius * n;
      pieces_.push_back(straight(PieceKind::Ray, hi, b.axis, 0));
      add_clipped(seg(hi, lo, false, 0), -1);
      pieces_.push_back(straight(PieceKind::Ray, lo, b.axis, 0));
      break;
    }
    case BaseKind::Polygon:
      for (size_t i = 0; i < b.vertices.size(); ++i)
        add_clipped(seg(b.vertices[i], b.vertices[(i + 1) % b.vertices.size()], false, 0), -1);
      break;
    case BaseKind::Plane: break;
  }
  for (size_t j = 0; j < spec_.holes.size(); ++j) {
    const auto& h = spec_.holes[j];
    int comp = static_cast<int>(j) + 2;
    int owner = static_cast<int>(j);
    switch (h.kind) {
      case HoleKind::Disk: add_clipped(arc(h.center, h.radius, false, true, comp), owner); break;
      case HoleKind::Polygon:
        for (size_t i = 0; i < h.vertices.size(); ++i)
          add_clipped(seg(h.vertices[i], h.vertices[(i + 1) % h.vertices.size()], true, comp), owner);
        break;
      case HoleKind::Puncture: {
        BoundaryPiece pc;
        pc.kind = PieceKind::Point;
        pc.p = h.center;
        pc.hole = true;
        pc.component = comp;
        add_clipped(pc, owner);
        break;
      }
      case HoleKind::Segment: {
        auto pc = seg(h.a, h.b, true, comp);
        pc.slit = true;
        add_clipped(pc, owner);
        break;
      }
    }
  }
}

double Domain::boundary_distance(Point p) const {
  double d = kInf;
  for (const auto& pc : pieces_) d = std::min(d, pc.distance(p));
  return d;
}

std::pair<int, double> Domain::nearest(Point p) const {
  double best = kInf;
  int idx = -1;
  for (size_t i = 0; i < pieces_.size(); ++i) {
    double d = pieces_[i].distance(p);
    if (d < best) {
      best = d;
      idx = static_cast<int>(i);
    }
  }
  if (idx < 0) return {-1, 0.0};
  return {idx, pieces_[idx].closest_param(p)};
}

static bool segment_hits_arc(Point a, Point b, const BoundaryPiece& pc) {
  Point d = b - a, f = a - pc.center;
  double A = norm2(d), B = 2 * dot(f, d), C = norm2(f) - pc.radius * pc.radius;
  if (A == 0) return std::abs(std::sqrt(norm2(f)) - pc.radius) == 0;
  double disc = B * B - 4 * A * C;
  if (disc < 0) return false;
  double sq = std::sqrt(disc);
  double q = -0.5 * (B + (B >= 0 ? sq : -sq));
  std::array<double, 2> ts{q / A, q != 0 ? C / q : -B / (2 * A)};
  for (double t : ts) {
    if (t < 0 || t > 1) continue;
    if (pc.full_circle) return true;
    Point u = a + t * d - pc.center;
    double phi = wrap_angle(std::atan2(u.y, u.x), pc.t0);
    if (phi <= pc.t1 + 1e-15) return true;
  }
  return false;
}

bool Domain::segment_admissible(Point a, Point b) const {
  double tiny = 1e-15 * scale_;
  for (const auto& pc : pieces_) {
    switch (pc.kind) {
      case PieceKind::Point:
        if (segment_distance(a, b, pc.p) <= tiny) return false;
        break;
      case PieceKind::Segment:
        if (segments_intersect(a, b, pc.p, pc.q)) return false;
        break;
      case PieceKind::Arc:
        if (pc.full_circle && pc.domain_inside) break;  // chord of a disk stays inside
        if (segment_hits_arc(a, b, pc)) return false;
        break;
      case PieceKind::Ray: {
        double reach = dist(a, pc.p) + dist(b, pc.p) + 1;
        if (segments_intersect(a, b, pc.p, pc.p + reach * pc.q)) return false;
        break;
      }
      case PieceKind::Line: {
        double sa = cross(pc.q, a - pc.p), sb = cross(pc.q, b - pc.p);
        if (sa * sb <= 0) return false;
        break;
      }
    }
  }
  return true;
}

void Domain::bbox(double& x0, double& y0, double& x1, double& y1) const {
  const auto& b = spec_.base;
  double W = spec_.window;
  x0 = y0 = kInf;
  x1 = y1 = -kInf;
  auto add = [&](Point p) {
    x0 = std::min(x0, p.x);
    y0 = std::min(y0, p.y);
    x1 = std::max(x1, p.x);
    y1 = std::max(y1, p.y);
  };
  switch (b.kind) {
    case BaseKind::Disk:
      add(b.center - Point{b.radius, b.radius});
      add(b.center + Point{b.radius, b.radius});
      return;
    case BaseKind::Polygon:
      for (auto& v : b.vertices) add(v);
      return;
    case BaseKind::Strip: {
      Point n = perp(b.axis);
      for (double s : {-1.0, 1.0})
        for (double t : {-1.0, 1.0}) add(b.center + (s * W) * b.axis + (t * b.radius) * n);
      return;
    }
    case BaseKind::HalfStrip: {
      Point n = perp(b.axis);
      for (double s : {0.0, 1.0})
        for (double t : {-1.0, 1.0}) add(b.center + (s * W) * b.axis + (t * b.radius) * n);
      return;
    }
    case BaseKind::HalfPlane: {
      Point foot = b.offset * b.normal;
      Point t = perp(b.normal);
      for (double s : {-1.0, 1.0}) {
        add(foot + (s * W) * t);
        add(foot + (s * W) * t + (2 * W) * b.normal);
      }
      return;
    }
    case BaseKind::Plane: {
      Point c{0, 0};
      int n = 0;
      for (auto& pc : pieces_) {
        if (!pc.finite()) continue;
        c = c + pc.at(0.5);
        ++n;
      }
      if (n) c = c / n;
      add(c - Point{W, W});
      add(c + Point{W, W});
      return;
    }
  }
}

double Domain::diameter_scale() const {
  if (!unbounded_) return scale_;
  double x0 = kInf, y0 = kInf, x1 = -kInf, y1 = -kInf;
  for (auto& pc : pieces_) {
    if (!pc.finite()) continue;
    for (int k = 0; k <= 8; ++k) {
      Point p = pc.at(k / 8.0);
      x0 = std::min(x0, p.x);
      y0 = std::min(y0, p.y);
      x1 = std::max(x1, p.x);
      y1 = std::max(y1, p.y);
    }
  }
  const auto& b = spec_.base;
  if (b.kind == BaseKind::Strip || b.kind == BaseKind::HalfStrip) return 2 * b.radius;
  if (!(x1 > x0) && !(y1 > y0)) return 1;
  return std::max(std::hypot(x1 - x0, y1 - y0), 1e-300);
}

// ---------------------------------------------------------------- operations

double dist_to_boundary(const Domain& d, Point z) {
  if (!d.contains(z)) throw Error(ErrorCode::PointOutsideDomain, "point is not interior to the domain");
  double r = d.boundary_distance(z);
  if (!std::isfinite(r)) throw Error(ErrorCode::DegenerateBoundary, "domain has no finite boundary");
  return r;
}

BoundarySampling sample_boundary(const Domain& d, int m) {
  if (m < 2) throw Error(ErrorCode::InvalidArgument, "sample count must be at least 2");
  const auto& pcs = d.pieces();
  BoundarySampling s;
  s.sample_count = m;
  s.has_infinity = d.infinity_on_boundary();
  // group by component
  std::vector<int> comps;
  for (auto& pc : pcs) comps.push_back(pc.component);
  std::sort(comps.begin(), comps.end());
  comps.erase(std::unique(comps.begin(), comps.end()), comps.end());
  struct Comp {
    std::vector<int> idx;
    double length = 0;
    bool slit = false;
  };
  std::vector<Comp> cs;
  int points_only = 0;
  for (int c : comps) {
    Comp cc;
    for (size_t i = 0; i < pcs.size(); ++i) {
      if (pcs[i].component != c) continue;
      if (pcs[i].kind == PieceKind::Point) {
        ++points_only;
        s.points.push_back(pcs[i].p);
        s.accessible.push_back(1);
        s.curvature_radius.push_back(0);
        s.piece.push_back(static_cast<int>(i));
        s.param.push_back(0);
        s.side.push_back(0);
        continue;
      }
      cc.idx.push_back(static_cast<int>(i));
      double L = pcs[i].param_length();
      if (pcs[i].slit) {
        cc.slit = true;
        L *= 2;
      }
      cc.length += L;
    }
    if (!cc.idx.empty() && cc.length > 0) cs.push_back(cc);
  }
  int M = m - points_only;
  double total = 0;
  for (auto& c : cs) total += c.length;
  std::vector<int> alloc(cs.size(), 0);
  if (M > 0 && total > 0) {
    std::vector<std::pair<double, size_t>> rem;
    int used = 0;
    for (size_t i = 0; i < cs.size(); ++i) {
      double share = M * cs[i].length / total;
      alloc[i] = static_cast<int>(std::floor(share));
      used += alloc[i];
      rem.push_back({share - alloc[i], i});
    }
    std::stable_sort(rem.begin(), rem.end(), [](auto& a, auto& b) { return a.first > b.first; });
    for (size_t k = 0; used < M && k < rem.size(); ++k, ++used) alloc[rem[k].second]++;
  }
  for (size_t ci = 0; ci < cs.size(); ++ci) {
    const auto& c = cs[ci];
    int n = alloc[ci];
    if (n <= 0) continue;
    double h = c.length / n;
    s.spacing = std::max(s.spacing, h);
    for (int k = 0; k < n; ++k) {
      double arc = k * h;
      for (int pi : c.idx) {
        const auto& pc = pcs[pi];
        double L = pc.param_length();
        double span = pc.slit ? 2 * L : L;
        if (arc < span || pi == c.idx.back()) {
          double t = std::min(arc, span);
          int side = 0;
          char acc = 1;
          double u;
          if (pc.slit) {
            if (t <= L) {
              u = t / L;
              side = 1;
            } else {
              u = (2 * L - t) / L;
              side = -1;
              acc = 0;
            }
          } else {
            u = L > 0 ? t / L : 0;
          }
          u = std::clamp(u, 0.0, 1.0);
          s.points.push_back(pc.at(u));
          s.accessible.push_back(acc);
          s.curvature_radius.push_back(pc.curvature_radius());
          s.piece.push_back(pi);
          s.param.push_back(u);
          s.side.push_back(side);
          break;
        }
        arc -= span;
      }
    }
  }
  // distinct points (infinity counts as one)
  size_t distinct = s.has_infinity ? 1 : 0;
  for (size_t i = 0; i < s.points.size() && distinct < 2; ++i) {
    bool dup = false;
    for (size_t j = 0; j < i; ++j)
      if (s.points[j] == s.points[i]) dup = true;
    if (!dup) ++distinct;
  }
  if (distinct < 2) throw Error(ErrorCode::DegenerateBoundary, "boundary has fewer than 2 distinct points");
  return s;
}

Point invert(Point center, Point w) {
  Point u = w - center;
  double r2 = norm2(u);
  if (r2 == 0) throw Error(ErrorCode::InversionAtCenter, "inversion at its own centre");
  return center + u / r2;
}

static Disk circle2(Point a, Point b) { return {(a + b) / 2, dist(a, b) / 2}; }

static Disk circle3(Point a, Point b, Point c) {
  Point ab = b - a, ac = c - a;
  double dd = 2 * cross(ab, ac);
  if (std::abs(dd) < 1e-300) {
    Disk d1 = circle2(a, b), d2 = circle2(a, c), d3 = circle2(b, c);
    if (d1.radius >= d2.radius && d1.radius >= d3.radius) return d1;
    return d2.radius >= d3.radius ? d2 : d3;
  }
  double b2 = norm2(ab), c2 = norm2(ac);
  Point o{(ac.y * b2 - ab.y * c2) / dd, (ab.x * c2 - ac.x * b2) / dd};
  return {a + o, norm(o)};
}

Disk smallest_enclosing_disk(const std::vector<Point>& input) {
  if (input.empty()) throw Error(ErrorCode::EmptyInput, "smallest enclosing disk of no points");
  std::vector<Point> p = input;
  std::mt19937 rng(0x5eed);
  std::shuffle(p.begin(), p.end(), rng);
  auto outside = [](const Disk& d, Point q) { return dist(d.center, q) > d.radius * (1 + 1e-14) + 1e-300; };
  Disk d{p[0], 0};
  for (size_t i = 1; i < p.size(); ++i) {
    if (!outside(d, p[i])) continue;
    d = {p[i], 0};
    for (size_t j = 0; j < i; ++j) {
      if (!outside(d, p[j])) continue;
      d = circle2(p[i], p[j]);
      for (size_t k = 0; k < j; ++k)
        if (outside(d, p[k])) d = circle3(p[i], p[j], p[k]);
    }
  }
  return d;
}

TangentRadii tangent_ball_radii(const Domain& d, Point x, Point theta, const BoundarySampling& s) {
  if (d.spec().contains_infinity)
    throw Error(ErrorCode::UnsupportedInfinityInDomain, "tangent balls through infinity are not supported");
  if (!d.contains(x)) throw Error(ErrorCode::PointOutsideDomain, "point is not interior to the domain");
  TangentRadii r;
  for (Point b : s.points) {
    Point u = b - x;
    double t = dot(u, theta);
    if (t > 0) r.r_plus = std::min(r.r_plus, norm2(u) / (2 * t));
    else if (t < 0) r.r_minus = std::min(r.r_minus, norm2(u) / (-2 * t));
  }
  return r;
}

// min over t in [t0,t1] of |w + t d|^2 / (2 (w + t d).theta), positive denominators only
static double line_family_radius(Point w, Point dvec, Point th, double t0, double t1) {
  double A = dot(w, th), Bd = dot(dvec, th), dd = norm2(dvec), wd = dot(w, dvec), ww = norm2(w);
  auto f = [&](double t) {
    double den = 2 * (A + t * Bd);
    if (!(den > 0)) return kInf;
    return (ww + 2 * t * wd + t * t * dd) / den;
  };
  double best = kInf;
  if (std::isfinite(t0)) best = std::min(best, f(t0));
  if (std::isfinite(t1)) best = std::min(best, f(t1));
  double qa = Bd * dd, qb = 2 * A * dd, qc = 2 * A * wd - Bd * ww;
  auto consider = [&](double t) {
    if (t >= t0 && t <= t1) best = std::min(best, f(t));
  };
  if (std::abs(qa) < 1e-300) {
    if (qb != 0) consider(-qc / qb);
  } else {
    double disc = qb * qb - 4 * qa * qc;
    if (disc >= 0) {
      double sq = std::sqrt(disc);
      double q = -0.5 * (qb + (qb >= 0 ? sq : -sq));
      consider(q / qa);
      if (q != 0) consider(qc / q);
    }
  }
  return best;
}

static double arc_radius_generic(const BoundaryPiece& pc, Point x, Point th) {
  auto f = [&](double s) {
    Point u = pc.at(s) - x;
    double t = dot(u, th);
    return t > 0 ? norm2(u) / (2 * t) : kInf;
  };
  const int K = 64;
  double best = kInf;
  int bi = -1;
  for (int k = 0; k <= K; ++k) {
    double v = f(static_cast<double>(k) / K);
    if (v < best) {
      best = v;
      bi = k;
    }
  }
  if (bi < 0) return kInf;
  double lo = std::max(0, bi - 1) / static_cast<double>(K), hi = std::min(K, bi + 1) / static_cast<double>(K);
  const double g = 0.5 * (std::sqrt(5.0) - 1);
  double a = lo, b = hi, c = b - g * (b - a), e = a + g * (b - a);
  double fc = f(c), fe = f(e);
  for (int it = 0; it < 80; ++it) {
    if (fc < fe) {
      b = e;
      e = c;
      fe = fc;
      c = b - g * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = e;
      fc = fe;
      e = a + g * (b - a);
      fe = f(e);
    }
  }
  return std::min({best, fc, fe});
}

static double piece_radius(const BoundaryPiece& pc, Point x, Point th) {
  switch (pc.kind) {
    case PieceKind::Point: {
      Point u = pc.p - x;
      double t = dot(u, th);
      return t > 0 ? norm2(u) / (2 * t) : kInf;
    }
    case PieceKind::Segment: return line_family_radius(pc.p - x, pc.q - pc.p, th, 0, 1);
    case PieceKind::Ray: return line_family_radius(pc.p - x, pc.q, th, 0, kInf);
    case PieceKind::Line: {
      Point n = perp(pc.q);
      double sd = dot(n, x - pc.p);
      if (sd < 0) {
        n = -n;
        sd = -sd;
      }
      double den = 1 - dot(n, th);
      return den > 1e-15 ? sd / den : kInf;
    }
    case PieceKind::Arc: {
      Point u = x - pc.center;
      double s;
      if (pc.domain_inside) {
        s = (pc.radius * pc.radius - norm2(u)) / (2 * (pc.radius + dot(u, th)));
      } else {
        double den = pc.radius - dot(u, th);
        s = den > 0 ? (norm2(u) - pc.radius * pc.radius) / (2 * den) : kInf;
      }
      if (pc.full_circle) return s;
      if (std::isfinite(s)) {
        Point bc = x + s * th - pc.center;
        double phi = wrap_angle(std::atan2(bc.y, bc.x), pc.t0);
        if (phi <= pc.t1) return s;
      }
      return arc_radius_generic(pc, x, th);
    }
  }
  return kInf;
}

double tangent_radius_exact(const Domain& d, Point x, Point theta) {
  double r = kInf;
  for (const auto& pc : d.pieces()) r = std::min(r, piece_radius(pc, x, theta));
  return r;
}

TangentRadii tangent_ball_radii_exact(const Domain& d, Point x, Point theta) {
  if (d.spec().contains_infinity)
    throw Error(ErrorCode::UnsupportedInfinityInDomain, "tangent balls through infinity are not supported");
  return {tangent_radius_exact(d, x, theta), tangent_radius_exact(d, x, -theta)};
}

}  // namespace hm
