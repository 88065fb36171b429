#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "hypmetrica/errors.hpp"

namespace hm {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = 3.14159265358979323846;

struct Point {
  double x = 0, y = 0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator-(Point a) { return {-a.x, -a.y}; }
inline Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
inline Point operator*(Point a, double s) { return {s * a.x, s * a.y}; }
inline Point operator/(Point a, double s) { return {a.x / s, a.y / s}; }
inline bool operator==(Point a, Point b) { return a.x == b.x && a.y == b.y; }
inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm2(Point a) { return dot(a, a); }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double dist(Point a, Point b) { return norm(a - b); }
inline Point perp(Point a) { return {-a.y, a.x}; }
inline Point unit(Point a) { return a / norm(a); }
inline Point polar(double r, double t) { return {r * std::cos(t), r * std::sin(t)}; }

struct Disk {
  Point center;
  double radius = 0;
};

// interior is {p : dot(normal, p) > offset}
struct HalfPlane {
  Point normal{0, 1};
  double offset = 0;
};

enum class BaseKind { Disk, HalfPlane, Strip, HalfStrip, Polygon, Plane };
enum class HoleKind { Disk, Polygon, Puncture, Segment };

struct BaseSpec {
  BaseKind kind = BaseKind::Plane;
  Point center;          // disk centre, strip/halfstrip origin
  double radius = 1;     // disk radius, strip/halfstrip half-width
  Point normal{0, 1};    // half-plane
  double offset = 0;
  Point axis{1, 0};      // strip/halfstrip direction
  std::vector<Point> vertices;
};

struct HoleSpec {
  HoleKind kind = HoleKind::Puncture;
  Point center;  // disk centre or puncture
  double radius = 0;
  std::vector<Point> vertices;
  Point a, b;  // slit endpoints
};

struct DomainSpec {
  BaseSpec base;
  std::vector<HoleSpec> holes;
  bool unbounded = false;
  bool contains_infinity = false;
  double window = 64;  // sampling window for rays and lines
  std::string name;
};

enum class PieceKind { Point, Segment, Arc, Ray, Line };

// One connected piece of the boundary.  Arcs run counter-clockwise from t0 to t1.
struct BoundaryPiece {
  PieceKind kind = PieceKind::Point;
  Point p, q;  // segment endpoints, or ray/line origin p and unit direction q
  Point center;
  double radius = 0, t0 = 0, t1 = 0;
  bool full_circle = false;
  bool domain_inside = false;  // arcs: domain lies inside the circle
  bool slit = false;
  bool hole = false;
  int component = 0;
  double window = 64;

  Point at(double s) const;  // s in [0,1]; rays and lines use the sampling window
  double param_length() const;
  double length() const;  // infinite for rays and lines
  double distance(Point z) const;
  double closest_param(Point z) const;
  double curvature_radius() const { return kind == PieceKind::Arc ? radius : kInf; }
  bool finite() const { return kind != PieceKind::Ray && kind != PieceKind::Line; }
};

struct BoundarySampling {
  std::vector<Point> points;
  std::vector<char> accessible;
  std::vector<double> curvature_radius;
  std::vector<int> piece;     // index into Domain::pieces()
  std::vector<double> param;  // parameter on that piece
  std::vector<int> side;      // +1 / -1 on slits, 0 elsewhere
  int sample_count = 0;
  bool has_infinity = false;
  double spacing = 0;
  size_t size() const { return points.size(); }
};

struct PathPolyline {
  std::vector<Point> vertices;
  double length = 0;
};

double polyline_length(const std::vector<Point>& v);

class Domain {
 public:
  explicit Domain(DomainSpec spec);

  const DomainSpec& spec() const { return spec_; }
  const std::vector<BoundaryPiece>& pieces() const { return pieces_; }
  bool unbounded() const { return unbounded_; }
  bool infinity_on_boundary() const { return unbounded_ && !spec_.contains_infinity; }
  bool contains(Point p) const;
  // distance to the boundary without the membership check
  double boundary_distance(Point p) const;
  // nearest piece and parameter
  std::pair<int, double> nearest(Point p) const;
  bool segment_admissible(Point a, Point b) const;
  // bounding box of the domain clipped to the sampling window
  void bbox(double& x0, double& y0, double& x1, double& y1) const;
  double diameter_scale() const;

 private:
  void build_pieces();
  bool in_base_closed(Point p, double tol) const;
  bool in_base_open(Point p) const;
  bool in_hole_open(const HoleSpec& h, Point p, double tol) const;
  bool covered(Point p, int owner) const;
  void add_clipped(BoundaryPiece piece, int owner);

  DomainSpec spec_;
  std::vector<BoundaryPiece> pieces_;
  bool unbounded_ = false;
  double scale_ = 1;
};

double dist_to_boundary(const Domain& d, Point z);
BoundarySampling sample_boundary(const Domain& d, int m);
Point invert(Point center, Point w);
Disk smallest_enclosing_disk(const std::vector<Point>& pts);

struct TangentRadii {
  double r_plus = kInf, r_minus = kInf;
};
TangentRadii tangent_ball_radii(const Domain& d, Point x, Point theta, const BoundarySampling& s);
// per-piece closed forms, no sampling
TangentRadii tangent_ball_radii_exact(const Domain& d, Point x, Point theta);
double tangent_radius_exact(const Domain& d, Point x, Point theta);

// polygon helpers
double polygon_signed_area(const std::vector<Point>& v);
bool point_in_polygon(const std::vector<Point>& v, Point p);
double segment_distance(Point a, Point b, Point p);
bool segments_intersect(Point a, Point b, Point c, Point d);
double segment_segment_distance(Point a, Point b, Point c, Point d);

}  // namespace hm
