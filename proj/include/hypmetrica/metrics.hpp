#pragma once

#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "hypmetrica/geometry.hpp"

namespace hm {

struct TraceEntry {
  double resolution = 0;
  double value = 0;
};

struct MetricValue {
  double value = 0;
  double error_estimate = 0;
  std::vector<TraceEntry> refinement_trace;
};

struct ApollonianParameters {
  double q_x = 1, q_y = 1;
  Point argmax_a, argmax_b;
  bool a_at_infinity = false, b_at_infinity = false;
  // Apollonian balls; radius is infinite when q = 1 (half-plane)
  Point ball_x_center, ball_y_center;
  double ball_x_radius = kInf, ball_y_radius = kInf;
};

struct ApollonianResult {
  MetricValue metric;
  ApollonianParameters params;
};

// refine=false keeps the plain sample supremum (monotone in m)
ApollonianResult apollonian_distance(const Domain& d, Point x, Point y, int m, bool refine = true);

enum class JVariant { Min, Product };
MetricValue j_distance(const Domain& d, Point x, Point y, JVariant v);

struct DirectedDensity {
  double value = 0;
  double r_plus = kInf, r_minus = kInf;
};
DirectedDensity make_directed_density(double r_plus, double r_minus);
// m > 0: radii from m boundary samples; m == 0: per-piece closed forms
DirectedDensity apollonian_directed_density(const Domain& d, Point x, Point theta, int m);
DirectedDensity apollonian_directed_density(const Domain& d, Point x, Point theta, const BoundarySampling& s);

double hyperbolic_density(const Disk& b, Point z);
double hyperbolic_density(const HalfPlane& h, Point z);

MetricValue ferrand_density(const Domain& d, Point z, int m, bool refine = true);

struct ExtremalDisk {
  bool is_half_plane = false;
  Disk disk;
  HalfPlane half_plane;
  std::vector<Point> contact_points;
  int contact_count = 0;
  bool continuum = false;  // contact along a whole boundary arc or line
  bool contact_at_infinity = false;  // counted in contact_count
  double chart_radius = 0;  // enclosing radius of the inverted boundary
  Point chart_center;
};

struct KPResult {
  MetricValue metric;
  ExtremalDisk extremal;
};

KPResult kp_density(const Domain& d, Point z, int m, double contact_tol = 1e-4);
ExtremalDisk extremal_disk(const Domain& d, Point z, int m, double contact_tol = 1e-4);
// hyperbolic density of the extremal disk evaluated directly at z
double extremal_disk_density(const ExtremalDisk& e, Point z);

MetricValue seittenranta_distance(const Domain& d, Point x, Point y, int m, bool refine = true);

struct CircularGeodesic {
  ExtremalDisk extremal;
  Point p, q;  // endpoints (the two contacts)
  Point hyperbolic_center;
  bool is_segment = false;  // diameter or vertical ray
  Point arc_center;         // circle carrying the geodesic when !is_segment
  double arc_radius = 0;
  Point tangent_at_center;  // unit tangent of the geodesic at the hyperbolic centre
};

CircularGeodesic circular_geodesic(const Domain& d, Point z, int m, double contact_tol = 1e-4);

struct HmaSample {
  std::vector<CircularGeodesic> geodesics;
  std::vector<size_t> seed_index;
  std::vector<std::string> skipped;  // one note per skipped seed
};
HmaSample hma_sample(const Domain& d, const std::vector<Point>& seeds, int m, double contact_tol = 1e-4);

// -inf marker on ties and when R - delta vanishes
double qh_curvature(const Domain& d, Point z, double tol = 1e-9);

// density integrals along a polyline (adaptive Simpson per segment)
double path_length_with_density(const std::vector<Point>& path, const std::function<double(Point)>& density,
                                double rel_tol = 1e-7);

// ---------------------------------------------------------------- path metrics

struct GridOptions {
  int grid = 8;          // base resolution: cells per unit of the local scale
  double tol = 5e-3;     // stop refining when the relative change falls below this
  int max_levels = 4;    // resolution doublings
  int min_levels = 2;
};

struct GeodesicResult {
  MetricValue metric;
  PathPolyline path;
};

GeodesicResult quasihyperbolic_distance(const Domain& d, Point x, Point y, const GridOptions& g = {});
GeodesicResult apollonian_inner_distance(const Domain& d, Point x, Point y, const GridOptions& g = {});

// inner Euclidean length; x or y may be accessible boundary points
GeodesicResult lambda_length(const Domain& d, Point x, Point y, const GridOptions& g = {});
// refine=false keeps the plain sample supremum
MetricValue lambda_apollonian_distance(const Domain& d, Point x, Point y, int m, const GridOptions& g = {},
                                       bool refine = true);
// product-form j with the Euclidean distance replaced by the lambda-length
MetricValue j_prime_distance(const Domain& d, Point x, Point y, const GridOptions& g = {});

}  // namespace hm
