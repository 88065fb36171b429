#include <doctest.h>

#include <random>

#include "hypmetrica/domain_json.hpp"
#include "hypmetrica/metrics.hpp"
#include "hypmetrica/relations.hpp"

using namespace hm;

namespace {

Domain named(const char* n) { return Domain(named_domain(n)); }

double hyperbolic_disk(double t) { return std::log((1 + t) / (1 - t)); }

// O(m^2) oracle for the Ferrand density
double ferrand_brute(const std::vector<Point>& b, Point z) {
  double best = 0;
  for (size_t i = 0; i < b.size(); ++i)
    for (size_t j = i + 1; j < b.size(); ++j)
      best = std::max(best, dist(b[i], b[j]) / (dist(b[i], z) * dist(b[j], z)));
  return best;
}

}  // namespace

TEST_CASE("Apollonian metric") {
  auto disk = named("disk");
  CHECK(apollonian_distance(disk, {0, 0}, {0.5, 0}, 10000).metric.value == doctest::Approx(std::log(3.0)).epsilon(1e-6));
  CHECK(apollonian_distance(disk, {0.2, 0.1}, {0.2, 0.1}, 256).metric.value == 0);

  auto hp = named("halfplane");
  // equals the hyperbolic distance in a half-plane
  double a = apollonian_distance(hp, {0, 1}, {0, 4}, 4096).metric.value;
  CHECK(a == doctest::Approx(std::log(4.0)).epsilon(1e-3));

  auto r = apollonian_distance(disk, {0, 0}, {0.5, 0}, 4096);
  CHECK(std::log(r.params.q_x * r.params.q_y) == doctest::Approx(r.metric.value));
  CHECK(r.params.q_x >= 1);
  CHECK(r.params.q_y >= 1);

  // punctured disk: diametrical pair on the circle of radius eps around the puncture
  auto pd = named("punctured_disk");
  double prev = kInf;
  for (double eps : {0.1, 0.05, 0.01}) {
    double v = apollonian_distance(pd, {eps, 0}, {-eps, 0}, 4096).metric.value;
    CHECK(v < prev);
    prev = v;
    CHECK(j_distance(pd, {eps, 0}, {-eps, 0}, JVariant::Min).value == doctest::Approx(std::log(3.0)).epsilon(1e-12));
  }
}

TEST_CASE("Apollonian metric is nondecreasing in the sample count") {
  auto d = named("square");
  double prev = 0;
  for (int m : {16, 32, 64, 128, 256}) {
    double v = apollonian_distance(d, {-0.3, 0.2}, {0.5, -0.4}, m, false).metric.value;
    CHECK(v >= prev - 1e-15);
    prev = v;
  }
}

TEST_CASE("j metric") {
  auto strip = named("strip");
  for (double R : {1.0, 3.0, 10.0})
    CHECK(j_distance(strip, {R, 0}, {-R, 0}, JVariant::Min).value == doctest::Approx(std::log(1 + 2 * R)).epsilon(1e-15));
  CHECK(j_distance(strip, {0.3, 0.1}, {0.3, 0.1}, JVariant::Min).value == 0);
  CHECK(j_distance(strip, {0.3, 0.1}, {0.3, 0.1}, JVariant::Product).value == 0);

  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> U(-0.95, 0.95);
  auto disk = named("disk");
  for (int i = 0; i < 200; ++i) {
    Point x{U(rng) * 0.7, U(rng) * 0.7}, y{U(rng) * 0.7, U(rng) * 0.7};
    double jm = j_distance(disk, x, y, JVariant::Min).value, jp = j_distance(disk, x, y, JVariant::Product).value;
    CHECK(jm <= jp);
    CHECK(jp <= 2 * jm);
  }
}

TEST_CASE("quasihyperbolic metric") {
  auto strip = named("strip");
  auto k = quasihyperbolic_distance(strip, {3, 0}, {-3, 0});
  CHECK(k.metric.value == doctest::Approx(6).epsilon(1e-2));
  CHECK(k.metric.value >= std::log(7.0) - 5e-3);

  auto hp = named("halfplane");
  CHECK(quasihyperbolic_distance(hp, {0, 1}, {0, 4}).metric.value == doctest::Approx(std::log(4.0)).epsilon(1e-2));

  auto pp = named("punctured_plane");
  auto g = quasihyperbolic_distance(pp, {1, 0}, {-1, 0});
  CHECK(g.metric.value == doctest::Approx(kPi).epsilon(1e-2));
  REQUIRE(g.path.vertices.size() >= 2);
  CHECK(g.path.length == doctest::Approx(polyline_length(g.path.vertices)).epsilon(1e-10));
  for (size_t i = 1; i + 1 < g.path.vertices.size(); ++i) CHECK(pp.contains(g.path.vertices[i]));

  auto& tr = k.metric.refinement_trace;
  REQUIRE(tr.size() >= 2);
  CHECK(std::abs(tr[tr.size() - 1].value - tr[tr.size() - 2].value) <= k.metric.error_estimate + 1e-12);
  for (size_t i = 1; i < tr.size(); ++i) CHECK(tr[i].value <= tr[i - 1].value + 1e-9);
}

TEST_CASE("directed Apollonian density") {
  auto disk = named("disk");
  CHECK(apollonian_directed_density(disk, {0, 0}, {1, 0}, 0).value == doctest::Approx(2));
  auto hp = named("halfplane");
  CHECK(apollonian_directed_density(hp, {0, 1}, {1, 0}, 0).value == doctest::Approx(1));
  CHECK(apollonian_directed_density(hp, {0, 1}, {0, 1}, 0).value == doctest::Approx(1));
  auto dd = make_directed_density(0.25, kInf);
  CHECK(dd.value == doctest::Approx(2).epsilon(1e-15));
}

TEST_CASE("Apollonian inner metric") {
  auto disk = named("disk");
  CHECK(apollonian_inner_distance(disk, {0, 0}, {0.5, 0}).metric.value ==
        doctest::Approx(hyperbolic_disk(0.5)).epsilon(1e-2));
  CHECK(apollonian_inner_distance(disk, {0.1, 0.1}, {0.1, 0.1}).metric.value == 0);

  auto strip = named("strip");
  double at = apollonian_inner_distance(strip, {3, 0}, {-3, 0}).metric.value;
  double k = quasihyperbolic_distance(strip, {3, 0}, {-3, 0}).metric.value;
  double a = apollonian_distance(strip, {3, 0}, {-3, 0}, 4096).metric.value;
  CHECK(at >= k / 2 - 1e-2);
  CHECK(at <= 2 * k + 1e-2);
  CHECK(a <= at + 1e-2);
}

TEST_CASE("hyperbolic density") {
  CHECK(hyperbolic_density(Disk{{0, 0}, 1}, {0, 0}) == doctest::Approx(2));
  CHECK(hyperbolic_density(Disk{{0, 0}, 1}, {0.5, 0}) == doctest::Approx(8.0 / 3));
  CHECK(hyperbolic_density(HalfPlane{{0, 1}, 0}, {0, 2}) == doctest::Approx(0.5));
}

TEST_CASE("Ferrand density") {
  CHECK(ferrand_density(named("disk"), {0, 0}, 1024).value == doctest::Approx(2).epsilon(1e-6));
  CHECK(ferrand_density(named("halfplane"), {0, 1}, 4096).value == doctest::Approx(1).epsilon(1e-3));

  auto sq = named("square");
  auto s = sample_boundary(sq, 256);
  for (Point z : {Point{0, 0}, Point{0.5, -0.2}, Point{-0.8, 0.7}})
    CHECK(ferrand_density(sq, z, 256, false).value == doctest::Approx(ferrand_brute(s.points, z)).epsilon(1e-12));
}

TEST_CASE("Kulkarni-Pinkall density") {
  auto disk = named("disk");
  auto k = kp_density(disk, {0, 0}, 1024);
  CHECK(k.metric.value == doctest::Approx(2).epsilon(1e-6));
  CHECK(k.extremal.disk.radius == doctest::Approx(1).epsilon(1e-6));
  CHECK(k.extremal.continuum);

  auto hp = kp_density(named("halfplane"), {0, 1}, 4096);
  CHECK(hp.metric.value == doctest::Approx(1).epsilon(1e-3));
  CHECK(hp.extremal.is_half_plane);

  // direct density of the recovered extremal disk
  for (const char* n : {"square", "annulus", "lollipop"}) {
    auto d = named(n);
    for (Point z : {Point{0.6, 0.6}, Point{-0.7, 0.9}, Point{0.75, -0.8}}) {
      if (!d.contains(z)) continue;
      auto r = kp_density(d, z, 2048);
      CHECK(extremal_disk_density(r.extremal, z) == doctest::Approx(r.metric.value).epsilon(1e-9));
    }
  }
}

TEST_CASE("density sandwiches") {
  for (const char* n : {"disk", "square", "annulus", "lollipop", "square_minus_disk"}) {
    auto d = named(n);
    for (auto& z : sample_points(d, 20, 42)) {
      double delta = dist_to_boundary(d, z);
      double s = ferrand_density(d, z, 2048).value, m = kp_density(d, z, 2048).metric.value;
      CHECK(delta * s >= 1 - 1e-6);
      CHECK(delta * s <= 2 + 1e-6);
      CHECK(delta * m >= 1 - 1e-6);
      CHECK(delta * m <= 2 + 1e-6);
      CHECK(s <= m * (1 + 1e-9));
      CHECK(m <= 2 / std::sqrt(3.0) * s * (1 + 2e-2));
    }
  }
}

TEST_CASE("annulus is 2-extremal") {
  auto ann = named("annulus");
  for (auto& z : sample_points(ann, 20, 5)) {
    double s = ferrand_density(ann, z, 4096).value, m = kp_density(ann, z, 4096).metric.value;
    CHECK(std::abs(m - s) / s <= 2e-2);
  }
}

TEST_CASE("extremal disk and circular geodesic") {
  auto ann = named("annulus");
  auto e = extremal_disk(ann, {2.5, 0}, 4096);
  CHECK(e.disk.center.x == doctest::Approx(2.5).epsilon(1e-4));
  CHECK(std::abs(e.disk.center.y) < 1e-4);
  CHECK(e.disk.radius == doctest::Approx(1.5).epsilon(1e-4));
  CHECK(e.contact_count == 2);

  auto g = circular_geodesic(ann, {2.5, 0}, 4096);
  CHECK(g.is_segment);
  CHECK(g.hyperbolic_center.x == doctest::Approx(2.5).epsilon(1e-4));

  auto s = circular_geodesic(named("strip"), {0, 0.3}, 4096);
  CHECK(std::abs(s.hyperbolic_center.x) < 1e-3);
  CHECK(std::abs(s.hyperbolic_center.y) < 1e-3);

  // full contact circle
  CHECK_THROWS_AS(circular_geodesic(named("disk"), {0, 0}, 1024), Error);
}

TEST_CASE("hyperbolic medial axis") {
  auto ann = named("annulus");
  std::vector<Point> seeds;
  for (int k = 0; k < 8; ++k) seeds.push_back(polar(2 + 0.2 * (k % 3), 2 * kPi * k / 8));
  auto h = hma_sample(ann, seeds, 4096);
  REQUIRE(h.geodesics.size() == seeds.size());
  for (auto& g : h.geodesics) {
    CHECK(norm(g.hyperbolic_center) == doctest::Approx(2.5).epsilon(1e-3));
    // the geodesic crosses the medial circle at a right angle
    Point radial = unit(g.hyperbolic_center);
    double ang = std::acos(std::min(1.0, std::abs(dot(unit(g.tangent_at_center), radial))));
    CHECK(ang * 180 / kPi <= 2);
  }

  auto strip = named("strip");
  auto hs = hma_sample(strip, {{-1, 0.3}, {0, 0.3}, {2, -0.5}}, 4096);
  for (auto& g : hs.geodesics) {
    CHECK(std::abs(g.hyperbolic_center.y) < 1e-3);
    CHECK(std::abs(g.tangent_at_center.x) < std::sin(2 * kPi / 180));
  }
  CHECK(hma_sample(strip, {}, 1024).geodesics.empty());
}

TEST_CASE("Seittenranta metric") {
  auto disk = named("disk");
  CHECK(seittenranta_distance(disk, {0, 0}, {0.5, 0}, 4096).value == doctest::Approx(std::log(3.0)).epsilon(1e-6));
  CHECK(seittenranta_distance(disk, {0.3, 0}, {0.3, 0}, 256).value == 0);

  // s is below the Ferrand and K-P lengths of a joining segment
  auto sq = named("square");
  Point x{-0.5, -0.3}, y{0.4, 0.5};
  double s = seittenranta_distance(sq, x, y, 1024).value;
  double sig = path_length_with_density({x, y}, [&](Point z) { return ferrand_density(sq, z, 512).value; }, 1e-5);
  double mu = path_length_with_density({x, y}, [&](Point z) { return kp_density(sq, z, 512).metric.value; }, 1e-5);
  CHECK(s <= sig + 1e-6);
  CHECK(sig <= mu + 1e-6);
}

TEST_CASE("lambda length and lambda-Apollonian") {
  auto sq = named("square");
  CHECK(lambda_length(sq, {-0.5, -0.5}, {0.5, 0.7}).metric.value == doctest::Approx(std::hypot(1.0, 1.2)).epsilon(1e-3));
  auto ext = named("square_exterior");
  CHECK(lambda_length(ext, {-1, 2}, {1, 2}).metric.value == doctest::Approx(2).epsilon(1e-3));
  // around the square: tangent to the corners
  double around = 2 * std::hypot(0.5, 0.5) + 1;
  CHECK(lambda_length(ext, {-1, 0}, {1, 0}).metric.value == doctest::Approx(around).epsilon(1e-3));

  auto disk = named("disk");
  double la = lambda_apollonian_distance(disk, {0, 0}, {0.5, 0}, 1024).value;
  CHECK(la == doctest::Approx(std::log(3.0)).epsilon(1e-3));
  CHECK(lambda_apollonian_distance(disk, {0.2, 0}, {0.2, 0}, 256).value == 0);

  Point z1{-2, 0.5}, z2{-2, -0.5};
  double d1 = dist_to_boundary(ext, z1);
  CHECK(lambda_apollonian_distance(ext, z1, z2, 512).value <= std::log(1 + 1 / (d1 * d1)) + 1e-2);
}

TEST_CASE("quasihyperbolic curvature") {
  CHECK(qh_curvature(named("halfplane"), {0.3, 2}) == doctest::Approx(-1));
  auto ext = named("disk_exterior");
  CHECK(qh_curvature(ext, {1.5, 0}) == doctest::Approx(-2));
  CHECK(qh_curvature(ext, {2, 0}) == -kInf);
  CHECK(qh_curvature(named("square"), {0.9, 0.9}) == -kInf);
  CHECK_THROWS_AS(qh_curvature(named("square_exterior"), {1, 1}), Error);
}

TEST_CASE("metric axioms on random triples") {
  MetricContext ctx;
  ctx.samples = 1024;
  for (const char* n : {"disk", "square", "annulus"}) {
    auto d = named(n);
    auto pts = sample_points(d, 12, 9);
    for (MetricKind k : {MetricKind::Apollonian, MetricKind::JMin, MetricKind::JProduct, MetricKind::Seittenranta,
                         MetricKind::Quasihyperbolic}) {
      double tol = 3 * ctx.grid.tol;
      for (int i = 0; i + 2 < 12; i += 3) {
        Point x = pts[i], y = pts[i + 1], z = pts[i + 2];
        double xy = evaluate_metric(d, k, x, y, ctx), yx = evaluate_metric(d, k, y, x, ctx);
        double yz = evaluate_metric(d, k, y, z, ctx), xz = evaluate_metric(d, k, x, z, ctx);
        CHECK(std::abs(xy - yx) <= tol * std::max(1.0, xy));
        CHECK(xz <= (xy + yz) * (1 + tol) + 1e-12);
      }
    }
  }
}
