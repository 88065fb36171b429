#include <doctest.h>

#include "hypmetrica/domain_json.hpp"
#include "hypmetrica/relations.hpp"

using namespace hm;

namespace {

Domain named(const char* n) { return Domain(named_domain(n)); }

RelationEstimate synthetic(const std::vector<std::pair<double, double>>& sup_inf) {
  RelationEstimate e;
  double s = 1;
  for (auto [sup, inf] : sup_inf) {
    e.refinement_history.push_back({s, sup, inf, 50});
    e.sup_ratio = std::max(e.sup_ratio, sup);
    e.inf_ratio = std::min(e.inf_ratio, inf);
    e.sample_pairs += 50;
    s /= 10;
  }
  return e;
}

}  // namespace

TEST_CASE("classify on synthetic histories") {
  CHECK(classify(synthetic({{1.5, 1.0}, {1.6, 1.0}, {1.5, 1.05}})).cls == Verdict::Approx);
  CHECK(classify(synthetic({{0.9, 0.5}, {0.9, 0.2}, {0.9, 0.05}})).cls == Verdict::MuchLess);
  CHECK(classify(synthetic({{2, 1.1}, {10, 1.1}, {80, 1.1}})).cls == Verdict::MuchGreater);
  CHECK(classify(synthetic({{2, 0.5}, {10, 0.1}, {80, 0.01}})).cls == Verdict::Incomparable);
  CHECK(classify(synthetic({{1, 1}})).cls == Verdict::Undecided);
  CHECK_FALSE(classify(synthetic({{1, 1}})).confidence_note.empty());
}

TEST_CASE("divergence rule") {
  CHECK(diverging_sequence({1, 2, 4}));
  CHECK(diverging_sequence({1, 1.2, 1.5}));
  CHECK_FALSE(diverging_sequence({1, 1.05, 1.1}));
  CHECK_FALSE(diverging_sequence({1, 3, 2}));
  ClassifyThresholds strict;
  strict.step_factor = 2;
  CHECK_FALSE(diverging_sequence({1, 1.5, 2.25}, strict));
}

TEST_CASE("adding scales never flips much-less into much-greater") {
  std::vector<std::pair<double, double>> h{{0.9, 0.5}, {0.9, 0.2}, {0.9, 0.05}};
  for (int extra = 0; extra < 3; ++extra) {
    auto v = classify(synthetic(h)).cls;
    CHECK(v != Verdict::MuchGreater);
    h.push_back({0.9, h.back().second / 3});
  }
}

TEST_CASE("a metric against itself") {
  auto d = named("square");
  SamplerOptions o;
  o.pairs_per_scale = 50;
  o.scales = 3;
  auto scales = sample_pairs(d, o);
  MetricContext ctx;
  ctx.samples = 256;
  auto e = estimate_relation(d, MetricKind::JMin, MetricKind::JMin, scales, ctx);
  CHECK(e.sup_ratio == 1);
  CHECK(e.inf_ratio == 1);
  auto a = estimate_relation(d, MetricKind::Apollonian, MetricKind::Apollonian, scales, ctx);
  CHECK(a.sup_ratio == 1);
  CHECK(a.inf_ratio == 1);
}

TEST_CASE("disk: Apollonian against j") {
  auto d = named("disk");
  SamplerOptions o;
  o.scales = 4;
  auto scales = sample_pairs(d, o);
  for (auto& s : scales) CHECK(s.pairs.size() >= 50);
  MetricContext ctx;
  ctx.samples = 2048;
  auto e = estimate_relation(d, MetricKind::Apollonian, MetricKind::JMin, scales, ctx);
  CHECK(e.sup_ratio <= 2 + 1e-6);
  CHECK(e.inf_ratio >= 1 - 1e-3);
  CHECK(e.inf_ratio <= e.sup_ratio);
  CHECK(e.refinement_history.size() >= 3);
  CHECK(classify(e).cls == Verdict::Approx);
}

TEST_CASE("sampler is deterministic for a fixed seed") {
  auto d = named("lollipop");
  auto a = sample_pairs(d), b = sample_pairs(d);
  REQUIRE(a.size() == b.size());
  for (size_t s = 0; s < a.size(); ++s) {
    REQUIRE(a[s].pairs.size() == b[s].pairs.size());
    for (size_t i = 0; i < a[s].pairs.size(); ++i) {
      CHECK(a[s].pairs[i].first == b[s].pairs[i].first);
      CHECK(a[s].pairs[i].second == b[s].pairs[i].second);
    }
  }
  SamplerOptions other;
  other.seed = 7;
  auto c = sample_pairs(d, other);
  CHECK_FALSE(c[0].pairs[0].first == a[0].pairs[0].first);
}

TEST_CASE("strip: j against k along an R sweep") {
  auto d = named("strip");
  double prev = kInf;
  for (double R : {1.0, 3.0, 10.0}) {
    double j = j_distance(d, {R, 0}, {-R, 0}, JVariant::Min).value;
    double k = quasihyperbolic_distance(d, {R, 0}, {-R, 0}).metric.value;
    CHECK(k == doctest::Approx(2 * R).epsilon(1e-2));
    CHECK(j / k < prev);
    prev = j / k;
  }
}

TEST_CASE("quasi-isotropy") {
  auto disk = named("disk");
  auto q = quasi_isotropy_constant(disk, sample_points(disk, 20, 42), 32);
  CHECK(q.low == doctest::Approx(1).epsilon(1e-6));
  CHECK(q.high == doctest::Approx(2 * q.low));
  auto strip = named("strip");
  auto s = quasi_isotropy_constant(strip, {{0, 0}, {2, 0}, {-5, 0}}, 32);
  CHECK(s.low <= 2 + 1e-9);
  auto slit = named("slit_halfplane");
  double prev = 0;
  for (double t : {0.1, 0.01, 0.001}) {
    auto r = quasi_isotropy_constant(slit, {{0, 1 + t}}, 64);
    CHECK(r.low > prev);
    prev = r.low;
  }
  CHECK(prev > 10);
}

TEST_CASE("uniformity and John evidence") {
  auto disk = named("disk");
  std::vector<PointPair> pairs;
  for (auto& s : sample_pairs(disk, {10, 3, 42, 6}))
    for (auto& p : s.pairs) pairs.push_back(p);
  CHECK(uniformity_constant(disk, pairs).value <= 3);
  CHECK(john_constant(disk, pairs).value <= 2);

  auto strip = named("strip");
  std::vector<double> K;
  for (double R : {1.0, 3.0, 10.0}) K.push_back(uniformity_constant(strip, {{{R, 0.9}, {-R, 0.9}}}).value);
  CHECK(K[1] >= 2 * K[0] * 0.9);
  CHECK(K[2] >= 3 * K[1] * 0.9);
}

TEST_CASE("report and suite JSON round trip") {
  auto suite = default_suite("default");
  CHECK(suite.size() >= 5);
  auto j = suite_to_json(suite);
  CHECK(suite_to_json(suite_from_json(j)) == j);

  ScenarioReport r;
  ScenarioCheck c;
  c.scenario = "disk";
  c.relation = "alpha~j";
  c.expected = "APPROX";
  c.observed = "APPROX";
  c.pass = true;
  c.sup_ratio = 1.5;
  c.inf_ratio = 1.0;
  c.history = {{0.5, 1.5, 1.0, 50}};
  r.checks.push_back(c);
  r.errors.push_back("x: y");
  auto rj = report_to_json(r);
  CHECK(report_to_json(report_from_json(rj)) == rj);
  auto csv = report_to_csv(r);
  CHECK(csv.find("disk,alpha~j,APPROX,APPROX") != std::string::npos);
  CHECK(csv.find('\r') == std::string::npos);

  RelationEstimate e = synthetic({{2, 1}, {3, 0.5}});
  CHECK(estimate_to_json(estimate_from_json(estimate_to_json(e))) == estimate_to_json(e));
}

TEST_CASE("names round trip") {
  for (auto k : {MetricKind::Apollonian, MetricKind::JMin, MetricKind::JProduct, MetricKind::Quasihyperbolic,
                 MetricKind::ApollonianInner, MetricKind::Seittenranta, MetricKind::LambdaLength,
                 MetricKind::LambdaApollonian, MetricKind::JPrime})
    CHECK(metric_from_name(metric_name(k)) == k);
  for (auto v : {Verdict::Approx, Verdict::MuchLess, Verdict::MuchGreater, Verdict::Incomparable, Verdict::LessOnly,
                 Verdict::GreaterOnly, Verdict::Undecided})
    CHECK(verdict_from_name(verdict_name(v)) == v);
  CHECK_THROWS_AS(metric_from_name("euclid"), Error);
}
