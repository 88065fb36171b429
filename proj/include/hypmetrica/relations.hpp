#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hypmetrica/metrics.hpp"

namespace hm {

enum class MetricKind {
  Apollonian,
  JMin,
  JProduct,
  Quasihyperbolic,
  ApollonianInner,
  Seittenranta,
  LambdaLength,
  LambdaApollonian,
  JPrime,
};

const char* metric_name(MetricKind k);
MetricKind metric_from_name(const std::string& s);

struct MetricContext {
  int samples = 2048;
  GridOptions grid;
};

double evaluate_metric(const Domain& d, MetricKind k, Point x, Point y, const MetricContext& ctx = {});

using PointPair = std::pair<Point, Point>;

struct PairScale {
  double scale = 0;
  std::vector<PointPair> pairs;
};

struct SamplerOptions {
  int pairs_per_scale = 50;
  int scales = 4;
  std::uint64_t seed = 42;
  double window = 6;  // clip for unbounded domains
};

// far, near and boundary-hugging pairs; separations from diam/2 down to 1e-3 diam
std::vector<PairScale> sample_pairs(const Domain& d, const SamplerOptions& o = {});
std::vector<Point> sample_points(const Domain& d, int n, std::uint64_t seed, double window = 6);

struct ScaleRatios {
  double scale = 0;
  double sup_ratio = 0, inf_ratio = 0;
  int pairs = 0;
};

struct RelationEstimate {
  double sup_ratio = 0, inf_ratio = kInf;
  PointPair argmax_pair, argmin_pair;
  int sample_pairs = 0;
  std::vector<ScaleRatios> refinement_history;
};

RelationEstimate estimate_relation(const Domain& d, MetricKind a, MetricKind b, const std::vector<PairScale>& scales,
                                   const MetricContext& ctx = {});

// same, from precomputed values; values[s][i] belongs to scales[s].pairs[i]
RelationEstimate relation_from_values(const std::vector<PairScale>& scales, const std::vector<std::vector<double>>& va,
                                      const std::vector<std::vector<double>>& vb);

enum class Verdict { Approx, MuchLess, MuchGreater, Incomparable, LessOnly, GreaterOnly, Undecided };
const char* verdict_name(Verdict v);
Verdict verdict_from_name(const std::string& s);

struct RelationVerdict {
  Verdict cls = Verdict::Undecided;
  std::string confidence_note;
};

struct ClassifyThresholds {
  double C = 20;
  double step_factor = 1.1;   // per-scale change counted as a trend
  double total_factor = 1.5;  // overall change needed for divergence
};

RelationVerdict classify(const RelationEstimate& e, const ClassifyThresholds& t = {});

// true when v grows at every step by step_factor and overall by total_factor
bool diverging_sequence(const std::vector<double>& v, const ClassifyThresholds& t = {});

struct QuasiIsotropy {
  double low = 1, high = 2;
  Point worst_point;
  std::vector<double> ratios;  // per point, max/min directed density
};

QuasiIsotropy quasi_isotropy_constant(const Domain& d, const std::vector<Point>& points, int directions = 32);

struct PathRatios {
  double cigar = 0;   // length / |x-y|
  double carrot = 0;  // max of min(l(x,z), l(z,y)) / delta(z)
};
PathRatios path_ratios(const Domain& d, const std::vector<Point>& path);

struct PathConstant {
  double value = 0;
  PointPair worst_pair;
  std::vector<double> per_pair;
};

// candidate paths are quasihyperbolic geodesics
PathConstant uniformity_constant(const Domain& d, const std::vector<PointPair>& pairs, const GridOptions& g = {});
PathConstant john_constant(const Domain& d, const std::vector<PointPair>& pairs, const GridOptions& g = {});

struct GrowthEvidence {
  std::vector<double> parameters;
  std::vector<double> values;
  double max_value = 0;
  bool diverging = false;
  bool bounded = false;  // not diverging and max_value <= limit
  double limit = 0;
};

struct GeometricConstants {
  QuasiIsotropy qi;
  GrowthEvidence uniformity_K, john_b, comparison_c;
};

// ---------------------------------------------------------------- scenarios

struct ScenarioExpectation {
  std::string id;  // witness family key, normally the domain name
  DomainSpec domain;
  std::string expected_row;  // "1".."12", "noncomparable" or a named property
  std::vector<double> parameters;
};

struct ScenarioCheck {
  std::string scenario;
  std::string relation;  // "alpha~j" style, or the property name
  std::string expected;
  std::string observed;
  bool pass = false;
  double sup_ratio = 0, inf_ratio = 0;
  std::vector<ScaleRatios> history;
  std::string note;
};

struct ScenarioReport {
  std::vector<ScenarioCheck> checks;
  std::vector<std::string> errors;  // scenario-level failures
  bool all_pass = true;
};

struct ScenarioOptions {
  MetricContext ctx;
  ClassifyThresholds thresholds;
  int background_pairs = 8;
  std::uint64_t seed = 42;
};

std::vector<ScenarioExpectation> default_suite(const std::string& which = "default");
ScenarioReport run_scenarios(const std::vector<ScenarioExpectation>& suite, const ScenarioOptions& o = {});

std::vector<ScenarioExpectation> suite_from_json(const nlohmann::json& j);
nlohmann::json suite_to_json(const std::vector<ScenarioExpectation>& s);
nlohmann::json report_to_json(const ScenarioReport& r);
ScenarioReport report_from_json(const nlohmann::json& j);
std::string report_to_csv(const ScenarioReport& r);

nlohmann::json estimate_to_json(const RelationEstimate& e);
RelationEstimate estimate_from_json(const nlohmann::json& j);

}  // namespace hm
