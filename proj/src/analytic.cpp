#include <cmath>
#include <memory>
#include <numbers>
#include <regex>

#include "hypmetrica/errors.hpp"
#include "hypmetrica/numeric.hpp"
#include "hypmetrica/parallel.hpp"
#include "hypmetrica/univalent.hpp"

namespace hm {

namespace {

constexpr double kEdge = 1 - 1e-10;

void check_beta(double beta) {
  if (!(beta > 2.0 / 3 && beta <= 1)) throw Error(ErrorCode::BadParameters, "g_beta needs 2/3 < beta <= 1");
}

void check_AB(double A, double B) {
  if (!(B >= -1 && B < A && A <= 1)) throw Error(ErrorCode::BadParameters, "need -1 <= B < A <= 1");
}

std::vector<double> parse_args(const std::string& s) {
  std::vector<double> v;
  std::regex num(R"([-+]?(\d+\.?\d*|\.\d+)([eE][-+]?\d+)?)");
  for (auto it = std::sregex_iterator(s.begin(), s.end(), num); it != std::sregex_iterator(); ++it)
    v.push_back(std::stod(it->str()));
  return v;
}

}  // namespace

AnalyticFunction from_series(const PowerSeries& f) {
  auto T = std::make_shared<PowerSeries>(pre_schwarzian(f));
  auto F = std::make_shared<PowerSeries>(f);
  auto D = std::make_shared<PowerSeries>(derivative(f));
  AnalyticFunction a;
  a.name = "series";
  a.T = [T](cplx z) { return evaluate(*T, z); };
  a.value = [F](cplx z) { return evaluate(*F, z); };
  a.deriv = [D](cplx z) { return evaluate(*D, z); };
  // truncation tail r^N stays below 1e-12
  a.r_max = std::pow(10.0, -12.0 / std::max(1, f.N()));
  return a;
}

AnalyticFunction koebe_function() {
  AnalyticFunction a;
  a.name = "koebe";
  a.T = [](cplx z) { return 1.0 / (1.0 + z) + 3.0 / (1.0 - z); };
  a.value = [](cplx z) { return z / ((1.0 - z) * (1.0 - z)); };
  a.deriv = [](cplx z) { return (1.0 + z) / std::pow(1.0 - z, 3); };
  a.r_max = kEdge;
  return a;
}

AnalyticFunction ell_function() {
  AnalyticFunction a;
  a.name = "ell";
  a.T = [](cplx z) { return 2.0 / (1.0 - z); };
  a.value = [](cplx z) { return z / (1.0 - z); };
  a.deriv = [](cplx z) { return 1.0 / ((1.0 - z) * (1.0 - z)); };
  a.r_max = kEdge;
  return a;
}

AnalyticFunction g_beta_function(double beta) {
  check_beta(beta);
  double p = 3 * beta - 2;
  AnalyticFunction a;
  a.name = "g_beta(" + std::to_string(beta) + ")";
  a.T = [p](cplx z) { return -p / (1.0 - z); };
  a.deriv = [p](cplx z) { return std::pow(1.0 - z, p); };
  a.value = [p](cplx z) { return (1.0 - std::pow(1.0 - z, p + 1)) / (p + 1); };
  a.r_max = kEdge;
  return a;
}

AnalyticFunction extremal_AB_function(double A, double B) {
  check_AB(A, B);
  AnalyticFunction a;
  a.name = "extremal_AB(" + std::to_string(A) + "," + std::to_string(B) + ")";
  if (B == 0) {
    a.T = [A](cplx) { return cplx(A); };
    a.deriv = [A](cplx z) { return std::exp(A * z); };
    a.value = [A](cplx z) { return std::abs(z) < 1e-8 ? z + A * z * z / 2.0 : (std::exp(A * z) - 1.0) / A; };
  } else {
    double q = (A - B) / B;
    a.T = [A, B](cplx z) { return (A - B) / (1.0 + B * z); };
    a.deriv = [B, q](cplx z) { return std::pow(1.0 + B * z, q); };
    auto S = std::make_shared<PowerSeries>(extremal_AB_series(A, B, 512));
    a.value = [S, B, q](cplx z) {
      if (std::abs(z) < 0.9) return evaluate(*S, z);
      if (std::abs(q + 1) < 1e-14) return std::log(1.0 + B * z) / B;
      return (std::pow(1.0 + B * z, q + 1) - 1.0) / (B * (q + 1));
    };
  }
  a.r_max = kEdge;
  return a;
}

AnalyticFunction alexander_g_beta_function(double beta) {
  check_beta(beta);
  double s = 3 * beta - 1;
  auto S = std::make_shared<PowerSeries>(pre_schwarzian(alexander(g_beta_series(beta, 256))));
  AnalyticFunction a;
  a.name = "alexander_g_beta(" + std::to_string(beta) + ")";
  // h' = g/z, T_h = g'/g - 1/z; near 0 the series avoids the cancellation
  a.T = [S, s](cplx z) {
    if (std::abs(z) < 0.5) return evaluate(*S, z);
    cplx w = std::pow(1.0 - z, s - 1);
    cplx g = (1.0 - w * (1.0 - z)) / s;
    return w / g - 1.0 / z;
  };
  a.deriv = [s](cplx z) {
    if (std::abs(z) < 1e-8) return cplx(1) - (s - 1) * z / 2.0;
    return (1.0 - std::pow(1.0 - z, s)) / (s * z);
  };
  a.r_max = kEdge;
  return a;
}

AnalyticFunction named_function(const std::string& spec) {
  auto args = parse_args(spec);
  auto starts = [&](const char* p) { return spec.rfind(p, 0) == 0; };
  if (spec == "koebe") return koebe_function();
  if (spec == "ell") return ell_function();
  if (starts("alexander_g_beta") && args.size() == 1) return alexander_g_beta_function(args[0]);
  if (starts("g_beta") && args.size() == 1) return g_beta_function(args[0]);
  if (starts("extremal_AB") && args.size() == 2) return extremal_AB_function(args[0], args[1]);
  throw Error(ErrorCode::InvalidArgument, "unknown function family: " + spec);
}

NormResult norm(const AnalyticFunction& f, const DiskSampler& s) {
  if (s.rays < 4 || s.radial_grid < 8) throw Error(ErrorCode::InvalidArgument, "sampler too coarse");
  const double rmax = f.r_max;
  auto profile = [&](double th, double r) { return (1 - r) * (1 + r) * std::abs(f.T(std::polar(r, th))); };
  auto radial = [&](double th, int grid) {
    return grid_golden_max([&](double r) { return profile(th, r); }, 0.0, rmax, grid, s.refine_iters);
  };
  std::vector<std::pair<double, double>> best(s.rays);
  parallel_for(s.rays, [&](size_t k) { best[k] = radial(2 * std::numbers::pi * k / s.rays, s.radial_grid); });
  size_t kb = 0;
  for (size_t k = 1; k < best.size(); ++k)
    if (best[k].second > best[kb].second) kb = k;
  double th0 = 2 * std::numbers::pi * kb / s.rays, dth = 2 * std::numbers::pi / s.rays;
  double coarse = best[kb].second;

  // angular pass around the best ray
  auto ang = golden_max([&](double th) { return radial(th, s.radial_grid / 4).second; }, th0 - dth, th0 + dth, 60);
  NormResult res;
  if (ang.second > coarse) {
    auto r = radial(ang.first, s.radial_grid);
    res.value = std::max(ang.second, r.second);
    res.argmax = std::polar(r.first, ang.first);
  } else {
    res.value = coarse;
    res.argmax = std::polar(best[kb].first, th0);
  }
  res.error_estimate = std::abs(res.value - coarse);
  return res;
}

NormResult norm(const PowerSeries& f, const DiskSampler& s) { return norm(from_series(f), s); }

}  // namespace hm
