#include <cmath>
#include <cstdint>
#include <numbers>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/tools/roots.hpp>

#include "hypmetrica/bounds.hpp"
#include "hypmetrica/errors.hpp"
#include "hypmetrica/numeric.hpp"
#include "hypmetrica/univalent.hpp"

namespace hm {

namespace {

void need(bool ok, ErrorCode c, const std::string& msg) {
  if (!ok) throw Error(c, msg);
}

struct Root {
  double x, lo, hi;
  int iters;
};

// f(lo) and f(hi) must differ in sign
template <class F>
Root bisect(F&& f, double lo, double hi) {
  std::uintmax_t it = 200;
  auto stop = [](double a, double b) { return b - a <= 4 * std::numeric_limits<double>::epsilon() * std::abs(b); };
  auto br = boost::math::tools::bisect(f, lo, hi, stop, it);
  double x = 0.5 * (br.first + br.second);
  return {x, br.first, br.second, static_cast<int>(it)};
}

double real_F(double a, double b, double c, double x) {
  try {
    return hypergeometric(a, b, c, x).real();
  } catch (const Error& e) {
    throw Error(ErrorCode::HypergeometricFailure, std::string("2F1 failed: ") + e.what());
  }
}

// first sign change of f on a uniform grid over (a, b]
template <class F>
std::pair<double, double> first_crossing(F&& f, double a, double b, int n) {
  double prev = a, fp = f(a);
  for (int i = 1; i <= n; ++i) {
    double x = a + (b - a) * i / n;
    double fx = f(x);
    if ((fp < 0) != (fx < 0)) return {prev, x};
    prev = x;
    fp = fx;
  }
  throw Error(ErrorCode::NoRoot, "no sign change: f(" + std::to_string(a) + ")=" + std::to_string(f(a)) + ", f(" +
                                     std::to_string(b) + ")=" + std::to_string(fp));
}

constexpr double kRadiusTop = 1 - 1e-12;

}  // namespace

const char* method_name(BoundMethod m) {
  switch (m) {
    case BoundMethod::ClosedForm: return "CLOSED_FORM";
    case BoundMethod::GridGolden: return "GRID_GOLDEN";
    case BoundMethod::Bisection: return "BISECTION";
  }
  return "?";
}

// ------------------------------------------------------------------ radii

double radius_sp_integral(double r, double mu, int scheme) {
  need(mu > 0 && mu < 1, ErrorCode::BadParameters, "need 0 < mu < 1");
  need(r >= 0 && r < 1, ErrorCode::BadParameters, "need 0 <= r < 1");
  double r2 = r * r, p = 1 / (1 - mu);
  if (scheme == 0) return adaptive_simpson([&](double t) { return 1 / (1 - r2 * std::pow(t, p)); }, 0.0, 1.0, 1e-15);
  // dt = (1-mu) u^(-mu) du: endpoint singularity at u = 0
  boost::math::quadrature::tanh_sinh<double> ts;
  double I = ts.integrate([&](double u) { return u <= 0 ? 0.0 : std::pow(u, -mu) / (1 - r2 * u); }, 0.0, 1.0, 1e-15);
  return (1 - mu) * I;
}

double radius_sp_equation(double r, double mu, double alpha, int scheme) {
  double r2 = r * r, om = 1 - r2;
  double a = 4 * r2 * (1 + mu * (2 - alpha) * om) / (om * om);
  double b = r2 * mu * mu * (3 - alpha) * (3 - alpha) / (1 - mu) * radius_sp_integral(r, mu, scheme);
  return a + b - mu * (1 - alpha) * (1 - alpha);
}

RadiusResult radius_sp(double mu, double alpha) {
  need(mu > 0 && mu < 1, ErrorCode::BadParameters, "need 0 < mu < 1");
  need(alpha >= -1 && alpha < 1, ErrorCode::BadParameters, "need -1 <= alpha < 1");
  auto E = [&](double r) { return radius_sp_equation(r, mu, alpha, 0); };
  double top = 0.5;
  while (E(top) <= 0 && top < 1 - 1e-6) top = 1 - (1 - top) / 4;
  need(E(top) > 0, ErrorCode::NoRoot,
       "equation stays negative: E(0)=" + std::to_string(E(0)) + ", E(" + std::to_string(top) + ")=" + std::to_string(E(top)));
  auto R = bisect(E, 0.0, top);
  RadiusResult res;
  res.r0 = R.x;
  res.lo = R.lo;
  res.hi = R.hi;
  res.iterations = R.iters;
  res.residual = std::abs(E(R.x));
  res.cross_check = std::abs(radius_sp_integral(R.x, mu, 0) - radius_sp_integral(R.x, mu, 1));
  return res;
}

double radius_sp_second_coeff_equation(double r, double alpha, double fpp0, bool use_log1p) {
  double r2 = r * r, om = 1 - r2;
  double lg = use_log1p ? std::log1p(-r2) : std::log(om);
  double lhs = 4 * r2 * r2 * (1 + (3 - alpha) * om) / (om * om) - (3 - alpha) * (3 - alpha) * r2 * lg;
  double t = 1 - alpha - (3 - alpha) * (r / 2) * fpp0;
  return lhs - t * t;
}

RadiusResult radius_sp_second_coeff(double alpha, double fpp0) {
  need(fpp0 >= 0 && fpp0 <= 4, ErrorCode::BadParameters, "need 0 <= |f''(0)| <= 4");
  need(alpha >= -1 && alpha < 1, ErrorCode::BadParameters, "need -1 <= alpha < 1");
  auto E = [&](double r) { return radius_sp_second_coeff_equation(r, alpha, fpp0); };
  auto br = first_crossing(E, 0.0, kRadiusTop, 4096);
  auto R = bisect(E, br.first, br.second);
  RadiusResult res;
  res.r0 = R.x;
  res.lo = R.lo;
  res.hi = R.hi;
  res.iterations = R.iters;
  res.residual = std::abs(E(R.x));
  res.cross_check = std::abs(E(R.x) - radius_sp_second_coeff_equation(R.x, alpha, fpp0, false));
  return res;
}

double radius_u(double alpha, double lambda) {
  need(alpha >= 0 && alpha < 1, ErrorCode::BadParameters, "need 0 <= alpha < 1");
  need(lambda > 0, ErrorCode::BadParameters, "need lambda > 0");
  double oa = 1 - alpha, l2 = lambda * lambda;
  double s = alpha + 2 * l2 * oa;
  double den = std::sqrt(std::sqrt(s * s + 4 * l2 * oa * oa * (1 - l2)) + s);
  return lambda * std::sqrt(2 * oa) / den;
}

double radius_u_particular(double alpha) {
  need(alpha >= 0 && alpha < 1, ErrorCode::BadParameters, "need 0 <= alpha < 1");
  return std::sqrt((1 - alpha) / (2 - alpha));
}

double radius_u_residual(double alpha, double lambda, double r) {
  return r / (1 - r * r) * std::sqrt(alpha + (1 - alpha) * r * r) - lambda * std::sqrt(1 - alpha);
}

// ------------------------------------------------------------------ norm bounds

double L_beta_kernel(double beta, double b, double c, double x) {
  return (1 - x * x) * real_F(3 - 3 * beta, b + 1, c + 1, x) / real_F(2 - 3 * beta, b, c, x);
}

BoundResult bound_L_beta(double beta, double b, double c) {
  need(beta > 2.0 / 3 && beta <= 1, ErrorCode::ConstraintViolation, "need 2/3 < beta <= 1");
  need((1 <= b && b <= c) || (0 < b && b <= 1 && 1 <= c), ErrorCode::ConstraintViolation,
       "need 1 <= b <= c or 0 < b <= 1 <= c");
  auto m = grid_golden_max([&](double x) { return L_beta_kernel(beta, b, c, x); }, 0.0, 1 - 1e-6, 1024, 200);
  return {b / c * (3 * beta - 2) * m.second, m.first, BoundMethod::GridGolden, {}};
}

double L_one_closed(double b, double c) { return 2 * (c - std::sqrt(c * c - b * b)) / b; }

double bound_bernardi_F(double gamma) {
  need(gamma > -1, ErrorCode::BadParameters, "need gamma > -1");
  return 2 * (gamma + 2 - std::sqrt(3 + 2 * gamma)) / (gamma + 1);
}

double bound_NAB(double A, double B) {
  need(B >= -1 && B < A && A <= 1, ErrorCode::BadParameters, "need -1 <= B < A <= 1");
  if (B == 0) return A;
  return 2 * (A - B) / (1 + std::sqrt(1 - B * B));
}

std::vector<std::string> mabbc_violations(double A, double B, double b, double c) {
  std::vector<std::string> v;
  if (!(B >= -1 && B < A && A <= std::min(1.0, B + 1))) v.push_back("-1 <= B < A <= min(1, B+1)");
  if (B == 0) {
    v.push_back("B != 0");
  } else if (!(-2 <= -A / B && -A / B <= c - 1)) {
    v.push_back("-2 <= -A/B <= c-1");
  }
  if (!((1 <= b && b <= c) || (0 < b && b <= 1 && 1 <= c))) v.push_back("1 <= b <= c or 0 < b <= 1 <= c");
  return v;
}

double MAB_kernel(double A, double B, double b, double c, double x) {
  double q = A / B, y = std::abs(B) * x;
  return (1 - x * x) * real_F(2 - q, b + 1, c + 1, y) / real_F(1 - q, b, c, y);
}

BoundResult bound_MABbc(double A, double B, double b, double c, bool strict) {
  auto v = mabbc_violations(A, B, b, c);
  bool defined = B != 0 && B >= -1 && B < A && A <= 1 && b > 0 && c > 0;
  if (!v.empty() && (strict || !defined)) {
    std::string msg = "constraint violated:";
    for (auto& s : v) msg += " [" + s + "]";
    throw Error(ErrorCode::ConstraintViolation, msg);
  }
  auto m = grid_golden_max([&](double x) { return MAB_kernel(A, B, b, c, x); }, 0.0, 1 - 1e-12, 1024, 200);
  return {b / c * (A - B) * m.second, m.first, BoundMethod::GridGolden, v};
}

BoundResult bound_DABgamma(double A, double B, double gamma, bool strict) {
  if (!(gamma > -1)) throw Error(ErrorCode::ConstraintViolation, "need gamma > -1");
  return bound_MABbc(A, B, gamma + 1, gamma + 2, strict);
}

double strongly_starlike_h(double alpha, double beta, double x) {
  double a = alpha, b = beta;
  double xa = std::pow(x, a);
  return (1 - a) * xa * x * x + b * (3 * a - 2) * xa * x + ((1 - 2 * b) * (1 + a) + 2 * b * b * (1 - a)) * xa -
         a * b * (1 - 2 * b) * xa / x - x * x + 2 * b * x - ((1 - b) * (1 - b) + b * b);
}

double strongly_starlike_g(double alpha, double beta, double x) {
  return 4 * (1 - beta) * (x - beta) * (std::pow(x, alpha) - 1) / ((x - 1) * (x + 1 - 2 * beta));
}

StronglyStarlikeBound bound_strongly_starlike(double alpha, double beta) {
  need(alpha > 0 && alpha < 1, ErrorCode::BadParameters, "need 0 < alpha < 1");
  need(beta >= 0 && beta < 1, ErrorCode::BadParameters, "need 0 <= beta < 1");
  auto h = [&](double x) { return strongly_starlike_h(alpha, beta, x); };
  // h vanishes to second order at x = 1; step away until the sign is clear of rounding
  double lo = 1 + 1e-9;
  while (h(lo) > -1e-13 && lo < 2) lo = 1 + 10 * (lo - 1);
  double hi = 10;
  int grow = 0;
  while (h(hi) <= 0 && grow++ < 60) hi *= 2;
  if (!(h(lo) < 0 && h(hi) > 0))
    throw Error(ErrorCode::NoRoot, "h(" + std::to_string(lo) + ")=" + std::to_string(h(lo)) + ", h(" +
                                       std::to_string(hi) + ")=" + std::to_string(h(hi)));
  auto R = bisect(h, lo, hi);
  StronglyStarlikeBound s;
  s.k = R.x;
  s.h_at_k = h(R.x);
  s.L = strongly_starlike_g(alpha, beta, R.x);
  s.total = s.L + 2 * alpha;
  s.lo = lo;
  s.hi = hi;
  return s;
}

// ------------------------------------------------------------------ orders and lambdas

double delta_orders(double alpha, double beta, double gamma) {
  need(beta > 0 && beta + gamma > 0, ErrorCode::ConstraintViolation, "need beta > 0, beta + gamma > 0");
  double lo = std::max({0.0, -gamma / beta, (beta - gamma - 1) / (2 * beta)});
  need(alpha >= lo && alpha < 1, ErrorCode::ConstraintViolation,
       "need " + std::to_string(lo) + " <= alpha < 1");
  return ((beta + gamma) / real_F(1, 2 * beta * (1 - alpha), beta + gamma + 1, 0.5) - gamma) / beta;
}

double delta_bernardi(double alpha, double gamma) {
  need(gamma > -1, ErrorCode::ConstraintViolation, "need gamma > -1");
  need(alpha >= std::min(0.0, -gamma) && alpha < 1, ErrorCode::ConstraintViolation, "need -gamma <= alpha < 1");
  return (gamma + 1) / real_F(1, 2 * (1 - alpha), gamma + 2, 0.5) - gamma;
}

double delta_gamma(double gamma) {
  need(gamma > -1, ErrorCode::ConstraintViolation, "need gamma > -1");
  return -gamma + std::exp(std::lgamma(1.5 + gamma) - std::lgamma(1 + gamma)) / std::sqrt(std::numbers::pi);
}

double lambda_delta(double delta, double a) {
  need(a >= 0 && a <= 1, ErrorCode::ConstraintViolation, "need 0 <= a <= 1");
  need(delta >= 0 && delta < 1 / (1 + a), ErrorCode::ConstraintViolation, "need 0 <= delta < 1/(1+a)");
  if (delta < (1 + a) / (3 + a)) {
    double t = 1 - 2 * delta;
    return (std::sqrt(t * (2 - a * a - 2 * delta)) - a * t) / (2 * (1 - delta));
  }
  return (1 - delta * (1 + a)) / (1 + delta);
}

double lambda_star(double mu) {
  need(mu > -1 && mu <= 1, ErrorCode::ConstraintViolation, "need -1 < mu <= 1");
  return (1 - mu) / std::sqrt((1 - mu) * (1 - mu) + mu * mu);
}

double lambda_star_gamma(double gamma, double fpp0) {
  need(gamma >= 0 && gamma <= 1, ErrorCode::ConstraintViolation, "need 0 <= gamma <= 1");
  double c = std::cos(std::numbers::pi * gamma / 4), s = std::sin(std::numbers::pi * gamma / 4);
  need(fpp0 >= 0 && fpp0 * fpp0 <= 16 * c * c, ErrorCode::ConstraintViolation, "|f''(0)| too large");
  return (-fpp0 * c + s * std::sqrt(16 * c * c - fpp0 * fpp0)) / (2 * c);
}

double lambda_R_gamma(double gamma, double fpp0) {
  need(gamma >= 0 && gamma <= 1, ErrorCode::ConstraintViolation, "need 0 <= gamma <= 1");
  need(fpp0 >= 0 && fpp0 < 2, ErrorCode::ConstraintViolation, "need 0 <= |f''(0)| < 2");
  double s = std::sin(std::numbers::pi * gamma / 2), c = std::cos(std::numbers::pi * gamma / 2);
  auto phi = [&](double l) {
    double u = fpp0 + l;
    return s * std::sqrt(4 - l * l) - u * std::sqrt(std::max(0.0, 4 - u * u)) - l * c;
  };
  double top = std::min(1.0, 2 - fpp0);
  need(phi(0) >= 0, ErrorCode::NoRoot, "inequality fails already at lambda = 0");
  if (phi(top) >= 0) return top;
  auto br = first_crossing(phi, 0.0, top, 2048);
  return bisect(phi, br.first, br.second).x;
}

nlohmann::json radius_to_json(const RadiusResult& r) {
  return {{"r0", r.r0},
          {"residual", r.residual},
          {"bracket", {r.lo, r.hi}},
          {"iterations", r.iterations},
          {"cross_check", r.cross_check}};
}

nlohmann::json bound_to_json(const BoundResult& b) {
  return {{"value", b.value}, {"extremizer", b.extremizer}, {"method", method_name(b.method)}, {"notes", b.notes}};
}

}  // namespace hm
