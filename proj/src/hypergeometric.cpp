#include <cmath>
#include <limits>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/beta.hpp>

#include "hypmetrica/errors.hpp"
#include "hypmetrica/univalent.hpp"

namespace hm {

namespace {

bool nonpositive_integer(double v) { return v <= 0 && v == std::round(v); }

constexpr long kMaxTerms = 20'000'000;

cplx series(double a, double b, double c, cplx z) {
  if (nonpositive_integer(c)) throw Error(ErrorCode::PolyLikePole, "c is a nonpositive integer");
  bool terminating = nonpositive_integer(a) || nonpositive_integer(b);
  if (!terminating && std::abs(z) > 1 - 1e-9)
    throw Error(ErrorCode::NonConvergent, "2F1 series needs |z| <= 1 - 1e-9");
  cplx sum = 1, t = 1;
  double az = std::abs(z);
  double big = std::max({std::abs(a), std::abs(b), std::abs(c)});
  for (long n = 0; n < kMaxTerms; ++n) {
    t *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * z;
    sum += t;
    if (t == cplx(0)) return sum;
    if (n > big + 2) {
      // remaining ratios are below rho, geometric tail bound
      double rho = std::abs((a + n + 1) * (b + n + 1) / ((c + n + 1) * (n + 2.0))) * az;
      if (rho < 1 && std::abs(t) * rho / (1 - rho) <= 1e-16 * std::abs(sum)) return sum;
    }
  }
  throw Error(ErrorCode::NonConvergent, "2F1 series did not converge");
}

}  // namespace

double hypergeometric_series_real(double a, double b, double c, double x) { return series(a, b, c, x).real(); }

double hypergeometric_euler(double a, double b, double c, double x) {
  if (!(c > b && b > 0) || !(x >= 0 && x < 1))
    throw Error(ErrorCode::NonConvergent, "Euler integral needs c > b > 0 and 0 <= x < 1");
  boost::math::quadrature::tanh_sinh<double> ts(15);
  double om = 1 - x;
  // second argument is the signed distance to the nearer endpoint
  auto f = [&](double x0, double xc) {
    double t = xc < 0 ? -xc : x0, tc = xc > 0 ? xc : 1 - x0;
    if (t <= 0 || tc <= 0) return 0.0;
    double w = om + x * tc;  // 1 - x t
    return std::pow(t, b - 1) * std::pow(tc, c - b - 1) * std::pow(w, -a);
  };
  double err = 0;
  double I = ts.integrate(f, 0.0, 1.0, 1e-14, &err);
  return I / boost::math::beta(b, c - b);
}

cplx hypergeometric(double a, double b, double c, cplx z) {
  if (nonpositive_integer(c)) throw Error(ErrorCode::PolyLikePole, "c is a nonpositive integer");
  if (z == cplx(0)) return 1;
  if (nonpositive_integer(a) || nonpositive_integer(b)) return series(a, b, c, z);
  bool real_axis = z.imag() == 0 && z.real() >= 0.9 && z.real() < 1;
  if (real_axis) {
    double x = z.real();
    if (b == c) return std::pow(1 - x, -a);
    if (a == c) return std::pow(1 - x, -b);
    if (c > b && b > 0) return hypergeometric_euler(a, b, c, x);
    if (c > a && a > 0) return hypergeometric_euler(b, a, c, x);
  }
  return series(a, b, c, z);
}

cplx hypergeometric_derivative(double a, double b, double c, cplx z) {
  return a * b / c * hypergeometric(a + 1, b + 1, c + 1, z);
}

}  // namespace hm
