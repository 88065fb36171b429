#include <doctest.h>

#include <cmath>
#include <functional>
#include <random>

#include "hypmetrica/bounds.hpp"
#include "hypmetrica/errors.hpp"
#include "hypmetrica/geometry.hpp"
#include "hypmetrica/univalent.hpp"

using namespace hm;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("parabolic-starlike radius") {
  auto r = radius_sp(0.5, 0);
  CHECK(r.r0 > 0);
  CHECK(r.r0 < 1);
  CHECK(std::abs(r.residual) < 1e-10);
  CHECK(std::abs(radius_sp_equation(r.r0, 0.5, 0)) < 1e-10);
  CHECK(r.cross_check < 1e-11);
  CHECK(radius_sp_equation(r.lo, 0.5, 0) * radius_sp_equation(r.hi, 0.5, 0) <= 0);
  // both quadratures agree away from the root too
  for (double x : {0.1, 0.5, 0.9})
    CHECK(std::abs(radius_sp_integral(x, 0.5, 0) - radius_sp_integral(x, 0.5, 1)) < 1e-11);

  double prev = -kInf;
  for (int i = 1; i < 50; ++i) {
    double e = radius_sp_equation(0.02 * i, 0.5, 0);
    CHECK(e > prev);
    prev = e;
  }
  CHECK(radius_sp(0.5, 0.999).r0 < radius_sp(0.5, 0.5).r0);
  CHECK(code_of([] { radius_sp(1.0, 0); }) == ErrorCode::BadParameters);
}

TEST_CASE("radius through the second coefficient") {
  double prev = 1;
  for (double fpp : {0.0, 1.0, 2.0}) {
    auto r = radius_sp_second_coeff(0, fpp);
    CHECK(r.r0 > 0);
    CHECK(r.r0 < prev);
    prev = r.r0;
    CHECK(std::abs(r.residual) < 1e-10);
    CHECK(std::abs(radius_sp_second_coeff_equation(r.r0, 0, fpp, false)) < 1e-10);
  }
  CHECK(code_of([] { radius_sp_second_coeff(0, 5); }) == ErrorCode::BadParameters);
}

TEST_CASE("radius for U(lambda, 1 - alpha)") {
  CHECK(std::abs(radius_u(0, 1) - 1 / std::sqrt(2.0)) < 1e-12);
  CHECK(std::abs(radius_u_residual(0, 1, radius_u(0, 1))) < 1e-10);
  CHECK(std::abs(radius_u(0.5, 1) - radius_u_particular(0.5)) < 1e-12);
  CHECK(std::abs(radius_u_particular(0.5) - 1 / std::sqrt(3.0)) < 1e-15);
  CHECK(radius_u(0, 1e-10) < 2e-5);
  CHECK(radius_u(0.5, 1e-10) < 1e-9);
  for (double a : {0.0, 0.3, 0.7})
    for (double l : {0.1, 0.5, 1.0, 3.0}) {
      double r = radius_u(a, l);
      CHECK(r > 0);
      CHECK(r < 1);
      CHECK(std::abs(radius_u_residual(a, l, r)) < 1e-10 * std::max(1.0, l));
    }
}

TEST_CASE("L(beta, b, c)") {
  CHECK(std::abs(bound_L_beta(1, 1, 2).value - (4 - 2 * std::sqrt(3.0))) < 1e-8);
  CHECK(std::abs(bound_L_beta(1, 2, 3).value - (3 - std::sqrt(5.0))) < 1e-8);
  for (double b : {0.5, 1.0, 2.0, 3.0})
    for (double c : {1.0, 2.0, 3.5, 6.0}) {
      if (!((1 <= b && b <= c) || (b <= 1 && 1 <= c))) continue;
      auto r = bound_L_beta(1, b, c);
      CHECK(std::abs(r.value - L_one_closed(b, c)) < 1e-6);
      double x0 = (c - std::sqrt(c * c - b * b)) / b;
      if (x0 < 1 - 1e-3) CHECK(std::abs(r.extremizer - x0) < 1e-5);
      CHECK(r.value <= 2 * b / c + 1e-9);
    }
  for (double beta : {0.7, 0.8, 0.9})
    for (auto [b, c] : {std::pair{1.0, 2.0}, {2.0, 3.0}, {0.5, 1.5}}) {
      auto r = bound_L_beta(beta, b, c);
      CHECK(r.value <= 2 * (3 * beta - 2) * b / c + 1e-9);
      CHECK(r.value >= (b / c) * (3 * beta - 2) * L_beta_kernel(beta, b, c, r.extremizer) - 1e-12);
      CHECK(r.method == BoundMethod::GridGolden);
    }
  CHECK(code_of([] { bound_L_beta(0.5, 1, 2); }) == ErrorCode::ConstraintViolation);
}

TEST_CASE("Bernardi bound") {
  CHECK(std::abs(bound_bernardi_F(0) - (4 - 2 * std::sqrt(3.0))) < 1e-12);
  CHECK(std::abs(bound_bernardi_F(1) - (3 - std::sqrt(5.0))) < 1e-12);
  CHECK(std::abs(bound_bernardi_F(3) - 1) < 1e-12);
  for (double g : {-0.5, 0.0, 0.5, 1.0, 3.0, 10.0})
    CHECK(std::abs(bound_bernardi_F(g) - bound_L_beta(1, g + 1, g + 2).value) < 1e-9);
}

TEST_CASE("sharpness witness for L") {
  for (double beta : {0.8, 0.9, 1.0}) {
    double direct = norm(alexander_g_beta_function(beta)).value;
    CHECK(std::abs(direct - bound_L_beta(beta, 1, 2).value) < 1e-4);
  }
}

TEST_CASE("N(A, B)") {
  CHECK(std::abs(bound_NAB(1, -1) - 4) < 1e-12);
  CHECK(bound_NAB(0.4, 0) == 0.4);
  CHECK(std::abs(bound_NAB(0.4, 1e-7) - 0.4) < 1e-6);
  CHECK(std::abs(bound_NAB(0.4, -1e-7) - 0.4) < 1e-6);
  CHECK(std::abs(bound_NAB(0.4, 1e-12) - 0.4) < 1e-11);
  for (double a : {0.0, 0.25, 0.5, 0.9}) CHECK(std::abs(bound_NAB(1 - 2 * a, -1) - 4 * (1 - a)) < 1e-12);
}

TEST_CASE("M and D") {
  CHECK(std::abs(bound_DABgamma(1, -1, 0).value - 2) < 1e-6);
  CHECK(std::abs(bound_MABbc(1, -1, 1, 1).value - bound_NAB(1, -1)) < 1e-6);

  // direct norm of the Libera image of z/(1-z)
  double direct = norm(libera(ell_series(256))).value;
  CHECK(std::abs(bound_DABgamma(1, -1, 1).value - direct) < 1e-3);

  for (auto [A, B] : {std::pair{1.0, -1.0}, {0.5, -0.5}, {0.3, -0.8}})
    for (auto [b, c] : {std::pair{1.0, 2.0}, {2.0, 3.0}, {1.0, 1.0}}) {
      auto r = bound_MABbc(A, B, b, c);
      CHECK(r.value >= 0);
      CHECK(r.value <= (b / c) * (1 + std::abs(B)) * (A - B) + 1e-9);
      CHECK(r.value >= (b / c) * (A - B) * MAB_kernel(A, B, b, c, r.extremizer) - 1e-12);
    }

  auto notes = bound_DABgamma(1, -1, 1).notes;
  CHECK_FALSE(notes.empty());
  CHECK(code_of([] { bound_DABgamma(1, -1, 1, true); }) == ErrorCode::ConstraintViolation);
  CHECK(code_of([] { bound_MABbc(1, 0, 1, 2); }) == ErrorCode::ConstraintViolation);
  CHECK(code_of([] { bound_MABbc(0.5, 0.7, 1, 2); }) == ErrorCode::ConstraintViolation);
}

TEST_CASE("strongly starlike bound") {
  auto s = bound_strongly_starlike(0.5, 0);
  CHECK(s.k > 1);
  CHECK(std::abs(s.h_at_k) < 1e-10);
  // independent evaluation of the defining equation
  double k = s.k;
  CHECK(std::abs(0.5 * std::pow(k, 2.5) + 1.5 * std::sqrt(k) - k * k - 1) < 1e-9);
  CHECK(s.L > 2 * 0.5 * (1 - 0));
  for (int i = 1; i <= 2000; ++i) {
    double x = 1 + (10 * s.k - 1) * i / 2000.0;
    CHECK(strongly_starlike_g(0.5, 0, x) <= s.L + 1e-12);
  }
  double prev = 0;
  for (double a : {0.9, 0.99, 0.999}) {
    auto t = bound_strongly_starlike(a, 0);
    CHECK(t.total <= 6 + 1e-9);
    CHECK(t.total > prev);
    prev = t.total;
  }
  CHECK(prev > 5.9);
  for (double b : {0.2, 0.6}) {
    auto t = bound_strongly_starlike(0.4, b);
    CHECK(t.L > 2 * 0.4 * (1 - b));
  }
}

TEST_CASE("orders of starlikeness") {
  CHECK(std::abs(delta_gamma(1) + 0.25) < 1e-10);
  CHECK(std::abs(delta_bernardi(-1, 1) + 0.25) < 1e-10);
  CHECK(std::abs(delta_orders(0, 1, 0) - 0.5) < 1e-12);
  CHECK(std::abs(6 - 4 * delta_gamma(1) - 7) < 1e-9);
  for (double g : {0.0, 0.3, 1.0, 2.0}) CHECK(std::abs(delta_bernardi(-g, g) - delta_gamma(g)) < 1e-10);
  CHECK(code_of([] { delta_orders(-0.5, 1, 0); }) == ErrorCode::ConstraintViolation);
}

TEST_CASE("lambda constants") {
  CHECK(std::abs(lambda_delta(0, 0) - std::sqrt(2.0) / 2) < 1e-15);
  CHECK(std::abs(lambda_star(0.5) - 1 / std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(lambda_star(1e-12) - 1) < 1e-9);
  for (double a : {0.0, 0.3, 0.8, 0.99}) {
    double d0 = (1 + a) / (3 + a);
    CHECK(std::abs(lambda_delta(d0 * (1 - 1e-13), a) - lambda_delta(d0, a)) < 1e-9);
  }
  CHECK(std::abs(lambda_star_gamma(1, 0) - std::sqrt(2.0)) < 1e-12);
  double lr = lambda_R_gamma(1, 0);
  CHECK(lr > 0);
  CHECK(lr <= 1);
}

TEST_CASE("Bernoulli inequalities") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> X(0, 50), C(0, 5);
  for (int i = 0; i < 10000; ++i) {
    double x = X(rng), c = C(rng);
    double lhs = std::log1p(c * x), rhs = c * std::log1p(x);
    if (c >= 1) CHECK(lhs <= rhs * (1 + 1e-14) + 1e-15);
    else CHECK(lhs >= rhs * (1 - 1e-14) - 1e-15);
  }
}

TEST_CASE("ranges of outputs") {
  for (double mu : {0.2, 0.5, 0.8})
    for (double a : {-1.0, 0.0, 0.5}) {
      double r = radius_sp(mu, a).r0;
      CHECK(r > 0);
      CHECK(r < 1);
    }
  for (double v : {bound_L_beta(0.9, 1, 2).value, bound_bernardi_F(0.2), bound_NAB(1, -1), bound_DABgamma(0.5, -0.5, 1).value,
                   bound_strongly_starlike(0.5, 0.3).total}) {
    CHECK(v >= 0);
    CHECK(v <= 6);
  }
}

TEST_CASE("bound JSON") {
  auto j = bound_to_json(bound_DABgamma(1, -1, 1));
  CHECK(j["method"] == "GRID_GOLDEN");
  CHECK(j["notes"].is_array());
  auto r = radius_to_json(radius_sp(0.5, 0));
  CHECK(r["r0"].get<double>() > 0);
}
