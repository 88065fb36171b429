#include <doctest.h>

#include <random>

#include "hypmetrica/errors.hpp"
#include "hypmetrica/geometry.hpp"
#include "hypmetrica/univalent.hpp"

using namespace hm;

namespace {

PowerSeries random_small(std::uint64_t seed, int N, double scale = 0.3) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> U(-1, 1);
  std::vector<cplx> a(N + 1, 0.0);
  a[1] = 1;
  for (int n = 2; n <= N; ++n) a[n] = cplx(U(rng), U(rng)) * scale / double(n * n);
  return make_series(a);
}

double max_coeff_diff(const PowerSeries& f, const PowerSeries& g, int upto) {
  double d = 0;
  for (int n = 0; n <= upto; ++n) d = std::max(d, std::abs(f[n] - g[n]));
  return d;
}

}  // namespace

TEST_CASE("evaluation and derivatives") {
  CHECK(std::abs(evaluate(koebe_series(200), 0.5) - cplx(2)) < 1e-10);
  cplx z(0.3, -0.4);
  CHECK(std::abs(evaluate(identity_series(), z) - z) < 1e-15);
  auto d = derivative(identity_series(8));
  CHECK(d[0] == cplx(1));
  for (int n = 1; n <= d.N(); ++n) CHECK(d[n] == cplx(0));
  CHECK_THROWS_AS(evaluate(koebe_series(8), cplx(1, 0)), Error);
  auto k2 = derivative(koebe_series(16), 2);
  CHECK(k2[0] == cplx(4));  // 2 * a_2
  CHECK(identity_series().normalized);
  CHECK(koebe_series().normalized);
}

TEST_CASE("reciprocal form") {
  auto b = reciprocal_form(koebe_series(64), 1);
  CHECK(std::abs(b[1] - cplx(-2)) < 1e-12);
  CHECK(std::abs(b[2] - cplx(1)) < 1e-12);
  for (int n = 3; n <= b.N(); ++n) CHECK(std::abs(b[n]) < 1e-12);

  auto one = reciprocal_form(identity_series(32), 0.7);
  CHECK(one[0] == cplx(1));
  for (int n = 1; n <= one.N(); ++n) CHECK(std::abs(one[n]) < 1e-15);

  auto e = reciprocal_form(ell_series(64), 2);
  CHECK(std::abs(e[1] - cplx(-2)) < 1e-12);
  CHECK(std::abs(e[2] - cplx(1)) < 1e-12);
  CHECK(std::abs(e[3]) < 1e-12);

  CHECK_THROWS_AS(reciprocal_form(make_series({0, 1, 2}), 1), Error);
}

TEST_CASE("reciprocal form round trip") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto f = random_small(seed, 64);
    for (double mu : {0.3, 1.0, 2.5}) {
      auto back = from_reciprocal_form(reciprocal_form(f, mu), mu);
      CHECK(max_coeff_diff(back, f, 32) < 1e-9);
    }
  }
}

TEST_CASE("reciprocal identity residual") {
  CHECK(reciprocal_identity_residual(identity_series(128), 1) < 1e-14);
  CHECK(reciprocal_identity_residual(koebe_series(128), 1, 0.5) < 1e-10);
  CHECK(reciprocal_identity_residual(ell_series(128), 2, 0.5) < 1e-10);
  CHECK(reciprocal_identity_residual(random_small(3, 128), 0.5) < 1e-8);
}

TEST_CASE("series algebra") {
  auto f = random_small(5, 40);
  auto g = random_small(6, 40);
  std::vector<cplx> lin(41, 0.0);
  lin[0] = 1;
  lin[1] = 0.5;
  auto q = series_div(series_mul(f, make_series(lin)), make_series(lin));
  CHECK(max_coeff_diff(q, f, 40) < 1e-13);
  auto one_plus = make_series({1, 0.2, -0.1, 0.05});
  auto el = series_exp(series_log(one_plus));
  CHECK(max_coeff_diff(el, one_plus, 3) < 1e-14);
  auto sq = series_pow(one_plus, 0.5);
  CHECK(max_coeff_diff(series_mul(sq, sq), one_plus, 20) < 1e-13);

  auto h = hadamard(koebe_series(20), koebe_series(20));
  for (int n = 1; n <= 20; ++n) CHECK(h[n] == cplx(n * n));
  CHECK(max_coeff_diff(hornich_plus(identity_series(40), g), g, 40) < 1e-15);

  auto hs = hornich_scale(2, ell_series(30));
  for (int n = 1; n <= 30; ++n) CHECK(std::abs(hs[n] - cplx((n + 2) * (n + 1) / 2.0 / 3.0)) < 1e-9 * n * n);
  CHECK_THROWS_AS(hornich_scale(2, make_series({0, 1, 1})), Error);
}

TEST_CASE("hypergeometric function") {
  CHECK(hypergeometric(1.3, 0.7, 2.2, 0) == cplx(1));
  CHECK(std::abs(hypergeometric(1, 1, 2, 0.5) - cplx(2 * std::log(2.0))) < 1e-14);
  CHECK(std::abs(hypergeometric(1, 4, 3, 0.5) - cplx(8.0 / 3)) < 1e-14);
  CHECK_THROWS_AS(hypergeometric(1, 1, -2, 0.3), Error);
  CHECK(std::abs(hypergeometric(-2, 1, 1, 0.5) - cplx(0.25)) < 1e-15);  // (1 - x)^2

  // the two routes agree near the switchover
  for (auto [a, b, c] : {std::tuple{1.0, 1.0, 2.0}, {3.0, 3.0, 4.0}, {0.4, 1.5, 2.7}, {2.0, 0.5, 3.0}})
    for (double x : {0.85, 0.9, 0.95})
      CHECK(std::abs(hypergeometric_series_real(a, b, c, x) - hypergeometric_euler(a, b, c, x)) <
            1e-10 * std::abs(hypergeometric_series_real(a, b, c, x)));
  // closed form near 1
  CHECK(hypergeometric(1, 1, 2, 0.999).real() == doctest::Approx(-std::log(0.001) / 0.999).epsilon(1e-12));
}

TEST_CASE("hypergeometric derivative against central differences") {
  const double h = 1e-5;
  for (auto [a, b, c] : {std::tuple{1.0, 1.0, 2.0}, {1.0, 2.0, 3.0}, {0.5, 1.5, 2.5}, {3.0, 3.0, 4.0}, {-0.3, 2.0, 1.7}}) {
    for (int i = 0; i <= 16; ++i) {
      double x = 0.8 * i / 16;
      double fd = (hypergeometric(a, b, c, x + h).real() - hypergeometric(a, b, c, x - h).real()) / (2 * h);
      double d = hypergeometric_derivative(a, b, c, x).real();
      CHECK(std::abs(fd - d) <= 1e-6 * std::max(1.0, std::abs(d)));
    }
  }
}

TEST_CASE("transforms") {
  auto a = alexander(koebe_series(50));
  for (int n = 1; n <= 50; ++n) CHECK(std::abs(a[n] - cplx(1)) < 1e-15);
  auto bz = bernardi(identity_series(10), 2.5);
  CHECK(bz[1] == cplx(1));
  for (int n = 2; n <= 10; ++n) CHECK(bz[n] == cplx(0));

  for (auto f : {koebe_series(50), random_small(9, 50), g_beta_series(0.85, 50)}) {
    auto b0 = bernardi(f, 0), al = alexander(f);
    auto b1 = bernardi(f, 1), li = libera(f);
    for (int n = 0; n <= 50; ++n) {
      CHECK(b0[n] == al[n]);
      CHECK(b1[n] == li[n]);
    }
    for (double g : {0.0, 1.0, 2.5}) {
      auto bb = bbc_transform(f, g + 1, g + 2), be = bernardi(f, g);
      for (int n = 0; n <= 50; ++n) CHECK(bb[n] == be[n]);
    }
  }
  // identity operator when b = c
  auto f = random_small(11, 30);
  CHECK(max_coeff_diff(bbc_transform(f, 2.2, 2.2), f, 30) == 0);
  CHECK_THROWS_AS(bernardi(f, -1.5), Error);
  CHECK_THROWS_AS(bbc_transform(f, -1, 2), Error);
}

TEST_CASE("Alexander transform keeps the coefficient screens") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> U(0, 1);
  for (int trial = 0; trial < 200; ++trial) {
    int N = 12;
    std::vector<cplx> a(N + 1, 0.0);
    a[1] = 1;
    double budget = 1, used = 0;
    for (int n = 2; n <= N; ++n) {
      double w = U(rng) * (budget - used) * 0.5;
      used += w;
      a[n] = std::polar(w / n, 2 * kPi * U(rng));
    }
    // starlike screen sum n|a_n| <= 1 on the tail
    double s = 0;
    for (int n = 2; n <= N; ++n) s += n * std::abs(a[n]);
    REQUIRE(s <= 1);
    auto g = alexander(make_series(a));
    double c = 0;
    for (int n = 2; n <= N; ++n) c += double(n) * n * std::abs(g[n]);
    CHECK(c <= 1 + 1e-12);
  }
}

TEST_CASE("pre-Schwarzian norm") {
  CHECK(norm(koebe_function()).value == doctest::Approx(6).epsilon(1e-4 / 6));
  CHECK(norm(koebe_function()).value <= 6 + 1e-12);
  CHECK(norm(identity_series(16)).value == 0);
  CHECK(norm(g_beta_function(0.9)).value == doctest::Approx(1.4).epsilon(1e-3 / 1.4));
  CHECK(norm(ell_function()).value == doctest::Approx(4).epsilon(1e-6));

  auto T = pre_schwarzian(koebe_series(64));
  cplx z(0.2, 0.1);
  cplx exact = 1.0 / (1.0 + z) + 3.0 / (1.0 - z);
  CHECK(std::abs(evaluate(T, z) - exact) < 1e-12);
}

TEST_CASE("norm is rotation invariant") {
  auto f = g_beta_series(0.8, 256);
  double base = norm(f).value;
  for (double t : {0.3, 1.7, 4.0}) {
    auto r = rotate(f, std::polar(1.0, t));
    CHECK(norm(r).value == doctest::Approx(base).epsilon(1e-6));
  }
  auto k = koebe_series(12);
  auto kr = rotate(k, cplx(0, 1));
  CHECK(kr[1] == cplx(1));
}

TEST_CASE("parabolic-starlike coefficient tests") {
  auto zero = make_series({1, 0, 0});
  CHECK(sp_necessary(zero, 1, 0).slack == doctest::Approx(-1));
  CHECK(sp_necessary(zero, 1, 0).satisfied);
  auto third = make_series({1, 1.0 / 3});
  CHECK(sp_necessary(third, 1, 0).slack == doctest::Approx(1.0 / 3 - 1));
  CHECK_FALSE(sp_necessary(make_series({1, 2}), 1, 0).satisfied);
  CHECK_THROWS_AS(sp_necessary(make_series({1, -0.1}), 1, 0), Error);

  CHECK(sp_sufficient(zero, 1, 0).satisfied);
  CHECK(sp_sufficient(make_series({1, 0.25}), 1, 0).slack == doctest::Approx(-0.25));
  CHECK(sp_sufficient(make_series({1, 0.25}), 1, 0).satisfied);

  auto edge = sp_single_term(2, 1.0 / 3, 0);
  CHECK(std::abs(edge.slack) <= 1e-12);
  CHECK(edge.satisfied);
  auto edge2 = sp_single_term(3, 0.5 / 4.5, 0.5);
  CHECK(std::abs(edge2.slack) <= 1e-12);
  CHECK_FALSE(sp_single_term(2, 0.34, 0).satisfied);
}

TEST_CASE("U-class and starlike screens") {
  auto zero = make_series({1, 0, 0});
  CHECK(u_membership(zero, 1, 1).satisfied);
  CHECK(u_exact_nonneg(zero, 1).satisfied);
  CHECK(starlike_order_screen(zero, 1, 0).satisfied);
  CHECK(p2lambda_screen(zero, 1).satisfied);

  // z/(1+z^2): (z/f) = 1 + z^2
  auto b = make_series({1, 0, 1});
  auto u = u_membership(b, 1, 1);
  CHECK(std::abs(u.slack) <= 1e-12);
  CHECK(u.satisfied);
  CHECK(lambda_star_of(0) == doctest::Approx(std::sqrt(2.0) / 2));
  CHECK_THROWS_AS(u_exact_nonneg(make_series({1, 0, -1}), 1), Error);
}

TEST_CASE("area coefficient check") {
  auto b = reciprocal_form(koebe_series(64), 1);
  auto r = area_coefficient_check(b, 1);
  CHECK(std::abs(r.slack) <= 1e-12);
  CHECK(r.satisfied);
  CHECK(area_coefficient_check(make_series({1, 0}), 1).slack == doctest::Approx(-1));
  CHECK_FALSE(area_coefficient_check(make_series({1, 0, 2}), 1).satisfied);
}

TEST_CASE("tail estimates") {
  auto poly = area_coefficient_check(make_series({1, 0.1, 0.2}), 1);
  CHECK(poly.tail_bounded);
  CHECK(poly.tail_bound == 0);
  std::vector<cplx> geo(65, 0.0);
  geo[0] = 1;
  for (int n = 1; n <= 64; ++n) geo[n] = std::pow(0.5, n);
  auto g = sp_sufficient(make_series(geo), 1, 0);
  CHECK(g.tail_bounded);
  CHECK(g.tail_bound > 0);
  CHECK(g.tail_bound < 1e-15);
}

TEST_CASE("starlikeness of z F(1,b;c;z)") {
  for (auto [b, c] : {std::pair{1.0, 2.0}, {2.0, 3.0}, {1.0, 3.0}}) {
    double worst = kInf;
    for (int i = 1; i <= 40; ++i)
      for (int k = 0; k < 64; ++k) {
        cplx z = std::polar(0.99 * i / 40, 2 * kPi * k / 64);
        cplx h = z * hypergeometric(1, b, c, z);
        cplx dh = hypergeometric(1, b, c, z) + z * hypergeometric_derivative(1, b, c, z);
        worst = std::min(worst, (z * dh / h).real());
      }
    CHECK(worst > -1e-9);
  }
}

TEST_CASE("subordination evidence") {
  auto id = [](cplx z) { return z; };
  CHECK(subordination_range_check(id, id, true).pass);
  CHECK(subordination_range_check([](cplx z) { return z / 2.0; }, id, true).pass);
  CHECK_FALSE(subordination_range_check([](cplx z) { return 2.0 * z; }, id, true).pass);
  CHECK_THROWS_AS(subordination_range_check(id, id, false), Error);

  double p = 3 * 0.85 - 2;
  auto gp = [p](cplx z) { return std::pow(1.0 - z, p); };
  auto fp = [gp](cplx z) { return gp(z * z); };
  CHECK(subordination_range_check(fp, gp, true).pass);
}

TEST_CASE("series JSON") {
  auto f = random_small(21, 16);
  auto back = series_from_json(series_to_json(f));
  CHECK(max_coeff_diff(back, f, 16) == 0);
  auto g = series_from_json(nlohmann::json::parse("[0, 1, 0.5]"));
  CHECK(g[2] == cplx(0.5));
  CHECK(g.normalized);
  CHECK_THROWS(series_from_json(nlohmann::json::parse("\"x\"")));
}

TEST_CASE("named functions") {
  CHECK(named_function("g_beta(0.9)").name.find("g_beta") != std::string::npos);
  CHECK_THROWS_AS(named_function("nope"), Error);
  auto ab = extremal_AB_series(1, -1, 20);  // z/(1-z)
  auto k = ell_series(20);
  CHECK(max_coeff_diff(ab, k, 20) < 1e-12);
}
