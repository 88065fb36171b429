#include <algorithm>
#include <cmath>
#include <numbers>

#include "hypmetrica/errors.hpp"
#include "hypmetrica/univalent.hpp"

namespace hm {

namespace {

void need(bool ok, ErrorCode c, const std::string& msg) {
  if (!ok) throw Error(c, msg);
}

PowerSeries sized(int len) {
  PowerSeries r;
  r.a.assign(std::max(len, 1), cplx(0));
  return r;
}

PowerSeries finish(PowerSeries r) {
  r.normalized = r.a.size() >= 2 && r.a[0] == cplx(0) && r.a[1] == cplx(1);
  return r;
}

// min |g| on a few circles inside the disk of convergence
double min_modulus(const PowerSeries& g) {
  double m = std::abs(g.a[0]);
  for (double r : {0.25, 0.5, 0.75, 0.9}) {
    for (int k = 0; k < 64; ++k) {
      cplx z = std::polar(r, 2 * std::numbers::pi * k / 64);
      m = std::min(m, std::abs(evaluate(g, z)));
    }
  }
  return m;
}

PowerSeries apply_multiplier(const PowerSeries& f, const std::vector<double>& m) {
  PowerSeries r = f;
  for (size_t n = 1; n < r.a.size(); ++n) r.a[n] = r.a[n] * m[n];
  return finish(r);
}

}  // namespace

PowerSeries make_series(std::vector<cplx> a) {
  need(a.size() >= 2, ErrorCode::InvalidArgument, "series needs at least two coefficients");
  PowerSeries r;
  r.a = std::move(a);
  return finish(r);
}

PowerSeries identity_series(int N) {
  PowerSeries r = sized(N + 1);
  r.a[1] = 1;
  return finish(r);
}

PowerSeries koebe_series(int N) {
  PowerSeries r = sized(N + 1);
  for (int n = 1; n <= N; ++n) r.a[n] = double(n);
  return finish(r);
}

PowerSeries ell_series(int N) {
  PowerSeries r = sized(N + 1);
  for (int n = 1; n <= N; ++n) r.a[n] = 1.0;
  return finish(r);
}

PowerSeries g_beta_series(double beta, int N) {
  double p = 3 * beta - 2;
  PowerSeries d = sized(N);
  d.a[0] = 1;
  for (int k = 1; k < N; ++k) d.a[k] = d.a[k - 1] * ((k - 1 - p) / k);
  return integrate(d);
}

PowerSeries extremal_AB_series(double A, double B, int N) {
  PowerSeries d = sized(N);
  d.a[0] = 1;
  if (B == 0) {
    for (int k = 1; k < N; ++k) d.a[k] = d.a[k - 1] * (A / k);
  } else {
    double q = (A - B) / B;
    for (int k = 1; k < N; ++k) d.a[k] = d.a[k - 1] * ((q - k + 1) / k * B);
  }
  return integrate(d);
}

cplx evaluate(const PowerSeries& f, cplx z) {
  need(std::abs(z) < 1, ErrorCode::OutsideDisk, "evaluation point outside the unit disk");
  cplx s = 0;
  for (size_t i = f.a.size(); i-- > 0;) s = s * z + f.a[i];
  return s;
}

PowerSeries derivative(const PowerSeries& f, int k) {
  need(k >= 0, ErrorCode::InvalidArgument, "negative derivative order");
  PowerSeries r = f;
  for (int j = 0; j < k; ++j) {
    PowerSeries d = sized(std::max<int>(1, r.a.size() - 1));
    for (size_t n = 1; n < r.a.size(); ++n) d.a[n - 1] = r.a[n] * double(n);
    r = d;
  }
  return finish(r);
}

PowerSeries integrate(const PowerSeries& f) {
  PowerSeries r = sized(f.a.size() + 1);
  for (size_t n = 0; n < f.a.size(); ++n) r.a[n + 1] = f.a[n] / double(n + 1);
  return finish(r);
}

PowerSeries series_mul(const PowerSeries& f, const PowerSeries& g) {
  size_t L = std::min(f.a.size(), g.a.size());
  PowerSeries r = sized(L);
  for (size_t i = 0; i < L; ++i) {
    if (f.a[i] == cplx(0)) continue;
    for (size_t j = 0; i + j < L; ++j) r.a[i + j] += f.a[i] * g.a[j];
  }
  return finish(r);
}

PowerSeries series_div(const PowerSeries& f, const PowerSeries& g) {
  need(std::abs(g.a[0]) > 0, ErrorCode::InvalidArgument, "division by a series vanishing at 0");
  size_t L = std::min(f.a.size(), g.a.size());
  PowerSeries q = sized(L);
  for (size_t n = 0; n < L; ++n) {
    cplx s = f.a[n];
    for (size_t k = 1; k <= n; ++k) s -= g.a[k] * q.a[n - k];
    q.a[n] = s / g.a[0];
  }
  return finish(q);
}

PowerSeries series_log(const PowerSeries& f) {
  need(std::abs(f.a[0] - cplx(1)) < 1e-14, ErrorCode::InvalidArgument, "log needs constant term 1");
  size_t L = f.a.size();
  // n l_n = n f_n - sum_{k=1}^{n-1} k l_k f_{n-k}
  PowerSeries l = sized(L);
  for (size_t n = 1; n < L; ++n) {
    cplx s = double(n) * f.a[n];
    for (size_t k = 1; k < n; ++k) s -= double(k) * l.a[k] * f.a[n - k];
    l.a[n] = s / double(n);
  }
  return finish(l);
}

PowerSeries series_exp(const PowerSeries& h) {
  need(std::abs(h.a[0]) < 1e-14, ErrorCode::InvalidArgument, "exp needs constant term 0");
  size_t L = h.a.size();
  PowerSeries g = sized(L);
  g.a[0] = 1;
  for (size_t n = 1; n < L; ++n) {
    cplx s = 0;
    for (size_t k = 1; k <= n; ++k) s += double(k) * h.a[k] * g.a[n - k];
    g.a[n] = s / double(n);
  }
  return finish(g);
}

PowerSeries series_pow(const PowerSeries& f, double mu) {
  PowerSeries l = series_log(f);
  for (auto& c : l.a) c *= mu;
  return series_exp(l);
}

PowerSeries reciprocal_form(const PowerSeries& f, double mu) {
  need(f.normalized, ErrorCode::InvalidArgument, "reciprocal form needs a normalized series");
  PowerSeries q = sized(f.N());
  for (int k = 0; k < f.N(); ++k) q.a[k] = f.a[k + 1];
  double m = min_modulus(q);
  need(m >= 1e-9, ErrorCode::VanishingCore, "f(z)/z vanishes on the check grid (min " + std::to_string(m) + ")");
  return series_pow(q, -mu);
}

PowerSeries from_reciprocal_form(const PowerSeries& phi, double mu) {
  need(mu != 0, ErrorCode::InvalidArgument, "mu must be nonzero");
  double m = min_modulus(phi);
  need(m >= 1e-9, ErrorCode::VanishingCore, "reciprocal form vanishes on the check grid");
  PowerSeries q = series_pow(phi, -1 / mu);
  PowerSeries f = sized(q.a.size() + 1);
  for (size_t k = 0; k < q.a.size(); ++k) f.a[k + 1] = q.a[k];
  f.a[1] = 1;
  return finish(f);
}

PowerSeries hadamard(const PowerSeries& f, const PowerSeries& g) {
  size_t L = std::min(f.a.size(), g.a.size());
  PowerSeries r = sized(L);
  for (size_t n = 0; n < L; ++n) r.a[n] = f.a[n] * g.a[n];
  return finish(r);
}

PowerSeries hornich_plus(const PowerSeries& f, const PowerSeries& g) {
  return integrate(series_mul(derivative(f), derivative(g)));
}

PowerSeries hornich_scale(double alpha, const PowerSeries& f) {
  PowerSeries d = derivative(f);
  need(std::abs(d.a[0] - cplx(1)) < 1e-14, ErrorCode::InvalidArgument, "hornich scaling needs f'(0) = 1");
  need(min_modulus(d) >= 1e-9, ErrorCode::VanishingDerivative, "f' vanishes on the check grid");
  return integrate(series_pow(d, alpha));
}

PowerSeries rotate(const PowerSeries& f, cplx u) {
  PowerSeries r = f;
  cplx p = std::conj(u);
  for (size_t n = 0; n < r.a.size(); ++n) {
    r.a[n] *= p;
    p *= u;
  }
  return finish(r);
}

PowerSeries alexander(const PowerSeries& f) {
  need(f.normalized, ErrorCode::BadParameters, "transform needs a normalized series");
  std::vector<double> m(f.a.size(), 1.0);
  for (size_t n = 1; n < m.size(); ++n) m[n] = 1.0 / double(n);
  return apply_multiplier(f, m);
}

PowerSeries libera(const PowerSeries& f) { return bernardi(f, 1.0); }

PowerSeries bernardi(const PowerSeries& f, double gamma) {
  need(f.normalized, ErrorCode::BadParameters, "transform needs a normalized series");
  need(gamma > -1, ErrorCode::BadParameters, "bernardi needs gamma > -1");
  std::vector<double> m(f.a.size(), 1.0);
  for (size_t n = 1; n < m.size(); ++n) m[n] = (gamma + 1) / (double(n) + gamma);
  return apply_multiplier(f, m);
}

PowerSeries bbc_transform(const PowerSeries& f, double b, double c) {
  need(f.normalized, ErrorCode::BadParameters, "transform needs a normalized series");
  need(b > 0 && c > 0, ErrorCode::BadParameters, "B_{b,c} needs b, c > 0");
  std::vector<double> m(f.a.size(), 1.0);
  double diff = c - b, k = std::round(diff);
  if (b == c) return apply_multiplier(f, m);
  if (std::abs(diff - k) < 1e-15 && k >= 1 && k <= 64) {
    // (b)_{n-1}/(c)_{n-1} telescopes to prod_{j<k} (b+j)/(b+n-1+j)
    int kk = int(k);
    for (size_t n = 1; n < m.size(); ++n) {
      double v = 1;
      for (int j = 0; j < kk; ++j) v *= (b + j) / (b + double(n - 1) + j);
      m[n] = v;
    }
  } else {
    for (size_t n = 2; n < m.size(); ++n) m[n] = m[n - 1] * (b + double(n - 2)) / (c + double(n - 2));
  }
  return apply_multiplier(f, m);
}

PowerSeries pre_schwarzian(const PowerSeries& f) {
  PowerSeries d = derivative(f);
  need(std::abs(d.a[0]) > 0, ErrorCode::VanishingDerivative, "f'(0) = 0");
  return series_div(derivative(d), d);
}

nlohmann::json series_to_json(const PowerSeries& f) {
  nlohmann::json arr = nlohmann::json::array();
  for (auto c : f.a) arr.push_back({c.real(), c.imag()});
  return arr;
}

PowerSeries series_from_json(const nlohmann::json& j) {
  const nlohmann::json* arr = &j;
  if (j.is_object()) {
    need(j.contains("coefficients"), ErrorCode::InvalidArgument, "series object needs 'coefficients'");
    arr = &j.at("coefficients");
  }
  need(arr->is_array(), ErrorCode::InvalidArgument, "series must be an array of [re, im] pairs");
  std::vector<cplx> a;
  for (const auto& e : *arr) {
    if (e.is_number()) {
      a.emplace_back(e.get<double>(), 0.0);
    } else {
      need(e.is_array() && e.size() == 2, ErrorCode::InvalidArgument, "coefficient must be [re, im]");
      a.emplace_back(e[0].get<double>(), e[1].get<double>());
    }
  }
  return make_series(std::move(a));
}

}  // namespace hm
