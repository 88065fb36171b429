#include <cmath>
#include <numbers>

#include "hypmetrica/errors.hpp"
#include "hypmetrica/univalent.hpp"

namespace hm {

namespace {

constexpr double kSlackTol = 1e-12;

// sum_{n>=from} w(n) * h(b_n) with a geometric tail estimate
template <class W, class H>
MembershipReport weighted_sum(const PowerSeries& b, int from, W&& w, H&& h, double rhs, const char* id) {
  MembershipReport r;
  r.condition_id = id;
  double s = 0;
  int last = 0;
  for (int n = from; n < static_cast<int>(b.a.size()); ++n) {
    s += w(n) * h(b.a[n]);
    if (b.a[n] != cplx(0)) last = n;
  }
  int N = b.N();
  if (last < N - 8 || N < 8) {
    r.tail_bounded = true;  // polynomial, nothing omitted
  } else {
    double rho = 0;
    for (int n = N - 8; n < N; ++n) {
      double d = h(b.a[n]);
      rho = std::max(rho, d > 0 ? h(b.a[n + 1]) / d : 1.0);
    }
    if (rho < 1) {
      r.tail_bounded = true;
      double t = h(b.a[N]);
      for (int k = 1; k <= 4000 && t > 0; ++k) {
        t *= rho;
        r.tail_bound += std::abs(w(N + k)) * t;
      }
    }
  }
  r.slack = s - rhs;
  r.satisfied = r.slack <= kSlackTol;
  return r;
}

double mod(cplx c) { return std::abs(c); }
double mod2(cplx c) { return std::norm(c); }

void require_nonneg(const PowerSeries& b) {
  for (size_t n = 1; n < b.a.size(); ++n)
    if (b.a[n].real() < 0 || std::abs(b.a[n].imag()) > 1e-14)
      throw Error(ErrorCode::NegativeCoefficient, "coefficient b_" + std::to_string(n) + " is not a nonnegative real");
}

double re(cplx c) { return c.real(); }

}  // namespace

MembershipReport sp_necessary(const PowerSeries& b, double mu, double alpha) {
  if (!(mu > 0)) throw Error(ErrorCode::BadParameters, "mu must be positive");
  require_nonneg(b);
  double m = mu * (1 - alpha);
  return weighted_sum(b, 1, [&](int n) { return 2.0 * n - m; }, re, m, "sp_necessary");
}

MembershipReport sp_sufficient(const PowerSeries& b, double mu, double alpha) {
  if (!(mu > 0)) throw Error(ErrorCode::BadParameters, "mu must be positive");
  double m = mu * (1 - alpha);
  return weighted_sum(b, 1, [&](int n) { return 2.0 * n + m; }, mod, m, "sp_sufficient");
}

MembershipReport sp_single_term(int n, cplx an, double alpha) {
  if (n < 2) throw Error(ErrorCode::BadParameters, "single-term test needs n >= 2");
  MembershipReport r;
  r.condition_id = "sp_single_term";
  r.slack = (2.0 * n - 1 - alpha) * std::abs(an) - (1 - alpha);
  r.satisfied = r.slack <= kSlackTol;
  r.tail_bounded = true;
  return r;
}

MembershipReport u_membership(const PowerSeries& b, double lambda, double mu) {
  if (!(lambda >= 0 && mu > 0)) throw Error(ErrorCode::BadParameters, "need lambda >= 0, mu > 0");
  return weighted_sum(b, 1, [&](int n) { return n - mu; }, mod, lambda * mu, "u_membership");
}

MembershipReport u_exact_nonneg(const PowerSeries& b, double mu) {
  if (!(mu > 0 && mu <= 1)) throw Error(ErrorCode::BadParameters, "need 0 < mu <= 1");
  require_nonneg(b);
  return weighted_sum(b, 1, [&](int n) { return n - mu; }, re, mu, "u_exact_nonneg");
}

MembershipReport starlike_order_screen(const PowerSeries& b, double mu, double alpha) {
  if (!(mu > 0)) throw Error(ErrorCode::BadParameters, "mu must be positive");
  require_nonneg(b);
  double m = mu * (1 - alpha);
  return weighted_sum(b, 1, [&](int n) { return n - m; }, re, m, "starlike_order_screen");
}

MembershipReport p2lambda_screen(const PowerSeries& b, double lambda) {
  return weighted_sum(b, 2, [](int n) { return double(n) * (n - 1); }, mod, 2 * lambda, "p2lambda_screen");
}

MembershipReport area_coefficient_check(const PowerSeries& b, double mu) {
  if (!(mu > 0)) throw Error(ErrorCode::BadParameters, "mu must be positive");
  return weighted_sum(b, 1, [&](int n) { return n - mu; }, mod2, mu, "area_coefficient_check");
}

double lambda_star_of(cplx b1) {
  double a = std::abs(b1);
  if (a > std::sqrt(2.0)) throw Error(ErrorCode::BadParameters, "|b1| exceeds sqrt(2)");
  return (std::sqrt(2 - a * a) - a) / 2;
}

double reciprocal_identity_residual(const PowerSeries& f, double mu, double radius, int grid) {
  if (!(radius > 0 && radius < 1)) throw Error(ErrorCode::InvalidArgument, "radius must lie in (0,1)");
  PowerSeries phi = reciprocal_form(f, mu);
  PowerSeries dphi = derivative(phi);
  PowerSeries df = derivative(f);
  double worst = 0;
  for (int i = 1; i <= grid; ++i) {
    double r = radius * i / grid;
    for (int k = 0; k < 4 * grid; ++k) {
      cplx z = std::polar(r, 2 * std::numbers::pi * k / (4 * grid));
      cplx p = evaluate(phi, z);
      cplx lhs = z * evaluate(dphi, z);
      cplx rhs = mu * (p - p * (z / evaluate(f, z)) * evaluate(df, z));
      worst = std::max(worst, std::abs(lhs - rhs));
    }
  }
  return worst;
}

namespace {

bool inside_polygon(const std::vector<cplx>& P, cplx q) {
  bool in = false;
  for (size_t i = 0, j = P.size() - 1; i < P.size(); j = i++) {
    double yi = P[i].imag(), yj = P[j].imag();
    if ((yi > q.imag()) != (yj > q.imag())) {
      double x = P[j].real() + (q.imag() - yj) / (yi - yj) * (P[i].real() - P[j].real());
      if (q.real() < x) in = !in;
    }
  }
  return in;
}

}  // namespace

SubordinationEvidence subordination_range_check(const std::function<cplx(cplx)>& phi,
                                                const std::function<cplx(cplx)>& psi, bool psi_univalent,
                                                int samples) {
  if (!psi_univalent) throw Error(ErrorCode::NotAttestedUnivalent, "psi carries no univalence attestation");
  if (samples < 16) throw Error(ErrorCode::InvalidArgument, "need at least 16 samples");
  SubordinationEvidence e;
  e.origin_gap = std::abs(phi(0.0) - psi(0.0));
  std::vector<cplx> hull(samples);
  for (int k = 0; k < samples; ++k) hull[k] = psi(std::polar(0.999, 2 * std::numbers::pi * k / samples));
  for (double r : {0.5, 0.9, 0.99}) {
    for (int k = 0; k < samples; ++k) {
      ++e.tested;
      if (!inside_polygon(hull, phi(std::polar(r, 2 * std::numbers::pi * (k + 0.5) / samples)))) ++e.outside;
    }
  }
  e.pass = e.origin_gap <= 1e-9 && e.outside == 0;
  return e;
}

nlohmann::json membership_to_json(const MembershipReport& r) {
  return {{"condition_id", r.condition_id},
          {"satisfied", r.satisfied},
          {"slack", r.slack},
          {"tail_bound", r.tail_bound},
          {"tail_bounded", r.tail_bounded}};
}

}  // namespace hm
