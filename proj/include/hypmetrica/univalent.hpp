#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace hm {

using cplx = std::complex<double>;

// a[0..N]; normalized means a0 = 0, a1 = 1
struct PowerSeries {
  std::vector<cplx> a;
  bool normalized = false;

  int N() const { return static_cast<int>(a.size()) - 1; }
  cplx operator[](size_t i) const { return i < a.size() ? a[i] : cplx(0); }
};

constexpr int kDefaultTruncation = 256;

PowerSeries make_series(std::vector<cplx> a);
PowerSeries identity_series(int N = kDefaultTruncation);
PowerSeries koebe_series(int N = kDefaultTruncation);  // z/(1-z)^2
PowerSeries ell_series(int N = kDefaultTruncation);    // z/(1-z)
// primitive with g(0)=0, g' = (1-z)^(3b-2)
PowerSeries g_beta_series(double beta, int N = kDefaultTruncation);
// primitive with f' = (1+Bz)^((A-B)/B), or exp(Az) when B = 0
PowerSeries extremal_AB_series(double A, double B, int N = kDefaultTruncation);

cplx evaluate(const PowerSeries& f, cplx z);
PowerSeries derivative(const PowerSeries& f, int k = 1);
PowerSeries integrate(const PowerSeries& f);  // zero constant term

// truncated algebra, result length = min length
PowerSeries series_mul(const PowerSeries& f, const PowerSeries& g);
PowerSeries series_div(const PowerSeries& f, const PowerSeries& g);  // g0 != 0
PowerSeries series_log(const PowerSeries& f);                        // f0 = 1
PowerSeries series_exp(const PowerSeries& f);                        // f0 = 0
PowerSeries series_pow(const PowerSeries& f, double mu);             // f0 = 1, principal branch

// coefficients of (z/f)^mu, b0 = 1; length N
PowerSeries reciprocal_form(const PowerSeries& f, double mu);
// inverse: f = z * phi^(-1/mu)
PowerSeries from_reciprocal_form(const PowerSeries& phi, double mu);

PowerSeries hadamard(const PowerSeries& f, const PowerSeries& g);
PowerSeries hornich_plus(const PowerSeries& f, const PowerSeries& g);
PowerSeries hornich_scale(double alpha, const PowerSeries& f);
// f(z) -> conj(u) f(u z), |u| = 1
PowerSeries rotate(const PowerSeries& f, cplx u);

// Gauss 2F1
cplx hypergeometric(double a, double b, double c, cplx z);
cplx hypergeometric_derivative(double a, double b, double c, cplx z);
double hypergeometric_series_real(double a, double b, double c, double x);
double hypergeometric_euler(double a, double b, double c, double x);  // needs c > b > 0, 0 <= x < 1

PowerSeries alexander(const PowerSeries& f);
PowerSeries libera(const PowerSeries& f);
PowerSeries bernardi(const PowerSeries& f, double gamma);
PowerSeries bbc_transform(const PowerSeries& f, double b, double c);

PowerSeries pre_schwarzian(const PowerSeries& f);  // f''/f'

// holomorphic function known through its pre-Schwarzian; value/derivative optional
struct AnalyticFunction {
  std::string name;
  std::function<cplx(cplx)> T;
  std::function<cplx(cplx)> value;
  std::function<cplx(cplx)> deriv;
  double r_max = 1 - 1e-10;
};

AnalyticFunction from_series(const PowerSeries& f);
AnalyticFunction koebe_function();
AnalyticFunction ell_function();
AnalyticFunction g_beta_function(double beta);
AnalyticFunction extremal_AB_function(double A, double B);
// B_{1,2} image of g_beta: derivative g(z)/z
AnalyticFunction alexander_g_beta_function(double beta);
AnalyticFunction named_function(const std::string& spec);  // "koebe", "g_beta(0.9)", ...

struct DiskSampler {
  int rays = 64;
  int radial_grid = 512;
  int refine_iters = 80;
};

struct NormResult {
  double value = 0;
  double error_estimate = 0;
  cplx argmax;
};

NormResult norm(const AnalyticFunction& f, const DiskSampler& s = {});
NormResult norm(const PowerSeries& f, const DiskSampler& s = {});

// ---------------------------------------------------------------- membership

struct MembershipReport {
  bool satisfied = false;
  double slack = 0;
  std::string condition_id;
  double tail_bound = 0;      // estimate of the omitted tail of the sum
  bool tail_bounded = false;  // geometric decay detected
};

// b is a series with b0 = 1 (the reciprocal form)
MembershipReport sp_necessary(const PowerSeries& b, double mu, double alpha);
MembershipReport sp_sufficient(const PowerSeries& b, double mu, double alpha);
MembershipReport sp_single_term(int n, cplx an, double alpha);
MembershipReport u_membership(const PowerSeries& b, double lambda, double mu);
MembershipReport u_exact_nonneg(const PowerSeries& b, double mu);
MembershipReport starlike_order_screen(const PowerSeries& b, double mu, double alpha);
MembershipReport p2lambda_screen(const PowerSeries& b, double lambda);
MembershipReport area_coefficient_check(const PowerSeries& b, double mu);
double lambda_star_of(cplx b1);

// max over |z| <= radius of |z (phi)' - mu (phi - phi^(1+1/mu) f')|, phi = (z/f)^mu
double reciprocal_identity_residual(const PowerSeries& f, double mu, double radius = 0.7, int grid = 32);

struct SubordinationEvidence {
  bool pass = false;
  double origin_gap = 0;
  int outside = 0;
  int tested = 0;
};

// phi(0) = psi(0) and phi(r T) inside psi(0.999 T) for r in {0.5, 0.9, 0.99}
SubordinationEvidence subordination_range_check(const std::function<cplx(cplx)>& phi,
                                                const std::function<cplx(cplx)>& psi, bool psi_univalent,
                                                int samples = 1024);

nlohmann::json series_to_json(const PowerSeries& f);
PowerSeries series_from_json(const nlohmann::json& j);
nlohmann::json membership_to_json(const MembershipReport& r);

}  // namespace hm
