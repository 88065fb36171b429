#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace hm {

struct RadiusResult {
  double r0 = 0;
  double residual = 0;
  double lo = 0, hi = 1;
  int iterations = 0;
  double cross_check = 0;  // disagreement between the two evaluation routes
};

enum class BoundMethod { ClosedForm, GridGolden, Bisection };
const char* method_name(BoundMethod m);

struct BoundResult {
  double value = 0;
  double extremizer = 0;  // x* in [0,1) or root k > 1
  BoundMethod method = BoundMethod::ClosedForm;
  std::vector<std::string> notes;  // theorem hypotheses that do not hold
};

// parabolic-starlike radius of the reciprocal-form class, 0 < mu < 1
RadiusResult radius_sp(double mu, double alpha);
// int_0^1 dt / (1 - r^2 t^(1/(1-mu))); scheme 0: adaptive Simpson in t, 1: tanh-sinh in u = t^(1/(1-mu))
double radius_sp_integral(double r, double mu, int scheme);
double radius_sp_equation(double r, double mu, double alpha, int scheme = 0);

// same radius through the second coefficient, |f''(0)| <= 4
RadiusResult radius_sp_second_coeff(double alpha, double fpp0);
double radius_sp_second_coeff_equation(double r, double alpha, double fpp0, bool use_log1p = true);

double radius_u(double alpha, double lambda);
double radius_u_particular(double alpha);  // lambda = 1 shortcut
double radius_u_residual(double alpha, double lambda, double r);

double L_beta_kernel(double beta, double b, double c, double x);
BoundResult bound_L_beta(double beta, double b, double c);
double L_one_closed(double b, double c);  // beta = 1 closed form
double bound_bernardi_F(double gamma);

double bound_NAB(double A, double B);
std::vector<std::string> mabbc_violations(double A, double B, double b, double c);
double MAB_kernel(double A, double B, double b, double c, double x);
// strict: any violated hypothesis throws; otherwise only those leaving the kernel undefined do
BoundResult bound_MABbc(double A, double B, double b, double c, bool strict = false);
BoundResult bound_DABgamma(double A, double B, double gamma, bool strict = false);

struct StronglyStarlikeBound {
  double L = 0;      // L(alpha, beta)
  double k = 0;      // root in (1, inf)
  double total = 0;  // L + 2 alpha
  double h_at_k = 0;
  double lo = 0, hi = 0;
};
double strongly_starlike_h(double alpha, double beta, double x);
double strongly_starlike_g(double alpha, double beta, double x);
StronglyStarlikeBound bound_strongly_starlike(double alpha, double beta);

double delta_orders(double alpha, double beta, double gamma);
double delta_bernardi(double alpha, double gamma);  // accepts -gamma <= alpha < 1
double delta_gamma(double gamma);

double lambda_delta(double delta, double a);
double lambda_star(double mu);
double lambda_star_gamma(double gamma, double fpp0);
double lambda_R_gamma(double gamma, double fpp0);

nlohmann::json radius_to_json(const RadiusResult& r);
nlohmann::json bound_to_json(const BoundResult& b);

}  // namespace hm
