#ifndef HYPMETRICA_H
#define HYPMETRICA_H

#include <stdint.h>

#if defined(HM_BUILDING_LIBRARY)
#define HM_API __attribute__((visibility("default")))
#else
#define HM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct hm_domain hm_domain;
typedef struct hm_series hm_series;

typedef enum hm_status {
  HM_OK = 0,
  HM_E_INVALID_ARGUMENT,
  HM_E_POINT_OUTSIDE_DOMAIN,
  HM_E_DEGENERATE_BOUNDARY,
  HM_E_INVERSION_AT_CENTER,
  HM_E_EMPTY_INPUT,
  HM_E_UNSUPPORTED_INFINITY_IN_DOMAIN,
  HM_E_UNSUPPORTED_MOEBIUS_DISK,
  HM_E_DISCONNECTED,
  HM_E_RESOLUTION_TOO_COARSE,
  HM_E_NOT_TWO_EXTREMAL,
  HM_E_UNKNOWN_CURVATURE,
  HM_E_METRIC_UNAVAILABLE,
  HM_E_OUTSIDE_DISK,
  HM_E_VANISHING_CORE,
  HM_E_VANISHING_DERIVATIVE,
  HM_E_BAD_PARAMETERS,
  HM_E_POLY_LIKE_POLE,
  HM_E_NON_CONVERGENT,
  HM_E_NEGATIVE_COEFFICIENT,
  HM_E_NOT_ATTESTED_UNIVALENT,
  HM_E_NO_ROOT,
  HM_E_CONSTRAINT_VIOLATION,
  HM_E_HYPERGEOMETRIC_FAILURE,
  HM_E_PARSE,
  HM_E_INTERNAL
} hm_status;

typedef struct hm_options {
  int samples;     /* boundary samples m */
  int grid;        /* base grid resolution for path metrics */
  double tol;      /* relative refinement tolerance */
  int max_levels;  /* grid doublings */
  uint64_t seed;
} hm_options;

HM_API void hm_options_default(hm_options* o);
HM_API const char* hm_status_name(hm_status s);
/* message of the last failure on this thread */
HM_API const char* hm_last_error(void);
HM_API void hm_string_free(char* s);
HM_API const char* hm_version(void);

/* domains */
HM_API hm_status hm_domain_from_json(const char* json, hm_domain** out);
HM_API hm_status hm_domain_named(const char* name, hm_domain** out);
HM_API void hm_domain_free(hm_domain* d);
HM_API hm_status hm_domain_contains(const hm_domain* d, double x, double y, int* out);
HM_API hm_status hm_domain_distance(const hm_domain* d, double x, double y, double* out);
HM_API hm_status hm_domain_bbox(const hm_domain* d, double* x0, double* y0, double* x1, double* y1);
/* boundary pieces as polylines: {"pieces": [[[x,y],...], ...]} */
HM_API hm_status hm_domain_outline_json(const hm_domain* d, int points_per_piece, char** out);
HM_API hm_status hm_domain_to_json(const hm_domain* d, char** out);

/* metrics: apollonian, j, j_product, quasihyperbolic, apollonian_inner, seittenranta,
   lambda, lambda_apollonian, j_prime (aliases alpha, k, alpha_tilde, alpha_prime) */
HM_API hm_status hm_metric(const hm_domain* d, const char* kind, double x1, double y1, double x2, double y2,
                           const hm_options* o, double* value, double* error_estimate);
/* value, error estimate, refinement trace and geodesic path where one exists */
HM_API hm_status hm_metric_json(const hm_domain* d, const char* kind, double x1, double y1, double x2, double y2,
                                const hm_options* o, char** out);

/* densities: delta, quasihyperbolic, ferrand, kp, kp_ferrand_ratio, apollonian (direction theta),
   apollonian_min, apollonian_max */
HM_API hm_status hm_density(const hm_domain* d, const char* kind, double x, double y, double theta,
                            const hm_options* o, double* out);
/* extremal disks and hyperbolic centres for seed points, seeds = x0,y0,x1,y1,... */
HM_API hm_status hm_hma_json(const hm_domain* d, const double* seeds, int n_seeds, const hm_options* o, char** out);

/* relation estimate and verdict between two metrics */
HM_API hm_status hm_relate_json(const hm_domain* d, const char* metric_a, const char* metric_b, int pairs_per_scale,
                                int scales, const hm_options* o, char** out);
/* suite: "default", "table1", "chapter3" or a JSON suite document; csv may be NULL */
HM_API hm_status hm_scenarios(const char* suite, const hm_options* o, char** json, char** csv);

/* power series */
HM_API hm_status hm_series_from_json(const char* json, hm_series** out);
/* identity, koebe, ell, g_beta(b), extremal_AB(A,B) */
HM_API hm_status hm_series_named(const char* name, int truncation, hm_series** out);
HM_API void hm_series_free(hm_series* s);
HM_API hm_status hm_series_to_json(const hm_series* s, char** out);
HM_API hm_status hm_series_evaluate(const hm_series* s, double re, double im, double* out_re, double* out_im);
/* alexander, libera, bernardi(p1), bbc(p1,p2), reciprocal(p1 = mu), hornich_scale(p1), derivative */
HM_API hm_status hm_series_transform(const hm_series* s, const char* op, double p1, double p2, hm_series** out);

/* pre-Schwarzian norm of a named closed-form family (koebe, ell, g_beta(b), extremal_AB(A,B),
   alexander_g_beta(b)) or of a series */
HM_API hm_status hm_norm_named(const char* name, int rays, double* value, double* error_estimate);
HM_API hm_status hm_norm_series(const hm_series* s, int rays, double* value, double* error_estimate);

/* membership tests on a normalized f; the reciprocal form (z/f)^mu is formed internally.
   tests: sp_necessary, sp_sufficient, u, u_exact, starlike_order, p2lambda, area, all */
HM_API hm_status hm_membership_json(const hm_series* f, const char* test, double mu, double alpha, double lambda,
                                    char** out);

/* radius: sp(mu, alpha), sp_second(alpha, |f''(0)|), u(alpha, lambda) */
HM_API hm_status hm_radius_json(const char* name, double p1, double p2, char** out);
/* bound by name with a parameter list; see README for the parameter order */
HM_API hm_status hm_bound_json(const char* name, const double* params, int n_params, int strict, char** out);

HM_API hm_status hm_hypergeometric(double a, double b, double c, double re, double im, double* out_re,
                                   double* out_im);

#ifdef __cplusplus
}
#endif

#endif
