#pragma once

#include <cmath>
#include <utility>

namespace hm {

// golden-section search for a maximum of f on [a,b]; returns (argmax, max)
template <class F>
std::pair<double, double> golden_max(F&& f, double a, double b, int iters = 80) {
  const double g = 0.5 * (std::sqrt(5.0) - 1);
  double c = b - g * (b - a), d = a + g * (b - a);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < iters && b - a > 1e-15 * (1 + std::abs(a)); ++i) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = f(d);
    }
  }
  return fc >= fd ? std::make_pair(c, fc) : std::make_pair(d, fd);
}

// grid scan on [a,b] with n intervals, then golden refinement around the best node
template <class F>
std::pair<double, double> grid_golden_max(F&& f, double a, double b, int n = 1024, int iters = 100) {
  double bx = a, bv = f(a);
  int bi = 0;
  for (int i = 1; i <= n; ++i) {
    double x = a + (b - a) * i / n;
    double v = f(x);
    if (v > bv) {
      bv = v;
      bx = x;
      bi = i;
    }
  }
  double lo = a + (b - a) * std::max(0, bi - 1) / n, hi = a + (b - a) * std::min(n, bi + 1) / n;
  auto r = golden_max(f, lo, hi, iters);
  if (r.second >= bv) return r;
  return {bx, bv};
}

namespace detail {
template <class F>
double simpson_step(F& f, double a, double b, double fa, double fm, double fb, double whole, double tol, int depth) {
  double m = 0.5 * (a + b), lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = f(lm), frm = f(rm);
  double left = (m - a) / 6 * (fa + 4 * flm + fm), right = (b - m) / 6 * (fm + 4 * frm + fb);
  double diff = left + right - whole;
  // below the rounding floor further splitting only adds noise
  if (depth <= 0 || std::abs(diff) <= 15 * tol || std::abs(diff) <= 1e-15 * std::abs(left + right))
    return left + right + diff / 15;
  return simpson_step(f, a, m, fa, flm, fm, left, tol / 2, depth - 1) +
         simpson_step(f, m, b, fm, frm, fb, right, tol / 2, depth - 1);
}
}  // namespace detail

template <class F>
double adaptive_simpson(F&& f, double a, double b, double tol = 1e-13, int depth = 40) {
  double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  double whole = (b - a) / 6 * (fa + 4 * fm + fb);
  return detail::simpson_step(f, a, b, fa, fm, fb, whole, tol, depth);
}

}  // namespace hm
