#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace coxradar {

struct QuadratureFailure : std::runtime_error {
  explicit QuadratureFailure(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

// Gauss-Kronrod 7-15 abscissae/weights (QUADPACK dqk15).
inline constexpr double kGk15X[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
inline constexpr double kGk15Wk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
inline constexpr double kGk15Wg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

template <class F>
void gk15(F&& f, double a, double b, double& kronrod, double& err) {
  const double c = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(c);
  double resk = kGk15Wk[7] * fc;
  double resg = kGk15Wg[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kGk15X[i];
    const double fsum = f(c - dx) + f(c + dx);
    resk += kGk15Wk[i] * fsum;
    if (i % 2 == 1) resg += kGk15Wg[i / 2] * fsum;
  }
  kronrod = resk * half;
  err = std::abs((resk - resg) * half);
}

template <class F>
double adapt(F&& f, double a, double b, double tol, double rel_tol, int depth) {
  double val, err;
  gk15(f, a, b, val, err);
  if (err <= tol || err <= rel_tol * std::abs(val)) return val;
  if (depth <= 0)
    throw QuadratureFailure("quadrature did not converge on [" + std::to_string(a) + ", " +
                            std::to_string(b) + "], err=" + std::to_string(err));
  const double c = 0.5 * (a + b);
  return adapt(f, a, c, 0.5 * tol, rel_tol, depth - 1) +
         adapt(f, c, b, 0.5 * tol, rel_tol, depth - 1);
}

}  // namespace detail

/// Adaptive Gauss-Kronrod integration with an absolute tolerance and a
/// per-interval relative floor. Throws QuadratureFailure instead of
/// returning a silently wrong value.
template <class F>
double integrate(F&& f, double a, double b, double abs_tol = 1e-10, int max_depth = 48,
                 double rel_tol = 1e-12) {
  if (!(a <= b)) throw std::invalid_argument("integrate: invalid bounds");
  if (a == b) return 0.0;
  return detail::adapt(f, a, b, abs_tol, rel_tol, max_depth);
}

}  // namespace coxradar
