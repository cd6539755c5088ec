#pragma once

// Self-contained double-precision special functions: log-gamma, digamma,
// trigamma and the regularized lower incomplete gamma function P(a, x).
// All functions validate their domain and throw std::domain_error on
// non-finite or out-of-range arguments.

namespace rmtlab::specfun {

/// ln Gamma(x) for x > 0. Lanczos approximation; exact 0 at x = 1 and x = 2.
double log_gamma(double x);

/// psi(x) = d/dx ln Gamma(x) for x > 0.
/// Upward recurrence to x >= 10, then the asymptotic Bernoulli series.
double digamma(double x);

/// psi'(x) = d^2/dx^2 ln Gamma(x) for x > 0. Same scheme as digamma.
double trigamma(double x);

/// Regularized lower incomplete gamma P(a, x) = gamma(a, x) / Gamma(a),
/// a > 0, x >= 0. Power series for x < a + 1, continued fraction otherwise.
double reg_lower_gamma(double a, double x);

}  // namespace rmtlab::specfun
