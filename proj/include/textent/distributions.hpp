#pragma once

namespace textent {

/// Standard normal CDF. Absolute error below 1e-15 over the real line.
double normal_cdf(double x);

/// Standard normal quantile. Rational initial approximation polished with one
/// Newton step; |Phi(Phi^-1(p)) - p| stays under 1e-14 across (0, 1).
/// Throws std::domain_error for p outside (0, 1).
double normal_quantile(double p);

/// Chi-square quantile for df >= 1, p in (0, 1). Inverts the regularized
/// lower incomplete gamma with a bracketed Newton iteration; relative error
/// below 1e-10.
double chi2_quantile(int df, double p);

/// Standard Cauchy quantile, tan(pi * (p - 1/2)).
double cauchy_quantile(double p);

namespace detail {
/// Regularized lower incomplete gamma P(a, x): series for x < a + 1,
/// continued fraction otherwise.
double regularized_gamma_p(double a, double x);
}  // namespace detail

}  // namespace textent
