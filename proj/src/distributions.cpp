#include "textent/distributions.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace textent {

namespace {

void require_open_unit(double p, const char* what) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::domain_error(std::string(what) + " requires p in (0,1), got " + std::to_string(p));
  }
}

}  // namespace

double normal_cdf(double x) {
  return 0.5 * std::erfc(-x * std::numbers::inv_sqrt2);
}

double normal_quantile(double p) {
  require_open_unit(p, "normal_quantile");

  // Acklam's rational approximation, three branches by tail region.
  static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                 -2.759285104469687e+02, 1.383577518672690e+02,
                                 -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                 -1.556989798598866e+02, 6.680131188771972e+01,
                                 -1.328068155288572e+01};
  static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                 -2.400758277161838e+00, -2.549732539343734e+00,
                                 4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                 2.445134137142996e+00, 3.754408661907416e+00};
  static constexpr double p_low = 0.02425;

  double x;
  if (p < p_low) {
    const double q = std::sqrt(-2.0 * std::log(p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else if (p <= 1.0 - p_low) {
    const double q = p - 0.5;
    const double r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    const double q = std::sqrt(-2.0 * std::log(1.0 - p));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }

  // One Newton step against the full-precision CDF.
  const double err = normal_cdf(x) - p;
  const double pdf = std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
  if (pdf > 0.0) x -= err / pdf;
  return x;
}

namespace detail {

double regularized_gamma_p(double a, double x) {
  if (x <= 0.0) return 0.0;
  const double log_prefix = a * std::log(x) - x - std::lgamma(a);

  if (x < a + 1.0) {
    // Series expansion.
    double term = 1.0 / a;
    double sum = term;
    for (int n = 1; n < 10000; ++n) {
      term *= x / (a + n);
      sum += term;
      if (std::abs(term) < std::abs(sum) * 1e-16) break;
    }
    return sum * std::exp(log_prefix);
  }

  // Continued fraction (modified Lentz) for Q(a, x); P = 1 - Q.
  const double tiny = std::numeric_limits<double>::min() / 1e-30;
  double f = tiny;
  double c = f;
  double d = 0.0;
  for (int i = 1; i < 10000; ++i) {
    double an, bn;
    if (i == 1) {
      an = 1.0;
      bn = x + 1.0 - a;
    } else {
      const int m = i - 1;
      an = -static_cast<double>(m) * (m - a);
      bn = x + 2.0 * m + 1.0 - a;
    }
    d = bn + an * d;
    if (std::abs(d) < tiny) d = tiny;
    c = bn + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  const double q = std::exp(log_prefix) * f;
  return 1.0 - q;
}

}  // namespace detail

double chi2_quantile(int df, double p) {
  if (df < 1) throw std::domain_error("chi2_quantile requires df >= 1");
  require_open_unit(p, "chi2_quantile");

  const double a = 0.5 * df;

  // Wilson-Hilferty starting point.
  const double z = normal_quantile(p);
  const double t = 1.0 - 2.0 / (9.0 * df) + z * std::sqrt(2.0 / (9.0 * df));
  double x = df * t * t * t;
  if (!(x > 0.0)) x = 0.5;

  // Establish a bracket around the root of P(a, x/2) - p.
  double lo = 0.0;
  double hi = x;
  while (detail::regularized_gamma_p(a, 0.5 * hi) < p) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e300) throw std::runtime_error("chi2_quantile failed to bracket");
  }
  if (x <= lo || x >= hi) x = 0.5 * (lo + hi);

  // Safeguarded Newton on the CDF; density is the analytic derivative.
  for (int it = 0; it < 200; ++it) {
    const double f = detail::regularized_gamma_p(a, 0.5 * x) - p;
    if (f > 0.0) {
      hi = x;
    } else {
      lo = x;
    }
    const double log_pdf = (a - 1.0) * std::log(0.5 * x) - 0.5 * x - std::lgamma(a);
    const double pdf = 0.5 * std::exp(log_pdf);
    double next = x - f / pdf;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - x) <= 1e-13 * x) {
      x = next;
      break;
    }
    x = next;
  }
  return x;
}

double cauchy_quantile(double p) {
  require_open_unit(p, "cauchy_quantile");
  return std::tan(std::numbers::pi * (p - 0.5));
}

}  // namespace textent
