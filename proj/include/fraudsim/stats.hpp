#pragma once

#include <cstddef>
#include <span>

namespace fraudsim {

/// Inverse of the standard normal CDF (Wichura's PPND16), accurate to about
/// 1e-15 on (0,1). Throws std::domain_error outside (0,1).
double normal_inv_cdf(double p);

/// Standard normal CDF.
double normal_cdf(double x);

/// Two-sided p-value for a standard-normal test statistic.
double normal_two_sided_p(double t);

double mean(std::span<const double> xs);
double variance(std::span<const double> xs);  // denominator n
double lag1_autocorr(std::span<const double> xs);

}  // namespace fraudsim
