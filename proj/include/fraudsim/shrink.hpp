#pragma once

#include <string>
#include <vector>

namespace fraudsim {

/// A per-bank risk indicator: bank means over active years plus the overall
/// mean over all active bank-years.
struct RiskIndicator {
    std::vector<std::string> bank_codes;
    std::vector<double> bank_means;  // aligned with bank_codes
    double overall_mean = 0.0;

    /// Builds from raw bank-year values; overall mean averages every cell.
    static RiskIndicator from_values(const std::vector<std::string>& codes,
                                     const std::vector<std::vector<double>>& values_per_bank);
};

/// Direct proportionality: bank value = (bank mean / overall mean) * mean parameter.
std::vector<double> shrink_direct(double alpha_bar, const RiskIndicator& indicator);

/// Inverse proportionality: bank value = (overall mean / bank mean) * mean parameter.
std::vector<double> shrink_inverse(double alpha_bar, const RiskIndicator& indicator);

/// Affine map sending the raw minimum to lo and the raw maximum to hi.
/// A degenerate raw range maps every bank to the band midpoint.
std::vector<double> rescale_bounded(const std::vector<double>& raw, double lo, double hi);

/// Adjustment speed with the given half-life in steps: 1 - (1/2)^(1/half_life).
double half_life_speed(int half_life_days);

}  // namespace fraudsim
