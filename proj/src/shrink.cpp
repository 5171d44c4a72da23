#include "fraudsim/shrink.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fraudsim {

RiskIndicator RiskIndicator::from_values(const std::vector<std::string>& codes,
                                         const std::vector<std::vector<double>>& values_per_bank) {
    if (codes.size() != values_per_bank.size()) {
        throw std::invalid_argument("RiskIndicator: codes and values sizes differ");
    }
    RiskIndicator ind;
    ind.bank_codes = codes;
    double total = 0.0;
    std::size_t cells = 0;
    for (const auto& values : values_per_bank) {
        if (values.empty()) throw std::invalid_argument("RiskIndicator: bank with no values");
        double s = 0.0;
        for (double v : values) s += v;
        ind.bank_means.push_back(s / static_cast<double>(values.size()));
        total += s;
        cells += values.size();
    }
    ind.overall_mean = total / static_cast<double>(cells);
    return ind;
}

std::vector<double> shrink_direct(double alpha_bar, const RiskIndicator& indicator) {
    if (indicator.overall_mean == 0.0) {
        throw std::invalid_argument("shrink_direct: overall indicator mean is zero");
    }
    std::vector<double> out;
    out.reserve(indicator.bank_means.size());
    for (double m : indicator.bank_means) {
        out.push_back((m / indicator.overall_mean) * alpha_bar);
    }
    return out;
}

std::vector<double> shrink_inverse(double alpha_bar, const RiskIndicator& indicator) {
    std::vector<double> out;
    out.reserve(indicator.bank_means.size());
    for (double m : indicator.bank_means) {
        if (m == 0.0) throw std::invalid_argument("shrink_inverse: bank indicator mean is zero");
        out.push_back((indicator.overall_mean / m) * alpha_bar);
    }
    return out;
}

std::vector<double> rescale_bounded(const std::vector<double>& raw, double lo, double hi) {
    if (!(lo < hi)) throw std::invalid_argument("rescale_bounded: need lo < hi");
    if (raw.empty()) return {};
    const auto [min_it, max_it] = std::minmax_element(raw.begin(), raw.end());
    const double rmin = *min_it, rmax = *max_it;
    std::vector<double> out;
    out.reserve(raw.size());
    if (rmax == rmin) {
        out.assign(raw.size(), 0.5 * (lo + hi));
        return out;
    }
    const double slope = (hi - lo) / (rmax - rmin);
    for (double v : raw) out.push_back(lo + slope * (v - rmin));
    return out;
}

double half_life_speed(int half_life_days) {
    if (half_life_days < 1) throw std::invalid_argument("half_life_speed: half-life must be >= 1 day");
    return 1.0 - std::pow(0.5, 1.0 / static_cast<double>(half_life_days));
}

}  // namespace fraudsim
