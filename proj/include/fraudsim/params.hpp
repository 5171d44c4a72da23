#pragma once

#include <cstdint>

namespace fraudsim {

/// Parameters shared by every bank in the system.
///
/// Defaults are the baseline calibration constants; the calibration engine
/// adjusts the searched means while these globals stay fixed.
struct GlobalParams {
    double beta1 = 0.01;    // weight of lagged squared shock in conditional variance
    double beta2 = 0.70;    // weight of lagged conditional variance
    double rho_c = 0.10;    // speed at which controls absorb new conditions
    double rho_q = 0.05;    // speed at which ethical quality absorbs new conditions
    double q_bar = 0.70;    // long-run average ethical quality across banks
    double rho_min = 0.50;  // bounds for per-bank shock autocorrelation
    double rho_max = 0.90;
    double c_min = 0.30;    // bounds for per-bank long-run control level
    double c_max = 0.70;
    double lambda_common = 3.0e-4;  // desired loss ratio, common across banks
    int business_days_per_year = 260;

    /// Throws std::invalid_argument when a bound or stationarity condition fails.
    void validate() const;
};

/// Idiosyncratic parameters of one bank.
///
/// Monetary conventions: alpha0 is EUR per unit of ramp output, sigma2_eta is
/// EUR^2 and l_min is EUR. The daily income driver entering the loss equation
/// stays in EUR millions, so alpha_y is per EUR million of daily income.
struct BankParams {
    double alpha0;      // severity scale (EUR per ramp unit)
    double alpha1;      // constant inside the ramp
    double alpha_c;     // impact of the control level
    double alpha_y;     // impact of daily income
    double alpha_q;     // impact of ethical quality
    double rho;         // shock autocorrelation, in [rho_min, rho_max]
    double beta0;       // constant term of the conditional variance
    double c_star;      // long-run control level, in (0,1)
    double gamma;       // control sensitivity to the loss-ratio gap, <= 0
    double lambda;      // desired loss ratio
    double delta;       // quality sensitivity, >= 0
    double sigma2_eta;  // measurement-error variance (EUR^2)
    double l_min;       // recording threshold (EUR)

    void validate(const GlobalParams& gp) const;
};

/// Cross-bank mean parameters. The shrinkage rules spread these across banks;
/// the calibration search moves the first six.
///
/// alpha0 is expressed in EUR millions per ramp unit at this level and is
/// converted to EUR when per-bank parameters are built.
struct MeanParams {
    double alpha0 = 0.400;
    double alpha1 = 16.810;
    double alpha_c = -275.291;
    double alpha_y = -1.587;
    double alpha_q = 0.052;
    double beta0 = 0.20;
    double rho = 0.70;
    double c_star = 0.50;
    double gamma = -0.50;
    double delta = 0.20;
    double sigma2_eta = 0.012;  // EUR^2
    double l_min_eur = 20000.0;
};

inline constexpr double kEurPerMillion = 1.0e6;

}  // namespace fraudsim
