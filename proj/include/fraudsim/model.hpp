#pragma once

#include "fraudsim/params.hpp"

namespace fraudsim {

/// Latent state of one bank, advanced one business day at a time.
struct BankState {
    double xi = 0.0;            // current loss shock
    double sigma2 = 0.0;        // conditional variance of the shock innovation
    double control = 0.0;       // risk-control level, in (0,1)
    double quality = 0.0;       // ethical quality of the workforce, > 0
    double cum_obs_loss = 0.0;  // sum of recorded observed losses so far (EUR)
    double cum_income = 0.0;    // sum of daily retail income so far (EUR)
};

/// Observable drivers for one bank-day, interpolated from annual data.
struct DailyDrivers {
    double income_y;         // daily retail income (EUR millions)
    double productivity_a;   // retail loans per retail employee (EUR millions/person)
    double emp_per_branch_e; // retail employees per branch
    double a_bar;            // cross-bank mean of productivity_a at this day
    double e_bar;            // cross-bank mean of emp_per_branch_e at this day
};

/// One daily loss outcome.
struct LossEvent {
    int bank_id = 0;
    int tau = 0;                // day index within the simulated horizon
    double true_loss = 0.0;     // EUR
    double observed_loss = 0.0; // EUR, clamped at zero
    bool recorded = false;      // observed_loss > l_min
};

/// max(x, 0); maps the latent loss factor to a non-negative severity.
double ramp(double x);

struct ShockStep {
    double xi;
    double sigma2;
};

/// Advances the autocorrelated, conditionally heteroskedastic loss shock.
/// The conditional variance uses the lagged squared shock and lagged variance.
/// Throws std::domain_error when the incoming state is not finite.
ShockStep step_shock(const BankState& state, const BankParams& bp,
                     const GlobalParams& gp, double normal_draw);

/// Feedback update of the control level from the observed loss ratio.
/// Requires state.cum_income > 0; the accumulators must cover days before the
/// current one.
double step_control(const BankState& state, const BankParams& bp,
                    const GlobalParams& gp);

/// Feedback update of workforce ethical quality from productivity and staffing
/// relative to the cross-bank averages.
double step_quality(const BankState& state, const DailyDrivers& d,
                    const BankParams& bp, const GlobalParams& gp);

/// Severity of today's internal fraud loss (EUR); zero on no-loss days.
/// Expects the state already advanced for the current day.
double loss_severity(const BankState& state, const DailyDrivers& d,
                     const BankParams& bp);

struct Observation {
    double observed_loss; // EUR, >= 0
    bool recorded;
};

/// Applies measurement error and the recording threshold. Observed severities
/// are clamped at zero before thresholding.
Observation observe_and_record(double true_loss, const BankParams& bp,
                               double normal_draw);

/// Initial state: zero shock, unconditional variance, long-run anchors for
/// control and quality, empty accumulators. Throws when beta1 + beta2 >= 1.
BankState init_state(const BankParams& bp, const GlobalParams& gp);

}  // namespace fraudsim
