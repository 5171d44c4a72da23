#include "fraudsim/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fraudsim {

namespace {

// Keeps exp() finite; the logistic saturates well before these bounds.
double clamped_exp(double x) {
    if (x > 700.0) x = 700.0;
    if (x < -700.0) x = -700.0;
    return std::exp(x);
}

}  // namespace

void GlobalParams::validate() const {
    auto fail = [](const std::string& msg) { throw std::invalid_argument("GlobalParams: " + msg); };
    if (beta1 < 0.0 || beta2 < 0.0) fail("beta1 and beta2 must be non-negative");
    if (beta1 + beta2 >= 1.0) fail("beta1 + beta2 must be < 1 for a finite unconditional variance");
    if (!(rho_min > 0.0 && rho_min < rho_max && rho_max < 1.0)) fail("need 0 < rho_min < rho_max < 1");
    if (!(c_min > 0.0 && c_min < c_max && c_max < 1.0)) fail("need 0 < c_min < c_max < 1");
    if (!(rho_c > 0.0 && rho_c <= 1.0)) fail("rho_c must be in (0,1]");
    if (!(rho_q > 0.0 && rho_q <= 1.0)) fail("rho_q must be in (0,1]");
    if (q_bar <= 0.0) fail("q_bar must be positive");
    if (lambda_common < 0.0) fail("lambda_common must be non-negative");
    if (business_days_per_year < 1) fail("business_days_per_year must be >= 1");
}

void BankParams::validate(const GlobalParams& gp) const {
    auto fail = [](const std::string& msg) { throw std::invalid_argument("BankParams: " + msg); };
    if (!(rho >= gp.rho_min && rho <= gp.rho_max)) fail("rho outside [rho_min, rho_max]");
    if (beta0 < 0.0) fail("beta0 must be non-negative");
    if (!(c_star > 0.0 && c_star < 1.0)) fail("c_star must be in (0,1)");
    if (gamma > 0.0) fail("gamma must be <= 0");
    if (delta < 0.0) fail("delta must be >= 0");
    if (lambda < 0.0) fail("lambda must be >= 0");
    if (sigma2_eta < 0.0) fail("sigma2_eta must be >= 0");
    if (!(l_min > 0.0)) fail("l_min must be positive");
}

double ramp(double x) {
    return x >= 0.0 ? x : 0.0;
}

ShockStep step_shock(const BankState& state, const BankParams& bp,
                     const GlobalParams& gp, double normal_draw) {
    if (!std::isfinite(state.xi) || !std::isfinite(state.sigma2) || state.sigma2 <= 0.0) {
        throw std::domain_error("step_shock: non-finite or non-positive shock state");
    }
    const double sigma2_new =
        bp.beta0 + gp.beta1 * state.xi * state.xi + gp.beta2 * state.sigma2;
    const double xi_new = bp.rho * state.xi + std::sqrt(sigma2_new) * normal_draw;
    return {xi_new, sigma2_new};
}

double step_control(const BankState& state, const BankParams& bp,
                    const GlobalParams& gp) {
    if (!(state.cum_income > 0.0)) {
        throw std::domain_error("step_control: cumulative income must be positive");
    }
    const double loss_ratio = state.cum_obs_loss / state.cum_income;
    const double logistic = 1.0 / (1.0 + clamped_exp(bp.gamma * (loss_ratio - bp.lambda)));
    return gp.rho_c * (2.0 * bp.c_star) * logistic + (1.0 - gp.rho_c) * state.control;
}

double step_quality(const BankState& state, const DailyDrivers& d,
                    const BankParams& bp, const GlobalParams& gp) {
    if (!std::isfinite(d.productivity_a) || !std::isfinite(d.emp_per_branch_e) ||
        !std::isfinite(d.a_bar) || !std::isfinite(d.e_bar)) {
        throw std::domain_error("step_quality: non-finite drivers");
    }
    const double gap = bp.delta * (d.productivity_a - d.a_bar) * (d.emp_per_branch_e - d.e_bar);
    const double logistic = 1.0 / (1.0 + clamped_exp(gap));
    return 2.0 * gp.q_bar * gp.rho_q * logistic + (1.0 - gp.rho_q) * state.quality;
}

double loss_severity(const BankState& state, const DailyDrivers& d,
                     const BankParams& bp) {
    const double interior = bp.alpha1 + bp.alpha_c * state.control +
                            bp.alpha_y * d.income_y + bp.alpha_q * state.quality +
                            state.xi;
    return bp.alpha0 * ramp(interior);
}

Observation observe_and_record(double true_loss, const BankParams& bp,
                               double normal_draw) {
    const double noisy = true_loss + std::sqrt(bp.sigma2_eta) * normal_draw;
    const double observed = noisy > 0.0 ? noisy : 0.0;
    return {observed, observed > bp.l_min};
}

BankState init_state(const BankParams& bp, const GlobalParams& gp) {
    if (gp.beta1 + gp.beta2 >= 1.0) {
        throw std::invalid_argument("init_state: beta1 + beta2 must be < 1");
    }
    BankState s;
    s.xi = 0.0;
    s.sigma2 = bp.beta0 / (1.0 - gp.beta1 - gp.beta2);
    s.control = bp.c_star;
    s.quality = gp.q_bar;
    s.cum_obs_loss = 0.0;
    s.cum_income = 0.0;
    return s;
}

}  // namespace fraudsim
