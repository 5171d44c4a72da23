#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fraudsim/daily.hpp"
#include "fraudsim/mc.hpp"
#include "fraudsim/panel.hpp"
#include "fraudsim/params.hpp"
#include "fraudsim/shrink.hpp"

namespace fraudsim {

/// Consortium-level aggregates the calibration reproduces.
struct CalibrationTargets {
    double event_count = 4357.0;       // recorded events over the panel horizon
    double gross_loss_eur = 880.0e6;   // recorded gross loss over the horizon
    double min_fraction_banks_with_losses = 0.90;

    double mean_severity_eur() const { return gross_loss_eur / event_count; }
};

struct CalibrationSettings {
    std::uint64_t seed = 0;       // common random numbers for every objective evaluation
    int histories_per_eval = 8;
    int max_iterations = 500;
    double rel_tol = 1.0e-4;
    int workers = 1;
    double w_severity = 1.0;
    double w_frequency = 1.0;
    double w_coverage = 10.0;
    bool skip_search = false;
    // Band for the per-bank measurement-error variance around the mean value.
    double sigma2_eta_lo_mult = 0.25;
    double sigma2_eta_hi_mult = 4.0;
};

struct TracePoint {
    int iteration = 0;
    std::string stage;
    double objective = 0.0;
    MeanParams means;
};

struct BankCalibration {
    std::string bank_code;
    BankParams params;
};

struct CalibrationResult {
    GlobalParams globals;
    MeanParams means;
    std::vector<BankCalibration> banks;
    double objective = 0.0;
    bool converged = false;
    std::vector<TracePoint> trace;
};

/// Spreads the mean parameters across banks with the shrinkage rules:
/// employees-per-branch drives the loss-equation sensitivities and the shock
/// parameters, risk awareness drives the control parameters, HR awareness
/// drives the quality sensitivity, and retail-asset scale drives the
/// measurement-error variance band.
std::vector<BankCalibration> build_bank_params(const std::vector<BankYearRecord>& panel,
                                               const std::vector<TextIndicatorRecord>& text,
                                               const GlobalParams& gp, const MeanParams& means,
                                               const CalibrationSettings& settings = {});

/// Wires calibrated banks to their daily drivers for simulation.
std::vector<BankSim> make_bank_sims(const std::vector<BankCalibration>& banks,
                                    const DailyPanel& daily);

/// Deterministic calibration objective at the given means (common random
/// numbers from settings.seed).
double calibration_objective(const MeanParams& means,
                             const std::vector<BankYearRecord>& panel,
                             const std::vector<TextIndicatorRecord>& text,
                             const DailyPanel& daily, const GlobalParams& gp,
                             const CalibrationTargets& targets,
                             const CalibrationSettings& settings);

/// Calibrates the six searched means (alpha0, alpha1, alpha_c, alpha_y,
/// alpha_q, beta0) against the targets: a deterministic preconditioning stage
/// (spread guard, frequency level bisection, severity rescale) followed by a
/// Nelder-Mead simplex search. Never throws on non-convergence; the result
/// carries a flag instead.
CalibrationResult calibrate_global(const CalibrationTargets& targets,
                                   const std::vector<BankYearRecord>& panel,
                                   const std::vector<TextIndicatorRecord>& text,
                                   const DailyPanel& daily, const GlobalParams& gp,
                                   const MeanParams& start,
                                   const CalibrationSettings& settings);

/// TOML round-trip of a calibration result: one [global] table, one [means]
/// table and one [banks.<code>] table per bank.
void write_params_toml(const std::string& path, const CalibrationResult& result);
CalibrationResult read_params_toml(const std::string& path);

}  // namespace fraudsim
