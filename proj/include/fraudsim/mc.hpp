#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fraudsim/daily.hpp"
#include "fraudsim/model.hpp"
#include "fraudsim/params.hpp"
#include "fraudsim/rng.hpp"

namespace fraudsim {

struct SimulationConfig {
    int n_histories = 500;
    std::uint64_t master_seed = 0;
    int workers = 1;            // 0 picks hardware concurrency
    bool keep_events = false;   // retain per-event rows for CSV output
    bool keep_severities = false;  // retain per-bank-year severity lists
};

/// One bank wired for simulation. bank_index keys the RNG stream and must be
/// stable across runs (index into the sorted bank-code list).
struct BankSim {
    std::string bank_code;
    int bank_index = 0;
    BankParams params;
    const DailySeries* drivers = nullptr;
    const DailyPanel* grid = nullptr;
};

struct BankYearAgg {
    int bank_index = 0;
    int year = 0;
    long long events = 0;
    double gross_eur = 0.0;
    double mean_control = 0.0;
    std::vector<double> severities_eur;  // recorded observed severities
};

struct BankTotals {
    int bank_index = 0;
    long long events = 0;
    double gross_eur = 0.0;
};

struct HistorySummary {
    int history = 0;
    long long total_events = 0;
    double gross_loss_eur = 0.0;
    double min_recorded_eur = 0.0;  // +inf when the history records nothing
    std::vector<BankTotals> per_bank;
    std::vector<BankYearAgg> bank_years;
};

/// Event tagged with its history for CSV output.
struct TaggedEvent {
    int history = 0;
    int bank_index = 0;
    int year = 0;
    LossEvent event;
};

struct PathResult {
    std::vector<LossEvent> events;  // days with a positive true loss or a recorded observation
    std::vector<double> mean_control_by_year;  // one entry per covered year
    long long recorded_events = 0;
    double recorded_gross_eur = 0.0;
    double min_recorded_eur = 0.0;
};

/// Simulates one bank over its membership window with the daily step order:
/// shock, control, quality, severity, observation, accumulator update.
/// Consumes exactly two normal draws per day.
PathResult simulate_bank_path(const BankSim& bank, const GlobalParams& gp, RngStream& rng);

/// One full cross-bank history. Bank order does not affect the outcome since
/// every (bank, history) pair owns its own stream.
HistorySummary simulate_history(const std::vector<BankSim>& banks, const GlobalParams& gp,
                                const SimulationConfig& cfg, int history,
                                std::vector<TaggedEvent>* events_out);

struct MonteCarloResult {
    std::vector<HistorySummary> histories;
    std::vector<TaggedEvent> events;  // populated when cfg.keep_events
    double grand_mean_events = 0.0;
    double grand_mean_gross_eur = 0.0;
    double grand_mean_severity_eur = 0.0;  // grand gross over grand count
    double mean_fraction_banks_with_losses = 0.0;
    double min_recorded_eur = 0.0;
};

/// Runs cfg.n_histories independent histories. Output is a pure function of
/// (banks, gp, cfg.master_seed, cfg.n_histories) regardless of worker count.
MonteCarloResult monte_carlo(const std::vector<BankSim>& banks, const GlobalParams& gp,
                             const SimulationConfig& cfg);

}  // namespace fraudsim
