#include "fraudsim/mc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace fraudsim {

PathResult simulate_bank_path(const BankSim& bank, const GlobalParams& gp, RngStream& rng) {
    const DailySeries& drv = *bank.drivers;
    const DailyPanel& grid = *bank.grid;
    const BankParams& bp = bank.params;
    const int D = grid.days_per_year;

    PathResult out;
    out.min_recorded_eur = std::numeric_limits<double>::infinity();
    const int n_years = drv.size() / D;
    out.mean_control_by_year.assign(n_years, 0.0);

    BankState state = init_state(bp, gp);
    try {
        for (int day = drv.first_day; day <= drv.last_day; ++day) {
            const int i = day - drv.first_day;
            const DailyDrivers d{drv.income_y[i], drv.productivity_a[i], drv.emp_per_branch[i],
                                 grid.a_bar[day - 1], grid.e_bar[day - 1]};

            const double shock_draw = rng.normal();
            const ShockStep sh = step_shock(state, bp, gp, shock_draw);
            state.xi = sh.xi;
            state.sigma2 = sh.sigma2;
            if (state.cum_income > 0.0) {
                state.control = step_control(state, bp, gp);
            }
            state.quality = step_quality(state, d, bp, gp);
            const double true_loss = loss_severity(state, d, bp);
            const double measure_draw = rng.normal();  // consumed every day to keep replay alignment
            const Observation obs = observe_and_record(true_loss, bp, measure_draw);

            if (obs.recorded) {
                state.cum_obs_loss += obs.observed_loss;
                ++out.recorded_events;
                out.recorded_gross_eur += obs.observed_loss;
                out.min_recorded_eur = std::min(out.min_recorded_eur, obs.observed_loss);
            }
            state.cum_income += d.income_y * kEurPerMillion;
            out.mean_control_by_year[i / D] += state.control;

            if (true_loss > 0.0 || obs.recorded) {
                out.events.push_back({bank.bank_index, day, true_loss, obs.observed_loss, obs.recorded});
            }
        }
    } catch (const std::exception& e) {
        throw std::runtime_error("bank " + bank.bank_code + ": " + e.what());
    }
    for (double& c : out.mean_control_by_year) c /= static_cast<double>(D);
    return out;
}

HistorySummary simulate_history(const std::vector<BankSim>& banks, const GlobalParams& gp,
                                const SimulationConfig& cfg, int history,
                                std::vector<TaggedEvent>* events_out) {
    HistorySummary sum;
    sum.history = history;
    sum.min_recorded_eur = std::numeric_limits<double>::infinity();
    const int D = banks.empty() ? gp.business_days_per_year : banks.front().grid->days_per_year;

    for (const auto& bank : banks) {
        RngStream rng(cfg.master_seed, static_cast<std::uint64_t>(bank.bank_index),
                      static_cast<std::uint64_t>(history));
        PathResult path = simulate_bank_path(bank, gp, rng);

        sum.total_events += path.recorded_events;
        sum.gross_loss_eur += path.recorded_gross_eur;
        sum.min_recorded_eur = std::min(sum.min_recorded_eur, path.min_recorded_eur);
        sum.per_bank.push_back({bank.bank_index, path.recorded_events, path.recorded_gross_eur});

        const int first_year = bank.drivers->first_year;
        const int n_years = static_cast<int>(path.mean_control_by_year.size());
        std::vector<BankYearAgg> aggs(n_years);
        for (int k = 0; k < n_years; ++k) {
            aggs[k].bank_index = bank.bank_index;
            aggs[k].year = first_year + k;
            aggs[k].mean_control = path.mean_control_by_year[k];
        }
        for (const auto& ev : path.events) {
            if (!ev.recorded) continue;
            const int k = (ev.tau - bank.drivers->first_day) / D;
            ++aggs[k].events;
            aggs[k].gross_eur += ev.observed_loss;
            if (cfg.keep_severities) aggs[k].severities_eur.push_back(ev.observed_loss);
        }
        for (auto& a : aggs) sum.bank_years.push_back(std::move(a));

        if (events_out) {
            for (const auto& ev : path.events) {
                const int year = bank.drivers->first_year + (ev.tau - bank.drivers->first_day) / D;
                events_out->push_back({history, bank.bank_index, year, ev});
            }
        }
    }
    return sum;
}

MonteCarloResult monte_carlo(const std::vector<BankSim>& banks, const GlobalParams& gp,
                             const SimulationConfig& cfg) {
    if (cfg.n_histories < 1) throw std::invalid_argument("n_histories must be >= 1");
    int workers = cfg.workers;
    if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
    workers = std::min(workers, cfg.n_histories);

    MonteCarloResult res;
    res.histories.resize(cfg.n_histories);
    std::vector<std::vector<TaggedEvent>> events_by_history;
    if (cfg.keep_events) events_by_history.resize(cfg.n_histories);

    auto run_range = [&](int begin, int step) {
        for (int h = begin; h < cfg.n_histories; h += step) {
            res.histories[h] = simulate_history(banks, gp, cfg, h,
                                                cfg.keep_events ? &events_by_history[h] : nullptr);
        }
    };

    if (workers == 1) {
        run_range(0, 1);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        std::exception_ptr first_error;
        std::mutex err_mutex;
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    run_range(w, workers);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(err_mutex);
                    if (!first_error) first_error = std::current_exception();
                }
            });
        }
        for (auto& t : pool) t.join();
        if (first_error) std::rethrow_exception(first_error);
    }

    long long total_events = 0;
    double total_gross = 0.0;
    double frac_sum = 0.0;
    double min_rec = std::numeric_limits<double>::infinity();
    for (const auto& h : res.histories) {
        total_events += h.total_events;
        total_gross += h.gross_loss_eur;
        min_rec = std::min(min_rec, h.min_recorded_eur);
        int with_losses = 0;
        for (const auto& b : h.per_bank) {
            if (b.events > 0) ++with_losses;
        }
        frac_sum += banks.empty() ? 0.0
                                  : static_cast<double>(with_losses) / static_cast<double>(banks.size());
    }
    const double n = static_cast<double>(cfg.n_histories);
    res.grand_mean_events = static_cast<double>(total_events) / n;
    res.grand_mean_gross_eur = total_gross / n;
    res.grand_mean_severity_eur =
        total_events > 0 ? total_gross / static_cast<double>(total_events) : 0.0;
    res.mean_fraction_banks_with_losses = frac_sum / n;
    res.min_recorded_eur = min_rec;

    if (cfg.keep_events) {
        std::size_t total = 0;
        for (const auto& v : events_by_history) total += v.size();
        res.events.reserve(total);
        for (auto& v : events_by_history) {
            res.events.insert(res.events.end(), v.begin(), v.end());
        }
    }
    return res;
}

}  // namespace fraudsim
