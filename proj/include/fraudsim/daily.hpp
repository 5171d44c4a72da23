#pragma once

#include <string>
#include <vector>

#include "fraudsim/panel.hpp"
#include "fraudsim/params.hpp"

namespace fraudsim {

/// Business-day resolution drivers for one bank over its membership window.
/// Day indices are 1-based on the panel-wide grid (day 1 = first business day
/// of the first panel year).
struct DailySeries {
    std::string bank_code;
    std::string country_code;
    int first_year = 0;
    int first_day = 0;
    int last_day = 0;
    std::vector<double> income_y;        // EUR millions per day
    std::vector<double> productivity_a;  // retail loans per retail employee
    std::vector<double> emp_per_branch;  // retail staff per branch
    std::vector<double> m_ratio;         // risk-awareness indicator
    std::vector<double> h_ratio;         // HR-awareness indicator

    bool covers(int day) const { return day >= first_day && day <= last_day; }
    int size() const { return last_day - first_day + 1; }
};

/// Daily panel: one series per bank plus the cross-bank driver means on every
/// grid day with at least one active bank.
struct DailyPanel {
    int first_year = 0;
    int n_years = 0;
    int days_per_year = 0;
    std::vector<DailySeries> series;
    std::vector<double> a_bar;  // indexed by day-1, NaN when no bank is active
    std::vector<double> e_bar;

    int total_days() const { return n_years * days_per_year; }
    const DailySeries& find(const std::string& bank_code) const;
};

/// Piecewise-linear interpolation of annual year-end anchors to business days.
/// Days of the first covered year before its year-end anchor are held flat at
/// that anchor. Income uses nic_r when present, otherwise loans_r times the
/// fallback margin, spread over the business days of the year.
DailyPanel interpolate_daily(const std::vector<BankYearRecord>& panel,
                             const std::vector<TextIndicatorRecord>& text,
                             const GlobalParams& gp,
                             double income_fallback_margin = 0.03);

/// Arithmetic means of productivity and employees-per-branch over the banks
/// active at the given day. Throws when no bank covers the day.
std::pair<double, double> cross_bank_means(const std::vector<DailySeries>& series, int day);

}  // namespace fraudsim
