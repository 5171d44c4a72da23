#include "fraudsim/daily.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

namespace fraudsim {

const DailySeries& DailyPanel::find(const std::string& bank_code) const {
    for (const auto& s : series) {
        if (s.bank_code == bank_code) return s;
    }
    throw std::runtime_error("no daily series for bank " + bank_code);
}

namespace {

struct AnnualAnchors {
    std::string country_code;
    int y0 = 0, y1 = 0;
    std::vector<double> income, a, e, m, h;  // indexed by year - y0
};

double lerp(double v0, double v1, double frac) { return v0 + (v1 - v0) * frac; }

}  // namespace

DailyPanel interpolate_daily(const std::vector<BankYearRecord>& panel,
                             const std::vector<TextIndicatorRecord>& text,
                             const GlobalParams& gp,
                             double income_fallback_margin) {
    const int D = gp.business_days_per_year;
    std::map<std::pair<std::string, int>, const TextIndicatorRecord*> text_by_key;
    for (const auto& t : text) text_by_key[{t.bank_code, t.year}] = &t;

    int first_year = std::numeric_limits<int>::max();
    int last_year = std::numeric_limits<int>::min();
    std::map<std::string, std::map<int, const BankYearRecord*>> by_bank;
    for (const auto& rec : panel) {
        if (!rec.active_member) continue;
        by_bank[rec.bank_code][rec.year] = &rec;
        first_year = std::min(first_year, rec.year);
        last_year = std::max(last_year, rec.year);
    }
    if (by_bank.empty()) throw std::runtime_error("interpolate_daily: no active bank-years");

    DailyPanel out;
    out.first_year = first_year;
    out.n_years = last_year - first_year + 1;
    out.days_per_year = D;

    for (const auto& [code, years] : by_bank) {
        AnnualAnchors anch;
        anch.y0 = years.begin()->first;
        anch.y1 = years.rbegin()->first;
        for (int y = anch.y0; y <= anch.y1; ++y) {
            auto it = years.find(y);
            if (it == years.end()) {
                throw std::runtime_error("bank " + code + ": missing panel year " + std::to_string(y));
            }
            const BankYearRecord& r = *it->second;
            anch.country_code = r.country_code;
            if (!(r.staff_r > 0.0) || !(r.branches > 0.0)) {
                throw std::runtime_error("bank " + code + "/" + std::to_string(y) +
                                         ": needs positive retail staff and branches");
            }
            const double annual_income = std::isnan(r.nic_r)
                                             ? r.loans_r * income_fallback_margin
                                             : r.nic_r;
            anch.income.push_back(annual_income / static_cast<double>(D));
            anch.a.push_back(r.loans_r / r.staff_r);
            anch.e.push_back(r.staff_r / r.branches);
            auto ti = text_by_key.find({code, y});
            if (ti == text_by_key.end()) {
                throw std::runtime_error("bank " + code + "/" + std::to_string(y) +
                                         ": missing textual indicators");
            }
            anch.m.push_back(ti->second->orisk_ratio());
            anch.h.push_back(ti->second->hr_ratio());
        }

        DailySeries s;
        s.bank_code = code;
        s.country_code = anch.country_code;
        s.first_year = anch.y0;
        s.first_day = (anch.y0 - first_year) * D + 1;
        s.last_day = (anch.y1 - first_year + 1) * D;
        const int n = s.last_day - s.first_day + 1;
        const int first_anchor_day = (anch.y0 - first_year + 1) * D;
        auto fill = [&](const std::vector<double>& v, std::vector<double>& dst) {
            dst.resize(n);
            for (int i = 0; i < n; ++i) {
                const int g = s.first_day + i;
                if (g <= first_anchor_day) {
                    dst[i] = v.front();
                } else {
                    const int k = (g - first_anchor_day - 1) / D;  // segment index
                    const int seg_start = first_anchor_day + k * D;
                    const double frac = static_cast<double>(g - seg_start) / static_cast<double>(D);
                    dst[i] = lerp(v[k], v[k + 1], frac);
                }
            }
        };
        fill(anch.income, s.income_y);
        fill(anch.a, s.productivity_a);
        fill(anch.e, s.emp_per_branch);
        fill(anch.m, s.m_ratio);
        fill(anch.h, s.h_ratio);
        out.series.push_back(std::move(s));
    }

    const int T = out.total_days();
    out.a_bar.assign(T, std::numeric_limits<double>::quiet_NaN());
    out.e_bar.assign(T, std::numeric_limits<double>::quiet_NaN());
    for (int day = 1; day <= T; ++day) {
        double sa = 0.0, se = 0.0;
        int count = 0;
        for (const auto& s : out.series) {
            if (!s.covers(day)) continue;
            sa += s.productivity_a[day - s.first_day];
            se += s.emp_per_branch[day - s.first_day];
            ++count;
        }
        if (count > 0) {
            out.a_bar[day - 1] = sa / count;
            out.e_bar[day - 1] = se / count;
        }
    }
    return out;
}

std::pair<double, double> cross_bank_means(const std::vector<DailySeries>& series, int day) {
    double sa = 0.0, se = 0.0;
    int count = 0;
    for (const auto& s : series) {
        if (!s.covers(day)) continue;
        sa += s.productivity_a[day - s.first_day];
        se += s.emp_per_branch[day - s.first_day];
        ++count;
    }
    if (count == 0) throw std::runtime_error("cross_bank_means: no active bank at day " + std::to_string(day));
    return {sa / count, se / count};
}

}  // namespace fraudsim
