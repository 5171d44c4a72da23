#include "fraudsim/panel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

#include "fraudsim/csv.hpp"

namespace fraudsim {

namespace {
constexpr int kYearMin = 2006;
constexpr int kYearMax = 2010;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
}  // namespace

DataValidationError::DataValidationError(const std::string& path, std::vector<std::string> issues)
    : std::runtime_error(path + ": " + std::to_string(issues.size()) + " validation issue(s); first: " +
                         (issues.empty() ? std::string("none") : issues.front())),
      issues_(std::move(issues)) {}

FxRates load_fx_rates(const std::string& path) {
    const CsvTable t = read_csv(path);
    const auto c_ccy = t.col("currency");
    const auto c_year = t.col("year");
    const auto c_rate = t.col("eur_per_unit");
    FxRates rates;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        const auto& r = t.rows[i];
        const std::string where = path + " row " + std::to_string(i + 1);
        const double rate = parse_double(r[c_rate], where);
        if (rate <= 0.0) throw CsvDataError(path, i + 1, "non-positive fx rate");
        rates[r[c_ccy]][static_cast<int>(parse_int(r[c_year], where))] = rate;
    }
    return rates;
}

namespace {

double fx_to_eur(double value, const std::string& ccy, int year, const FxRates& rates,
                 std::vector<std::string>& issues, std::size_t row) {
    if (std::isnan(value)) return value;
    if (ccy == "EUR") return value;
    auto it = rates.find(ccy);
    if (it == rates.end() || it->second.find(year) == it->second.end()) {
        issues.push_back("row " + std::to_string(row) + ": no EUR rate for " + ccy + "/" +
                         std::to_string(year));
        return value;
    }
    return value * it->second.at(year);
}

double field_or_nan(const std::string& s, const std::string& where) {
    if (s.empty()) return kNaN;
    return parse_double(s, where);
}

}  // namespace

std::vector<BankYearRecord> load_panel(const std::string& path, const FxRates& rates) {
    const CsvTable t = read_csv(path);
    std::vector<std::string> issues;
    std::vector<BankYearRecord> out;
    out.reserve(t.rows.size());

    const auto col = [&](const char* name) { return t.col(name); };
    const auto c_code = col("bank_code"), c_country = col("country_code"), c_year = col("year"),
               c_ccy = col("currency"), c_branches = col("branches"), c_staff = col("staff"),
               c_staff_r = col("staff_r"), c_loans = col("loans"), c_loans_r = col("loans_r"),
               c_assets = col("assets"), c_assets_r = col("assets_r"), c_tier1 = col("tier1"),
               c_nic = col("nic"), c_nic_r = col("nic_r"), c_active = col("active_member");

    std::set<std::pair<std::string, int>> seen;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        const auto& r = t.rows[i];
        const std::size_t row = i + 1;
        const std::string where = path + " row " + std::to_string(row);
        BankYearRecord rec;
        try {
            rec.bank_code = r[c_code];
            rec.country_code = r[c_country];
            rec.year = static_cast<int>(parse_int(r[c_year], where));
            rec.currency = r[c_ccy];
            rec.branches = parse_double(r[c_branches], where);
            rec.staff = parse_double(r[c_staff], where);
            rec.staff_r = parse_double(r[c_staff_r], where);
            rec.loans = parse_double(r[c_loans], where);
            rec.loans_r = parse_double(r[c_loans_r], where);
            rec.assets = parse_double(r[c_assets], where);
            rec.assets_r = parse_double(r[c_assets_r], where);
            rec.tier1 = parse_double(r[c_tier1], where);
            rec.nic = field_or_nan(r[c_nic], where);
            rec.nic_r = field_or_nan(r[c_nic_r], where);
            rec.active_member = r[c_active] == "1" || r[c_active] == "true";
        } catch (const std::exception& e) {
            issues.push_back(e.what());
            continue;
        }

        auto complain = [&](const std::string& msg) {
            issues.push_back("row " + std::to_string(row) + " (" + rec.bank_code + "/" +
                             std::to_string(rec.year) + "): " + msg);
        };
        if (rec.year < kYearMin || rec.year > kYearMax) complain("year outside panel range");
        if (!seen.insert({rec.bank_code, rec.year}).second) complain("duplicate bank-year");
        if (rec.active_member) {
            if (!(rec.branches > 0.0)) complain("branches must be positive");
            if (!(rec.staff > 0.0)) complain("staff must be positive");
            if (!(rec.staff_r > 0.0)) complain("staff_r must be positive");
        }
        if (rec.staff_r > rec.staff) complain("staff_r exceeds staff");
        if (rec.loans_r > rec.loans) complain("loans_r exceeds loans");
        if (rec.assets_r > rec.assets) complain("assets_r exceeds assets");
        if (!std::isnan(rec.nic) && !std::isnan(rec.nic_r) && rec.nic_r > rec.nic)
            complain("nic_r exceeds nic");
        if (rec.loans < 0.0 || rec.loans_r < 0.0 || rec.assets < 0.0 || rec.assets_r < 0.0)
            complain("negative monetary value");

        // Convert monetary columns to EUR millions.
        for (double* v : {&rec.loans, &rec.loans_r, &rec.assets, &rec.assets_r, &rec.nic, &rec.nic_r}) {
            *v = fx_to_eur(*v, rec.currency, rec.year, rates, issues, row);
        }
        rec.currency = "EUR";
        out.push_back(rec);
    }

    // Membership windows: each bank's active years must be contiguous.
    std::map<std::string, std::set<int>> active_years;
    for (const auto& rec : out) {
        if (rec.active_member) active_years[rec.bank_code].insert(rec.year);
    }
    for (const auto& [code, years] : active_years) {
        if (static_cast<int>(years.size()) != *years.rbegin() - *years.begin() + 1) {
            issues.push_back("bank " + code + ": active years are not contiguous");
        }
    }

    if (!issues.empty()) throw DataValidationError(path, std::move(issues));
    return out;
}

std::vector<MacroRecord> load_macro(const std::string& path) {
    const CsvTable t = read_csv(path);
    std::vector<std::string> issues;
    std::vector<MacroRecord> out;
    const auto c_code = t.col("country_code"), c_year = t.col("year"),
               c_gdp = t.col("gdp_growth"), c_crisis = t.col("crisis"),
               c_gov = t.col("gover_effective"), c_reg = t.col("reg_quality"),
               c_law = t.col("rule_law"), c_cor = t.col("cont_corrup"), c_cpi = t.col("cpi");
    const bool has_name = t.has_col("country_name");
    std::set<std::pair<std::string, int>> seen;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        const auto& r = t.rows[i];
        const std::size_t row = i + 1;
        const std::string where = path + " row " + std::to_string(row);
        MacroRecord rec;
        try {
            rec.country_code = r[c_code];
            if (has_name) rec.country_name = r[t.col("country_name")];
            rec.year = static_cast<int>(parse_int(r[c_year], where));
            rec.gdp_growth = parse_double(r[c_gdp], where);
            rec.crisis = static_cast<int>(parse_int(r[c_crisis], where));
            rec.gover_effective = parse_double(r[c_gov], where);
            rec.reg_quality = parse_double(r[c_reg], where);
            rec.rule_law = parse_double(r[c_law], where);
            rec.cont_corrup = parse_double(r[c_cor], where);
            rec.cpi = parse_double(r[c_cpi], where);
        } catch (const std::exception& e) {
            issues.push_back(e.what());
            continue;
        }
        const int expected_crisis = (rec.year == 2007 || rec.year == 2008) ? 1 : 0;
        if (rec.crisis != expected_crisis) {
            issues.push_back("row " + std::to_string(row) + " (" + rec.country_code + "/" +
                             std::to_string(rec.year) + "): crisis flag must be " +
                             std::to_string(expected_crisis));
        }
        if (!seen.insert({rec.country_code, rec.year}).second) {
            issues.push_back("row " + std::to_string(row) + ": duplicate country-year");
        }
        out.push_back(rec);
    }
    if (!issues.empty()) throw DataValidationError(path, std::move(issues));
    return out;
}

std::vector<TextIndicatorRecord> load_text_indicators(const std::string& path) {
    const CsvTable t = read_csv(path);
    std::vector<std::string> issues;
    std::vector<TextIndicatorRecord> out;
    const auto c_code = t.col("bank_code"), c_year = t.col("year");
    const auto get = [&](const char* name) { return t.col(name); };
    const auto c_orisk = get("orisk"), c_risk = get("risk"), c_rman = get("rman"),
               c_ama = get("ama"), c_hres = get("hres"), c_emp = get("emp"), c_col = get("col"),
               c_workers = get("workers"), c_npag = get("npag");
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        const auto& r = t.rows[i];
        const std::size_t row = i + 1;
        const std::string where = path + " row " + std::to_string(row);
        TextIndicatorRecord rec;
        try {
            rec.bank_code = r[c_code];
            rec.year = static_cast<int>(parse_int(r[c_year], where));
            rec.orisk = parse_int(r[c_orisk], where);
            rec.risk = parse_int(r[c_risk], where);
            rec.rman = parse_int(r[c_rman], where);
            rec.ama = parse_int(r[c_ama], where);
            rec.hres = parse_int(r[c_hres], where);
            rec.emp = parse_int(r[c_emp], where);
            rec.col = parse_int(r[c_col], where);
            rec.workers = parse_int(r[c_workers], where);
            rec.npag = parse_int(r[c_npag], where);
        } catch (const std::exception& e) {
            issues.push_back(e.what());
            continue;
        }
        auto complain = [&](const std::string& msg) {
            issues.push_back("row " + std::to_string(row) + " (" + rec.bank_code + "/" +
                             std::to_string(rec.year) + "): " + msg);
        };
        for (long long v : {rec.orisk, rec.risk, rec.rman, rec.ama, rec.hres, rec.emp, rec.col}) {
            if (v < 0) { complain("negative term count"); break; }
        }
        if (rec.npag < 1) complain("npag must be >= 1");
        if (rec.workers != rec.emp + rec.col) complain("workers must equal emp + col");
        out.push_back(rec);
    }
    if (!issues.empty()) throw DataValidationError(path, std::move(issues));
    return out;
}

void check_macro_join(const std::vector<BankYearRecord>& panel,
                      const std::vector<MacroRecord>& macro) {
    std::set<std::pair<std::string, int>> have;
    for (const auto& m : macro) have.insert({m.country_code, m.year});
    std::vector<std::string> issues;
    std::set<std::pair<std::string, int>> reported;
    for (const auto& rec : panel) {
        if (!rec.active_member) continue;
        const std::pair<std::string, int> key{rec.country_code, rec.year};
        if (!have.count(key) && reported.insert(key).second) {
            issues.push_back("no macro data for country " + rec.country_code + " year " +
                             std::to_string(rec.year));
        }
    }
    if (!issues.empty()) throw DataValidationError("macro join", std::move(issues));
}

std::vector<std::string> bank_codes(const std::vector<BankYearRecord>& panel) {
    std::set<std::string> codes;
    for (const auto& rec : panel) codes.insert(rec.bank_code);
    return {codes.begin(), codes.end()};
}

std::pair<int, int> membership_window(const std::vector<BankYearRecord>& panel,
                                      const std::string& bank_code) {
    int lo = std::numeric_limits<int>::max(), hi = std::numeric_limits<int>::min();
    for (const auto& rec : panel) {
        if (rec.bank_code == bank_code && rec.active_member) {
            lo = std::min(lo, rec.year);
            hi = std::max(hi, rec.year);
        }
    }
    if (lo > hi) throw std::runtime_error("no active years for bank " + bank_code);
    return {lo, hi};
}

void write_panel_csv(const std::string& path, const std::vector<BankYearRecord>& records) {
    std::vector<std::vector<std::string>> rows;
    rows.reserve(records.size());
    for (const auto& r : records) {
        auto num = [](double v) { return std::isnan(v) ? std::string() : format_double(v); };
        rows.push_back({r.bank_code, r.country_code, std::to_string(r.year), r.currency,
                        format_double(r.branches), format_double(r.staff), format_double(r.staff_r),
                        format_double(r.loans), format_double(r.loans_r), format_double(r.assets),
                        format_double(r.assets_r), format_double(r.tier1), num(r.nic), num(r.nic_r),
                        r.active_member ? "1" : "0"});
    }
    write_csv(path,
              {"bank_code", "country_code", "year", "currency", "branches", "staff", "staff_r",
               "loans", "loans_r", "assets", "assets_r", "tier1", "nic", "nic_r", "active_member"},
              rows);
}

void write_macro_csv(const std::string& path, const std::vector<MacroRecord>& records) {
    std::vector<std::vector<std::string>> rows;
    rows.reserve(records.size());
    for (const auto& r : records) {
        rows.push_back({r.country_code, r.country_name, std::to_string(r.year),
                        format_double(r.gdp_growth), std::to_string(r.crisis),
                        format_double(r.gover_effective), format_double(r.reg_quality),
                        format_double(r.rule_law), format_double(r.cont_corrup),
                        format_double(r.cpi)});
    }
    write_csv(path,
              {"country_code", "country_name", "year", "gdp_growth", "crisis", "gover_effective",
               "reg_quality", "rule_law", "cont_corrup", "cpi"},
              rows);
}

void write_text_indicators_csv(const std::string& path,
                               const std::vector<TextIndicatorRecord>& records) {
    std::vector<std::vector<std::string>> rows;
    rows.reserve(records.size());
    for (const auto& r : records) {
        rows.push_back({r.bank_code, std::to_string(r.year), std::to_string(r.orisk),
                        std::to_string(r.risk), std::to_string(r.rman), std::to_string(r.ama),
                        std::to_string(r.hres), std::to_string(r.emp), std::to_string(r.col),
                        std::to_string(r.workers), std::to_string(r.npag)});
    }
    write_csv(path,
              {"bank_code", "year", "orisk", "risk", "rman", "ama", "hres", "emp", "col",
               "workers", "npag"},
              rows);
}

}  // namespace fraudsim
