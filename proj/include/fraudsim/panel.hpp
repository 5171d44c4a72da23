#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace fraudsim {

/// One bank-year of observable panel indicators. Monetary fields are EUR
/// millions after ingestion; nic/nic_r may be NaN when the source column is
/// empty.
struct BankYearRecord {
    std::string bank_code;
    std::string country_code;
    int year = 0;
    std::string currency;
    double branches = 0.0;
    double staff = 0.0;
    double staff_r = 0.0;
    double loans = 0.0;
    double loans_r = 0.0;
    double assets = 0.0;
    double assets_r = 0.0;
    double tier1 = 0.0;
    double nic = 0.0;
    double nic_r = 0.0;
    bool active_member = true;
};

struct MacroRecord {
    std::string country_code;
    std::string country_name;
    int year = 0;
    double gdp_growth = 0.0;
    int crisis = 0;
    double gover_effective = 0.0;
    double reg_quality = 0.0;
    double rule_law = 0.0;
    double cont_corrup = 0.0;
    double cpi = 0.0;
};

struct TextIndicatorRecord {
    std::string bank_code;
    int year = 0;
    long long orisk = 0;
    long long risk = 0;
    long long rman = 0;
    long long ama = 0;
    long long hres = 0;
    long long emp = 0;
    long long col = 0;
    long long workers = 0;
    long long npag = 1;

    double orisk_ratio() const { return static_cast<double>(orisk) / static_cast<double>(npag); }
    double hr_ratio() const { return static_cast<double>(hres + workers) / static_cast<double>(npag); }
};

/// Validation failure carrying every row-addressed issue found in a file.
class DataValidationError : public std::runtime_error {
public:
    DataValidationError(const std::string& path, std::vector<std::string> issues);
    const std::vector<std::string>& issues() const { return issues_; }

private:
    std::vector<std::string> issues_;
};

/// currency -> year -> EUR per unit of local currency (millions scale cancels).
using FxRates = std::map<std::string, std::map<int, double>>;

FxRates load_fx_rates(const std::string& path);

/// Loads and validates the bank panel, converting monetary columns to EUR
/// millions. Requires every non-EUR (currency, year) to be present in rates.
std::vector<BankYearRecord> load_panel(const std::string& path, const FxRates& rates);

std::vector<MacroRecord> load_macro(const std::string& path);

std::vector<TextIndicatorRecord> load_text_indicators(const std::string& path);

/// Checks that every active bank-year has a macro row for its headquarters
/// country; throws DataValidationError listing unknown (country, year) pairs.
void check_macro_join(const std::vector<BankYearRecord>& panel,
                      const std::vector<MacroRecord>& macro);

/// Sorted unique bank codes.
std::vector<std::string> bank_codes(const std::vector<BankYearRecord>& panel);

/// Active-year window of one bank (inclusive); throws when the bank is absent.
std::pair<int, int> membership_window(const std::vector<BankYearRecord>& panel,
                                      const std::string& bank_code);

void write_panel_csv(const std::string& path, const std::vector<BankYearRecord>& records);
void write_macro_csv(const std::string& path, const std::vector<MacroRecord>& records);
void write_text_indicators_csv(const std::string& path,
                               const std::vector<TextIndicatorRecord>& records);

}  // namespace fraudsim
