#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace fraudsim {

/// One parsed CSV file: a header row plus data rows, all fields as strings.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    /// Column index for a header name; throws std::runtime_error naming the
    /// missing column.
    std::size_t col(const std::string& name) const;
    bool has_col(const std::string& name) const;
};

/// Reads a UTF-8 CSV file with a header row. Supports quoted fields with
/// embedded commas and doubled quotes; decimal point only.
CsvTable read_csv(const std::string& path);

/// Error carrying the file and 1-based data-row address of a bad record.
class CsvDataError : public std::runtime_error {
public:
    CsvDataError(const std::string& path, std::size_t row, const std::string& what);
};

double parse_double(const std::string& s, const std::string& context);
long long parse_int(const std::string& s, const std::string& context);

/// Writes rows of preformatted cells; quoting applied when a cell needs it.
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

/// Deterministic shortest round-trip formatting for doubles (%.17g trimmed).
std::string format_double(double v);

}  // namespace fraudsim
