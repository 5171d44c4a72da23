#pragma once

#include <map>
#include <string>
#include <vector>

namespace fraudsim {

/// Minimal TOML subset used for run configuration and calibrated parameter
/// files: dotted table headers, string/bool/integer/float scalars, flat arrays
/// of scalars, and # comments. Values are kept as typed variants with their
/// table path flattened to "table.sub.key".
struct TomlValue {
    enum class Kind { String, Bool, Int, Float, Array };
    Kind kind = Kind::String;
    std::string str;
    bool boolean = false;
    long long integer = 0;
    double number = 0.0;
    std::vector<TomlValue> array;

    double as_number() const;  // Int or Float
};

class TomlDoc {
public:
    static TomlDoc parse_file(const std::string& path);
    static TomlDoc parse_string(const std::string& text, const std::string& origin = "<string>");

    bool has(const std::string& key) const;
    const TomlValue& at(const std::string& key) const;  // throws with key name

    std::string get_string(const std::string& key) const;
    std::string get_string(const std::string& key, const std::string& fallback) const;
    double get_number(const std::string& key) const;
    double get_number(const std::string& key, double fallback) const;
    long long get_int(const std::string& key) const;
    long long get_int(const std::string& key, long long fallback) const;
    bool get_bool(const std::string& key, bool fallback) const;

    /// All keys that start with the given prefix followed by a dot.
    std::vector<std::string> keys_with_prefix(const std::string& prefix) const;

    void set_string(const std::string& key, const std::string& v);
    void set_number(const std::string& key, double v);
    void set_int(const std::string& key, long long v);
    void set_bool(const std::string& key, bool v);

    /// Serializes grouped by table, keys sorted within each table; parsing the
    /// result yields an equivalent document.
    std::string serialize() const;
    void write_file(const std::string& path) const;

    const std::map<std::string, TomlValue>& entries() const { return entries_; }

private:
    std::map<std::string, TomlValue> entries_;
};

}  // namespace fraudsim
