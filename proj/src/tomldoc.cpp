#include "fraudsim/tomldoc.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "fraudsim/csv.hpp"

namespace fraudsim {

double TomlValue::as_number() const {
    if (kind == Kind::Float) return number;
    if (kind == Kind::Int) return static_cast<double>(integer);
    throw std::runtime_error("TOML value is not numeric");
}

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

// Strips a trailing comment that is not inside a quoted string.
std::string strip_comment(const std::string& s) {
    bool quoted = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '"') quoted = !quoted;
        else if (s[i] == '#' && !quoted) return s.substr(0, i);
    }
    return s;
}

TomlValue parse_scalar(const std::string& raw, const std::string& where) {
    TomlValue v;
    const std::string s = trim(raw);
    if (s.empty()) throw std::runtime_error(where + ": empty value");
    if (s.front() == '"') {
        if (s.size() < 2 || s.back() != '"') throw std::runtime_error(where + ": unterminated string");
        v.kind = TomlValue::Kind::String;
        std::string out;
        for (std::size_t i = 1; i + 1 < s.size(); ++i) {
            if (s[i] == '\\' && i + 2 < s.size()) {
                ++i;
                switch (s[i]) {
                    case 'n': out += '\n'; break;
                    case 't': out += '\t'; break;
                    case '"': out += '"'; break;
                    case '\\': out += '\\'; break;
                    default: out += s[i];
                }
            } else {
                out += s[i];
            }
        }
        v.str = out;
        return v;
    }
    if (s == "true" || s == "false") {
        v.kind = TomlValue::Kind::Bool;
        v.boolean = (s == "true");
        return v;
    }
    const bool looks_float = s.find_first_of(".eE") != std::string::npos ||
                             s == "inf" || s == "-inf" || s == "nan";
    if (!looks_float) {
        try {
            v.kind = TomlValue::Kind::Int;
            v.integer = parse_int(s, where);
            return v;
        } catch (const std::exception&) {
            // fall through to float
        }
    }
    v.kind = TomlValue::Kind::Float;
    v.number = parse_double(s, where);
    return v;
}

TomlValue parse_value(const std::string& raw, const std::string& where) {
    const std::string s = trim(raw);
    if (!s.empty() && s.front() == '[') {
        if (s.back() != ']') throw std::runtime_error(where + ": unterminated array");
        TomlValue v;
        v.kind = TomlValue::Kind::Array;
        std::string body = s.substr(1, s.size() - 2);
        std::string item;
        bool quoted = false;
        for (char c : body) {
            if (c == '"') quoted = !quoted;
            if (c == ',' && !quoted) {
                if (!trim(item).empty()) v.array.push_back(parse_scalar(item, where));
                item.clear();
            } else {
                item += c;
            }
        }
        if (!trim(item).empty()) v.array.push_back(parse_scalar(item, where));
        return v;
    }
    return parse_scalar(s, where);
}

std::string format_value(const TomlValue& v) {
    switch (v.kind) {
        case TomlValue::Kind::String: {
            std::string out = "\"";
            for (char c : v.str) {
                if (c == '"' || c == '\\') out += '\\';
                out += c;
            }
            return out + "\"";
        }
        case TomlValue::Kind::Bool:
            return v.boolean ? "true" : "false";
        case TomlValue::Kind::Int:
            return std::to_string(v.integer);
        case TomlValue::Kind::Float: {
            std::string s = format_double(v.number);
            // A bare integer literal would parse back as Int.
            if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
            return s;
        }
        case TomlValue::Kind::Array: {
            std::string out = "[";
            for (std::size_t i = 0; i < v.array.size(); ++i) {
                if (i) out += ", ";
                out += format_value(v.array[i]);
            }
            return out + "]";
        }
    }
    return "";
}

}  // namespace

TomlDoc TomlDoc::parse_string(const std::string& text, const std::string& origin) {
    TomlDoc doc;
    std::istringstream in(text);
    std::string line;
    std::string table;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string where = origin + ":" + std::to_string(lineno);
        std::string s = trim(strip_comment(line));
        if (s.empty()) continue;
        if (s.front() == '[') {
            if (s.back() != ']') throw std::runtime_error(where + ": bad table header");
            table = trim(s.substr(1, s.size() - 2));
            if (table.empty()) throw std::runtime_error(where + ": empty table name");
            continue;
        }
        const auto eq = s.find('=');
        if (eq == std::string::npos) throw std::runtime_error(where + ": expected key = value");
        std::string key = trim(s.substr(0, eq));
        if (key.empty()) throw std::runtime_error(where + ": empty key");
        if (!table.empty()) key = table + "." + key;
        doc.entries_[key] = parse_value(s.substr(eq + 1), where);
    }
    return doc;
}

TomlDoc TomlDoc::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_string(ss.str(), path);
}

bool TomlDoc::has(const std::string& key) const { return entries_.count(key) > 0; }

const TomlValue& TomlDoc::at(const std::string& key) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) throw std::runtime_error("missing config key '" + key + "'");
    return it->second;
}

std::string TomlDoc::get_string(const std::string& key) const {
    const auto& v = at(key);
    if (v.kind != TomlValue::Kind::String) throw std::runtime_error("config key '" + key + "' is not a string");
    return v.str;
}

std::string TomlDoc::get_string(const std::string& key, const std::string& fallback) const {
    return has(key) ? get_string(key) : fallback;
}

double TomlDoc::get_number(const std::string& key) const { return at(key).as_number(); }

double TomlDoc::get_number(const std::string& key, double fallback) const {
    return has(key) ? get_number(key) : fallback;
}

long long TomlDoc::get_int(const std::string& key) const {
    const auto& v = at(key);
    if (v.kind == TomlValue::Kind::Int) return v.integer;
    throw std::runtime_error("config key '" + key + "' is not an integer");
}

long long TomlDoc::get_int(const std::string& key, long long fallback) const {
    return has(key) ? get_int(key) : fallback;
}

bool TomlDoc::get_bool(const std::string& key, bool fallback) const {
    if (!has(key)) return fallback;
    const auto& v = at(key);
    if (v.kind != TomlValue::Kind::Bool) throw std::runtime_error("config key '" + key + "' is not a boolean");
    return v.boolean;
}

std::vector<std::string> TomlDoc::keys_with_prefix(const std::string& prefix) const {
    std::vector<std::string> out;
    const std::string p = prefix + ".";
    for (const auto& [k, v] : entries_) {
        if (k.rfind(p, 0) == 0) out.push_back(k);
    }
    return out;
}

void TomlDoc::set_string(const std::string& key, const std::string& v) {
    TomlValue t;
    t.kind = TomlValue::Kind::String;
    t.str = v;
    entries_[key] = t;
}

void TomlDoc::set_number(const std::string& key, double v) {
    TomlValue t;
    t.kind = TomlValue::Kind::Float;
    t.number = v;
    entries_[key] = t;
}

void TomlDoc::set_int(const std::string& key, long long v) {
    TomlValue t;
    t.kind = TomlValue::Kind::Int;
    t.integer = v;
    entries_[key] = t;
}

void TomlDoc::set_bool(const std::string& key, bool v) {
    TomlValue t;
    t.kind = TomlValue::Kind::Bool;
    t.boolean = v;
    entries_[key] = t;
}

std::string TomlDoc::serialize() const {
    // Root keys must precede any table header; std::map ordering then keeps
    // each dotted table contiguous.
    std::ostringstream out;
    bool wrote_root = false;
    for (const auto& [key, value] : entries_) {
        if (key.find('.') == std::string::npos) {
            out << key << " = " << format_value(value) << '\n';
            wrote_root = true;
        }
    }
    std::map<std::string, std::vector<std::pair<std::string, const TomlValue*>>> tables;
    for (const auto& [key, value] : entries_) {
        const auto dot = key.rfind('.');
        if (dot == std::string::npos) continue;
        tables[key.substr(0, dot)].emplace_back(key.substr(dot + 1), &value);
    }
    bool first_table = true;
    for (const auto& [table, kvs] : tables) {
        if (!first_table || wrote_root) out << '\n';
        first_table = false;
        out << '[' << table << "]\n";
        for (const auto& [leaf, value] : kvs) {
            out << leaf << " = " << format_value(*value) << '\n';
        }
    }
    return out.str();
}

void TomlDoc::write_file(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << serialize();
}

}  // namespace fraudsim
