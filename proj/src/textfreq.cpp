#include "fraudsim/textfreq.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fs = std::filesystem;

namespace fraudsim {

namespace {

std::vector<std::string> tokenize_lower(const std::string& text) {
    std::vector<std::string> tokens;
    std::string cur;
    for (unsigned char c : text) {
        if (std::isalnum(c) || c >= 0x80) {
            cur += static_cast<char>(std::tolower(c));
        } else if (!cur.empty()) {
            tokens.push_back(std::move(cur));
            cur.clear();
        }
    }
    if (!cur.empty()) tokens.push_back(std::move(cur));
    return tokens;
}

long long count_seq(const std::vector<std::string>& tokens,
                    const std::vector<std::string>& phrase) {
    if (phrase.empty() || tokens.size() < phrase.size()) return 0;
    long long n = 0;
    for (std::size_t i = 0; i + phrase.size() <= tokens.size(); ++i) {
        bool hit = true;
        for (std::size_t j = 0; j < phrase.size(); ++j) {
            if (tokens[i + j] != phrase[j]) { hit = false; break; }
        }
        if (hit) ++n;
    }
    return n;
}

}  // namespace

TermCounts count_terms(const std::string& text) {
    const auto tokens = tokenize_lower(text);
    TermCounts c;
    c.orisk = count_seq(tokens, {"operational", "risk"});
    c.risk = count_seq(tokens, {"risk"});
    c.rman = count_seq(tokens, {"risk", "management"});
    c.ama = count_seq(tokens, {"ama"});
    c.hres = count_seq(tokens, {"human", "resource"});
    c.emp = count_seq(tokens, {"employee"});
    c.col = count_seq(tokens, {"colleague"});
    return c;
}

std::vector<TextIndicatorRecord> term_frequency_indicators(const std::string& corpus_dir) {
    if (!fs::is_directory(corpus_dir)) {
        throw std::runtime_error("corpus directory not found: " + corpus_dir);
    }
    std::vector<TextIndicatorRecord> out;
    std::vector<fs::path> bank_dirs;
    for (const auto& entry : fs::directory_iterator(corpus_dir)) {
        if (entry.is_directory()) bank_dirs.push_back(entry.path());
    }
    std::sort(bank_dirs.begin(), bank_dirs.end());
    for (const auto& dir : bank_dirs) {
        std::vector<fs::path> reports;
        for (const auto& entry : fs::directory_iterator(dir)) {
            if (entry.path().extension() == ".txt") reports.push_back(entry.path());
        }
        std::sort(reports.begin(), reports.end());
        for (const auto& report : reports) {
            std::ifstream in(report);
            if (!in) throw std::runtime_error("cannot open " + report.string());
            std::ostringstream ss;
            ss << in.rdbuf();

            fs::path sidecar = report;
            sidecar.replace_extension(".pages");
            std::ifstream pages_in(sidecar);
            if (!pages_in) throw std::runtime_error("missing page-count sidecar " + sidecar.string());
            long long npag = 0;
            if (!(pages_in >> npag) || npag < 1) {
                throw std::runtime_error("bad page count in " + sidecar.string());
            }

            TextIndicatorRecord rec;
            rec.bank_code = dir.filename().string();
            try {
                rec.year = std::stoi(report.stem().string());
            } catch (const std::exception&) {
                throw std::runtime_error("report name is not a year: " + report.string());
            }
            const TermCounts c = count_terms(ss.str());
            rec.orisk = c.orisk;
            rec.risk = c.risk;
            rec.rman = c.rman;
            rec.ama = c.ama;
            rec.hres = c.hres;
            rec.emp = c.emp;
            rec.col = c.col;
            rec.workers = c.emp + c.col;
            rec.npag = npag;
            out.push_back(rec);
        }
    }
    return out;
}

}  // namespace fraudsim
