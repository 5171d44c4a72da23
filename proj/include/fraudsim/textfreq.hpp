#pragma once

#include <string>
#include <vector>

#include "fraudsim/panel.hpp"

namespace fraudsim {

/// Case-insensitive word-sequence counts of the tracked report phrases.
/// Matching is on whole words, so line breaks and other whitespace inside a
/// phrase do not matter.
struct TermCounts {
    long long orisk = 0;  // "operational risk"
    long long risk = 0;   // "risk"
    long long rman = 0;   // "risk management"
    long long ama = 0;    // "AMA"
    long long hres = 0;   // "human resource"
    long long emp = 0;    // "employee"
    long long col = 0;    // "colleague"
};

TermCounts count_terms(const std::string& text);

/// Walks corpus_dir/<bank_code>/<year>.txt with a <year>.pages sidecar holding
/// the page count, and produces one indicator record per report. Throws when a
/// sidecar is missing or holds anything but a positive integer.
std::vector<TextIndicatorRecord> term_frequency_indicators(const std::string& corpus_dir);

}  // namespace fraudsim
