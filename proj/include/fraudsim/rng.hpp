#pragma once

#include <cstdint>

namespace fraudsim {

/// 64-bit finalizer (splitmix64 constants). Bijective, so distinct inputs map
/// to distinct outputs.
std::uint64_t mix64(std::uint64_t x);

/// Counter-based random stream keyed by (master seed, bank id, history index).
///
/// Every draw is a pure function of (key, counter), so a stream can be
/// replayed from its seed and streams for distinct key tuples never share
/// state. Normal variates use the inverse CDF, keeping draw sequences
/// identical across platforms and worker counts.
class RngStream {
public:
    RngStream(std::uint64_t master_seed, std::uint64_t bank_id, std::uint64_t history);

    std::uint64_t next_u64();
    /// Uniform on the open interval (0,1).
    double uniform();
    /// Standard normal.
    double normal();
    /// Exponential with mean 1.
    double exponential();

    std::uint64_t key() const { return key_; }
    std::uint64_t draws() const { return counter_; }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace fraudsim
