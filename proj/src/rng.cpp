#include "fraudsim/rng.hpp"

#include <cmath>

#include "fraudsim/stats.hpp"

namespace fraudsim {

std::uint64_t mix64(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
}

namespace {
constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
}

RngStream::RngStream(std::uint64_t master_seed, std::uint64_t bank_id, std::uint64_t history) {
    // Two mixing rounds keep the (seed, bank, history) coordinates from
    // interacting linearly.
    std::uint64_t k = mix64(master_seed + kGolden);
    k = mix64(k ^ (bank_id + 0x100000001b3ULL));
    k = mix64(k ^ (history + 0xd6e8feb86659fd93ULL));
    key_ = k;
}

std::uint64_t RngStream::next_u64() {
    ++counter_;
    return mix64(key_ + counter_ * kGolden);
}

double RngStream::uniform() {
    // 53 random bits, offset by half an ulp so the result is strictly in (0,1).
    const std::uint64_t bits = next_u64() >> 11;
    return (static_cast<double>(bits) + 0.5) * (1.0 / 9007199254740992.0);
}

double RngStream::normal() {
    return normal_inv_cdf(uniform());
}

double RngStream::exponential() {
    return -std::log(uniform());
}

}  // namespace fraudsim
