#include "archtest/rng.hpp"

#include <cmath>
#include <numbers>

namespace archtest {

namespace {

// SplitMix64 finalizer (Steele, Lea & Flood 2014 / Vigna).
std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

}  // namespace

RngStream::RngStream(std::uint64_t base_seed, std::uint64_t stream_id)
    : base_seed_(base_seed), stream_id_(stream_id) {
    // Hash the pair into the initial state so that neighbouring seeds or
    // stream ids do not produce correlated sequences.
    state_ = mix64(mix64(base_seed) ^ mix64(stream_id ^ 0x6A09E667F3BCC909ULL));
}

std::uint64_t RngStream::next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double RngStream::next_uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::next_normal() {
    if (has_spare_normal_) {
        has_spare_normal_ = false;
        return spare_normal_;
    }
    // (u + 0.5) * 2^-53 lies strictly inside (0, 1), keeping log() finite.
    const double u1 = (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    const double u2 = (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    spare_normal_ = r * std::sin(theta);
    has_spare_normal_ = true;
    return r * std::cos(theta);
}

std::vector<double> standard_normal_draws(RngStream& rng, std::size_t n) {
    std::vector<double> draws(n);
    for (std::size_t i = 0; i < n; ++i) {
        draws[i] = rng.next_normal();
    }
    return draws;
}

std::uint64_t stream_id_for(std::string_view cell_tag, std::uint64_t rep) {
    return mix64(fnv1a(cell_tag)) + rep;
}

}  // namespace archtest
