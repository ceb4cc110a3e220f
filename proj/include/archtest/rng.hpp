#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace archtest {

/**
 * Splittable random stream built on the SplitMix64 generator.
 *
 * A stream is fully identified by (base_seed, stream_id): the same pair
 * always replays the identical sequence of draws, and distinct stream ids
 * give statistically independent sequences. Monte Carlo replication r owns
 * its own stream, so results never depend on thread scheduling.
 */
class RngStream {
public:
    RngStream(std::uint64_t base_seed, std::uint64_t stream_id);

    std::uint64_t next_u64();

    /// Uniform draw in [0, 1).
    double next_uniform();

    /// Standard normal draw (Box-Muller; pairs are cached).
    double next_normal();

    std::uint64_t base_seed() const { return base_seed_; }
    std::uint64_t stream_id() const { return stream_id_; }

private:
    std::uint64_t base_seed_;
    std::uint64_t stream_id_;
    std::uint64_t state_;
    double spare_normal_ = 0.0;
    bool has_spare_normal_ = false;
};

/// n i.i.d. N(0,1) draws; advances the stream. n = 0 yields an empty vector.
std::vector<double> standard_normal_draws(RngStream& rng, std::size_t n);

/// Stable stream id for replication `rep` of a named Monte Carlo cell.
std::uint64_t stream_id_for(std::string_view cell_tag, std::uint64_t rep);

}  // namespace archtest
