#pragma once

#include <cstdint>

namespace rmtlab::rng {

/// Counter-based pseudorandom stream. Output element i of stream (seed, k)
/// is a fixed mixing function of (seed, k, i), so any draw is reproducible
/// from the seed and stream index alone; disjoint stream indices give
/// statistically independent sequences.
class Stream {
  public:
    Stream(std::uint64_t seed, std::uint64_t stream_index);

    std::uint64_t next_u64();

    /// Uniform on the open interval (0, 1).
    double next_unit();

    /// Standard normal deviate (Box-Muller; the paired value is cached).
    double next_gaussian();

  private:
    std::uint64_t counter_;
    double cached_gaussian_ = 0.0;
    bool has_cached_ = false;
};

}  // namespace rmtlab::rng
