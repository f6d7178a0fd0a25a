// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>

#include "swipt/linalg.hpp"

namespace swipt {

/// Seedable random source with explicit substreams.
///
/// Every Monte Carlo trial gets its own stream derived from
/// (master seed, stream index), so results do not depend on which worker
/// thread ran the trial. Sampling is implemented here rather than through
/// std:: distributions, whose output is implementation-defined.
class RngStream
{
  public:
    explicit RngStream(std::uint64_t seed);

    /// Independent stream `index` of the family rooted at `master_seed`.
    static RngStream substream(std::uint64_t master_seed, std::uint64_t index);

    std::uint64_t next_u64() { return engine_(); }
    /// Uniform on [0, 1) with 53 random bits.
    double uniform();
    /// Uniform on (0, 1].
    double uniform_open_zero();
    /// Standard normal via Box-Muller (second variate cached).
    double normal();
    /// Zero-mean circularly symmetric complex Gaussian with E|z|^2 = variance.
    Complex complex_normal(double variance);

  private:
    std::mt19937_64 engine_;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

/// SplitMix64 finalizer; used to decorrelate seeds.
std::uint64_t mix64(std::uint64_t x) noexcept;

} // namespace swipt
