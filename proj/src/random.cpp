// SPDX-License-Identifier: Apache-2.0
#include "swipt/random.hpp"

#include <cmath>
#include <numbers>

namespace swipt {

std::uint64_t mix64(std::uint64_t x) noexcept
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

RngStream::RngStream(std::uint64_t seed) : engine_(mix64(seed)) {}

RngStream RngStream::substream(std::uint64_t master_seed, std::uint64_t index)
{
    // Two rounds so that neighbouring (seed, index) pairs land far apart.
    return RngStream(mix64(mix64(master_seed) ^ mix64(index + 0x632be59bd9b4e019ULL)));
}

double RngStream::uniform()
{
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RngStream::uniform_open_zero()
{
    return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
}

double RngStream::normal()
{
    if (has_cached_) {
        has_cached_ = false;
        return cached_;
    }
    const double radius = std::sqrt(-2.0 * std::log(uniform_open_zero()));
    const double angle = 2.0 * std::numbers::pi * uniform();
    cached_ = radius * std::sin(angle);
    has_cached_ = true;
    return radius * std::cos(angle);
}

Complex RngStream::complex_normal(double variance)
{
    const double sd = std::sqrt(variance / 2.0);
    const double re = normal();
    const double im = normal();
    return {sd * re, sd * im};
}

} // namespace swipt
