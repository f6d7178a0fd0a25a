// SPDX-License-Identifier: Apache-2.0
#include "swipt/instances.hpp"

namespace swipt {

EigenchannelSet random_eigenchannels(RngStream& rng, std::size_t r, double noise_w, const ChannelParams& params)
{
    const std::size_t n_t = r + static_cast<std::size_t>(rng.next_u64() % 3);
    return eigenchannels(generate_channel(r, n_t, params, rng), noise_w);
}

double uniform_between(RngStream& rng, double lo, double hi)
{
    return lo + (hi - lo) * rng.uniform_open_zero() * (1.0 - 0x1.0p-53);
}

} // namespace swipt
