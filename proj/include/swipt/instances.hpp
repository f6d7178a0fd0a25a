// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>

#include "swipt/channel.hpp"
#include "swipt/random.hpp"

namespace swipt {

/// Random eigenchannel set of rank r drawn from the distance-pathloss
/// Rayleigh model (n_r = r receive antennas, n_t in [r, r+2]).
EigenchannelSet random_eigenchannels(RngStream& rng, std::size_t r, double noise_w,
                                     const ChannelParams& params = ChannelParams(0.1, 4.0, 2.5));

/// Uniform draw on (lo, hi), never returning either endpoint.
double uniform_between(RngStream& rng, double lo, double hi);

} // namespace swipt
