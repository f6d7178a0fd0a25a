// SPDX-License-Identifier: Apache-2.0
#include "swipt/channel.hpp"

#include <cmath>

#include <fmt/format.h>

#include "swipt/errors.hpp"

namespace swipt {

ChannelParams::ChannelParams(double theta, double distance_m, double alpha)
    : theta_(theta), distance_m_(distance_m), alpha_(alpha),
      sigma_h_sq_(theta * std::pow(distance_m, -alpha))
{
    if (!(theta > 0.0) || !std::isfinite(theta)) throw InvalidArgument("theta must be positive");
    if (!(distance_m > 0.0) || !std::isfinite(distance_m)) throw InvalidArgument("distance must be positive");
    if (!(alpha >= 0.0) || !std::isfinite(alpha)) throw InvalidArgument("pathloss exponent must be >= 0");
}

EigenchannelSet::EigenchannelSet(std::vector<double> gains, double noise_power_w)
    : gains_(std::move(gains)), noise_power_w_(noise_power_w)
{
    if (gains_.empty()) throw InvalidArgument("EigenchannelSet: no gains");
    if (!(noise_power_w_ > 0.0) || !std::isfinite(noise_power_w_)) {
        throw InvalidArgument("EigenchannelSet: noise power must be positive");
    }
    for (std::size_t k = 0; k < gains_.size(); ++k) {
        if (!(gains_[k] > 0.0) || !std::isfinite(gains_[k])) {
            throw InvalidArgument(fmt::format("EigenchannelSet: gain {} is not positive", k));
        }
        if (k > 0 && gains_[k] > gains_[k - 1]) {
            throw InvalidArgument(fmt::format("EigenchannelSet: gains not descending at {}", k));
        }
    }
}

ComplexMatrix generate_channel(std::size_t n_r, std::size_t n_t, const ChannelParams& params,
                               RngStream& rng)
{
    if (n_r == 0 || n_t == 0) throw InvalidArgument("generate_channel: antenna counts must be >= 1");
    std::vector<Complex> entries(n_r * n_t);
    for (auto& z : entries) z = rng.complex_normal(params.sigma_h_sq());
    return ComplexMatrix(n_r, n_t, std::move(entries));
}

EigenchannelSet eigenchannels(const ComplexMatrix& h, double noise_power_w)
{
    const SvdResult svd = reduced_svd(h);
    std::vector<double> gains(svd.singular_values.size());
    for (std::size_t k = 0; k < gains.size(); ++k) {
        const double s = svd.singular_values[k];
        if (s == 0.0) {
            throw DegenerateChannel(
                fmt::format("channel is rank deficient: eigenchannel {} has zero gain", k + 1), k);
        }
        gains[k] = s * s;
    }
    return EigenchannelSet(std::move(gains), noise_power_w);
}

} // namespace swipt
