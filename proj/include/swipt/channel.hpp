// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "swipt/linalg.hpp"
#include "swipt/random.hpp"

namespace swipt {

/// Distance-based pathloss: entry variance theta * d^-alpha.
class ChannelParams
{
  public:
    ChannelParams(double theta, double distance_m, double alpha);

    double theta() const noexcept { return theta_; }
    double distance_m() const noexcept { return distance_m_; }
    double alpha() const noexcept { return alpha_; }
    double sigma_h_sq() const noexcept { return sigma_h_sq_; }

  private:
    double theta_;
    double distance_m_;
    double alpha_;
    double sigma_h_sq_;
};

/// Squared singular values of a channel, strongest first, plus the noise
/// power they are measured against. This is all the solvers ever see.
class EigenchannelSet
{
  public:
    /// Throws InvalidArgument unless gains are nonempty, finite, strictly
    /// positive and nonincreasing and noise_power_w > 0.
    EigenchannelSet(std::vector<double> gains, double noise_power_w);

    std::span<const double> gains() const noexcept { return gains_; }
    double gain(std::size_t k) const { return gains_.at(k); }
    std::size_t size() const noexcept { return gains_.size(); }
    double noise_power() const noexcept { return noise_power_w_; }

  private:
    std::vector<double> gains_;
    double noise_power_w_;
};

/// i.i.d. ZMCSCG n_r x n_t channel with per-entry variance sigma_h_sq.
ComplexMatrix generate_channel(std::size_t n_r, std::size_t n_t, const ChannelParams& params,
                               RngStream& rng);

/// Eigenchannel gains of h. Throws DegenerateChannel if h is rank deficient.
EigenchannelSet eigenchannels(const ComplexMatrix& h, double noise_power_w);

} // namespace swipt
