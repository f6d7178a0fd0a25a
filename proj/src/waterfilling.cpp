// SPDX-License-Identifier: Apache-2.0
#include "swipt/waterfilling.hpp"

#include <cmath>

#include <fmt/format.h>

#include "swipt/errors.hpp"

namespace swipt {

namespace {

void check_gains(std::span<const double> gains, const char* who)
{
    for (std::size_t k = 0; k < gains.size(); ++k) {
        if (!(gains[k] > 0.0) || !std::isfinite(gains[k])) {
            throw InvalidArgument(fmt::format("{}: gain {} is not positive", who, k));
        }
        if (k > 0 && gains[k] > gains[k - 1]) {
            throw InvalidArgument(fmt::format("{}: gains not in descending order at {}", who, k));
        }
    }
}

} // namespace

WaterfillResult waterfill_budget(std::span<const double> gains, double noise_power_w, double budget_w)
{
    if (gains.empty()) throw InvalidArgument("waterfill_budget: empty channel list");
    if (!(budget_w > 0.0) || !std::isfinite(budget_w)) throw InvalidArgument("waterfill_budget: budget must be positive");
    if (!(noise_power_w > 0.0)) throw InvalidArgument("waterfill_budget: noise power must be positive");
    check_gains(gains, "waterfill_budget");

    const std::size_t n = gains.size();
    std::size_t active = 1;
    double level = budget_w + noise_power_w / gains[0];
    for (std::size_t omega = n; omega >= 1; --omega) {
        double depth_sum = 0.0;
        for (std::size_t j = 0; j < omega; ++j) depth_sum += noise_power_w / gains[j];
        const double candidate = (budget_w + depth_sum) / static_cast<double>(omega);
        if (candidate > noise_power_w / gains[omega - 1]) {
            active = omega;
            level = candidate;
            break;
        }
    }

    WaterfillResult out{std::vector<double>(n, 0.0), level, active};
    for (std::size_t j = 0; j < active; ++j) out.powers[j] = level - noise_power_w / gains[j];
    return out;
}

double sum_rate(std::span<const double> gains, std::span<const double> powers, double noise_power_w)
{
    if (gains.size() != powers.size()) throw InvalidArgument("sum_rate: length mismatch");
    double rate = 0.0;
    for (std::size_t j = 0; j < gains.size(); ++j) {
        rate += std::log2(1.0 + powers[j] * gains[j] / noise_power_w);
    }
    return rate;
}

double feasibility_rate_max(const EigenchannelSet& chans, double budget_w)
{
    if (chans.size() < 2) return 0.0;
    const auto id_gains = chans.gains().first(chans.size() - 1);
    const WaterfillResult wf = waterfill_budget(id_gains, chans.noise_power(), budget_w);
    return sum_rate(id_gains, wf.powers, chans.noise_power());
}

double MinPowerWfResult::power_of(std::size_t original_index) const
{
    for (const auto& cp : id_powers) {
        if (cp.index == original_index) return cp.power;
    }
    throw InvalidArgument(fmt::format("channel {} is not an information channel", original_index));
}

std::vector<IdChannel> id_channels(const EigenchannelSet& chans, std::optional<std::size_t> excluded)
{
    std::vector<IdChannel> out;
    out.reserve(chans.size());
    for (std::size_t k = 0; k < chans.size(); ++k) {
        if (excluded && *excluded == k) continue;
        out.push_back({k, chans.gain(k)});
    }
    return out;
}

MinPowerWfResult min_power_rate_wf(std::span<const IdChannel> channels, double noise_power_w,
                                   double rate_req)
{
    if (!(rate_req >= 0.0) || !std::isfinite(rate_req)) {
        throw InvalidArgument("min_power_rate_wf: rate requirement must be finite and >= 0");
    }
    if (!(noise_power_w > 0.0)) throw InvalidArgument("min_power_rate_wf: noise power must be positive");
    std::vector<double> gains(channels.size());
    for (std::size_t k = 0; k < channels.size(); ++k) gains[k] = channels[k].gain;
    check_gains(gains, "min_power_rate_wf");

    MinPowerWfResult out;
    out.id_powers.reserve(channels.size());
    for (const auto& ch : channels) out.id_powers.push_back({ch.index, 0.0});
    if (rate_req == 0.0) return out;
    if (channels.empty()) throw Infeasible("min_power_rate_wf: positive rate with no information channels");

    // log2 of the gain-ratio product for each candidate step, scanned from the
    // weakest channel upwards.
    std::size_t active = 0;
    for (std::size_t k = channels.size(); k >= 1; --k) {
        double log_ratio = 0.0;
        for (std::size_t j = 0; j < k; ++j) log_ratio += std::log2(gains[j] / gains[k - 1]);
        if (rate_req > log_ratio) {
            active = k;
            break;
        }
    }
    // k = 1 always passes (empty product, rate_req > 0).

    double log_gain_sum = 0.0;
    for (std::size_t j = 0; j < active; ++j) log_gain_sum += std::log2(gains[j]);
    const double n = static_cast<double>(active);
    const double level = noise_power_w * std::exp2((rate_req - log_gain_sum) / n);

    const double step_power = level - noise_power_w / gains[active - 1];
    if (!(step_power > 0.0)) {
        throw NumericalFailure(
            fmt::format("min_power_rate_wf: step channel power {:.3e} is not positive", step_power), step_power);
    }

    double total = 0.0;
    for (std::size_t j = 0; j < active; ++j) {
        out.id_powers[j].power = level - noise_power_w / gains[j];
        total += out.id_powers[j].power;
    }
    out.step_index = channels[active - 1].index;
    out.active_id_count = active;
    out.water_level = level;
    out.total_id_power = total;
    return out;
}

} // namespace swipt
