// SPDX-License-Identifier: Apache-2.0
#include "swipt/physics.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "swipt/errors.hpp"

namespace swipt {

double PowerAllocation::total() const
{
    double sum = 0.0;
    for (double p : powers) sum += p;
    return sum;
}

void PowerAllocation::validate(double budget_w) const
{
    for (std::size_t k = 0; k < powers.size(); ++k) {
        if (!(powers[k] >= 0.0)) throw InvalidArgument(fmt::format("power {} is negative", k));
    }
    if (eh_index && *eh_index >= powers.size()) {
        throw InvalidArgument(fmt::format("eh_index {} out of range", *eh_index));
    }
    if (total() > budget_w + 1e-12) {
        throw InvalidArgument(fmt::format("total power {} exceeds budget {}", total(), budget_w));
    }
}

double achievable_rate(const PowerAllocation& alloc, const EigenchannelSet& chans)
{
    if (alloc.powers.size() != chans.size()) {
        throw InvalidArgument(fmt::format("achievable_rate: {} powers for {} eigenchannels",
                                          alloc.powers.size(), chans.size()));
    }
    double rate = 0.0;
    for (std::size_t k = 0; k < chans.size(); ++k) {
        if (alloc.eh_index && *alloc.eh_index == k) continue;
        rate += std::log2(1.0 + alloc.powers[k] * chans.gain(k) / chans.noise_power());
    }
    return rate;
}

double received_rf_power(const PowerAllocation& alloc, const EigenchannelSet& chans)
{
    if (!alloc.eh_index) throw NoHarvestingChannel("allocation has no harvesting eigenchannel");
    if (alloc.powers.size() != chans.size()) {
        throw InvalidArgument("received_rf_power: length mismatch");
    }
    return alloc.powers[*alloc.eh_index] * chans.gain(*alloc.eh_index);
}

EhModel::EhModel(Rule rule) : rule_(std::move(rule))
{
    std::visit(
        [](const auto& r) {
            using T = std::decay_t<decltype(r)>;
            if (!(r.threshold_w >= 0.0)) throw InvalidArgument("EH threshold must be >= 0");
            if constexpr (std::is_same_v<T, ConstantEfficiency>) {
                if (!(r.efficiency >= 0.0 && r.efficiency <= 1.0)) {
                    throw InvalidArgument("constant efficiency must lie in [0, 1]");
                }
            } else if constexpr (std::is_same_v<T, LogisticEfficiency>) {
                if (!(r.max_efficiency > 0.0 && r.max_efficiency <= 1.0)) {
                    throw InvalidArgument("logistic max_efficiency must lie in (0, 1]");
                }
                if (!(r.steepness_per_w > 0.0)) throw InvalidArgument("logistic steepness must be positive");
                if (!(r.midpoint_w >= 0.0)) throw InvalidArgument("logistic midpoint must be >= 0");
            } else {
                if (!r.efficiency) throw InvalidArgument("custom EH model needs an efficiency rule");
            }
        },
        rule_);
}

double EhModel::efficiency(double p_r_w) const
{
    if (!(p_r_w > 0.0)) return 0.0;
    if (p_r_w < threshold_w()) return 0.0;
    return std::visit(
        [p_r_w](const auto& r) -> double {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, ConstantEfficiency>) {
                return r.efficiency;
            } else if constexpr (std::is_same_v<T, LogisticEfficiency>) {
                const auto logistic = [&](double p) {
                    return 1.0 / (1.0 + std::exp(-r.steepness_per_w * (p - r.midpoint_w)));
                };
                const double l0 = logistic(0.0);
                return r.max_efficiency * (logistic(p_r_w) - l0) / (1.0 - l0);
            } else {
                return std::clamp(r.efficiency(p_r_w), 0.0, 1.0);
            }
        },
        rule_);
}

double EhModel::threshold_w() const
{
    return std::visit([](const auto& r) { return r.threshold_w; }, rule_);
}

std::string EhModel::describe() const
{
    return std::visit(
        [](const auto& r) -> std::string {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, ConstantEfficiency>) {
                return fmt::format("constant(eta={:.17g},threshold_w={:.17g})", r.efficiency, r.threshold_w);
            } else if constexpr (std::is_same_v<T, LogisticEfficiency>) {
                return fmt::format("logistic(max_eta={:.17g},steepness={:.17g},midpoint_w={:.17g},"
                                   "threshold_w={:.17g})",
                                   r.max_efficiency, r.steepness_per_w, r.midpoint_w, r.threshold_w);
            } else {
                return r.name;
            }
        },
        rule_);
}

} // namespace swipt
