// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "swipt/errors.hpp"
#include "swipt/instances.hpp"
#include "swipt/waterfilling.hpp"

using namespace swipt;

TEST(WaterfillBudget, SingleChannel)
{
    const double g[] = {2.5};
    const WaterfillResult r = waterfill_budget(g, 1.0, 3.0);
    EXPECT_DOUBLE_EQ(r.powers[0], 3.0);
    EXPECT_EQ(r.active_count, 1u);
}

TEST(WaterfillBudget, TwoChannelExample)
{
    const double g[] = {2.0, 1.0};
    const WaterfillResult r = waterfill_budget(g, 1.0, 3.0);
    EXPECT_NEAR(r.powers[0], 1.75, 1e-15);
    EXPECT_NEAR(r.powers[1], 1.25, 1e-15);
    EXPECT_NEAR(r.water_level, 2.25, 1e-15);
    EXPECT_EQ(r.active_count, 2u);
}

TEST(WaterfillBudget, DeepChannelLeftEmpty)
{
    const double g[] = {100.0, 0.01};
    const WaterfillResult r = waterfill_budget(g, 1.0, 0.5);
    EXPECT_EQ(r.active_count, 1u);
    EXPECT_DOUBLE_EQ(r.powers[0], 0.5);
    EXPECT_EQ(r.powers[1], 0.0);
}

TEST(WaterfillBudget, MaximizesRateAgainstGrid)
{
    const double g[] = {2.0, 1.0};
    const double best = sum_rate(g, waterfill_budget(g, 1.0, 3.0).powers, 1.0);
    for (int k = 0; k <= 3000; ++k) {
        const double p1 = 3.0 * k / 3000.0;
        const double p[] = {p1, 3.0 - p1};
        EXPECT_LE(sum_rate(g, p, 1.0), best + 1e-12);
    }
}

TEST(RateMax, Examples)
{
    EXPECT_EQ(feasibility_rate_max(EigenchannelSet({5.0}, 1.0), 4.0), 0.0);
    EXPECT_NEAR(feasibility_rate_max(EigenchannelSet({16.0, 1.0}, 1.0), 4.0), std::log2(65.0), 1e-13);
    EXPECT_NEAR(feasibility_rate_max(EigenchannelSet({16.0, 1.0}, 1.0), 4.0), 6.0224, 1e-4);
}

TEST(RateMax, MatchesRateOfAllocation)
{
    RngStream rng(31);
    for (int i = 0; i < 200; ++i) {
        const EigenchannelSet c = random_eigenchannels(rng, 4, 1e-13);
        const auto top = c.gains().first(3);
        const WaterfillResult wf = waterfill_budget(top, c.noise_power(), 4.0);
        EXPECT_NEAR(feasibility_rate_max(c, 4.0), sum_rate(top, wf.powers, c.noise_power()), 1e-12 * 100);
    }
}

TEST(MinPowerWf, Examples)
{
    const EigenchannelSet one({1.0}, 1.0);
    const auto ids1 = id_channels(one, std::nullopt);
    EXPECT_NEAR(min_power_rate_wf(ids1, 1.0, 1.0).total_id_power, 1.0, 1e-15);

    const EigenchannelSet c41({4.0, 1.0}, 1.0);
    const auto ids = id_channels(c41, std::nullopt);
    const MinPowerWfResult zero = min_power_rate_wf(ids, 1.0, 0.0);
    EXPECT_EQ(zero.total_id_power, 0.0);
    for (const auto& cp : zero.id_powers) EXPECT_EQ(cp.power, 0.0);

    const MinPowerWfResult r = min_power_rate_wf(ids, 1.0, 1.0);
    EXPECT_EQ(r.active_id_count, 1u);
    EXPECT_EQ(*r.step_index, 0u);
    EXPECT_NEAR(r.power_of(0), 0.25, 1e-15);
    EXPECT_EQ(r.power_of(1), 0.0);

    const EigenchannelSet c44({4.0, 4.0}, 1.0);
    const MinPowerWfResult s = min_power_rate_wf(id_channels(c44, std::nullopt), 1.0, 4.0);
    EXPECT_NEAR(s.power_of(0), 0.75, 1e-14);
    EXPECT_NEAR(s.power_of(1), 0.75, 1e-14);
    EXPECT_EQ(s.kappa(), 3u);
}

TEST(MinPowerWf, EmptyChannelListWithRateIsInfeasible)
{
    std::vector<IdChannel> none;
    EXPECT_THROW(min_power_rate_wf(none, 1.0, 1.0), Infeasible);
    EXPECT_EQ(min_power_rate_wf(none, 1.0, 0.0).total_id_power, 0.0);
}

TEST(MinPowerWf, ExcludesHarvestingChannel)
{
    const EigenchannelSet c({5.0, 3.0, 1.0}, 1.0);
    const auto ids = id_channels(c, 1);
    ASSERT_EQ(ids.size(), 2u);
    EXPECT_EQ(ids[0].index, 0u);
    EXPECT_EQ(ids[1].index, 2u);
}

// Rate met exactly, powers match the level-bisection oracle and inverting
// with budget water-filling gives back the same rate.
TEST(MinPowerWf, RandomInstancesAgainstLevelBisection)
{
    RngStream rng(2024);
    for (int i = 0; i < 10000; ++i) {
        const std::size_t r = 1 + rng.next_u64() % 7;
        const double noise = i % 2 ? 1e-13 : uniform_between(rng, 0.1, 10.0);
        const EigenchannelSet c = random_eigenchannels(rng, r, noise);
        const double rate = uniform_between(rng, 0.0, i % 2 ? 150.0 : 6.0);
        const auto ids = id_channels(c, std::nullopt);
        const MinPowerWfResult wf = min_power_rate_wf(ids, noise, rate);

        std::vector<double> p;
        for (const auto& cp : wf.id_powers) {
            ASSERT_GE(cp.power, 0.0);
            p.push_back(cp.power);
        }
        ASSERT_NEAR(sum_rate(c.gains(), p, noise), rate, 1e-9);

        std::vector<double> g(c.gains().begin(), c.gains().end());
        const double ref = oracle::min_power(g, noise, rate);
        ASSERT_NEAR(wf.total_id_power, ref, 1e-9 * std::max(1.0, ref)) << "instance " << i;

        const WaterfillResult back = waterfill_budget(c.gains(), noise, wf.total_id_power);
        ASSERT_NEAR(sum_rate(c.gains(), back.powers, noise), rate, 1e-8);
    }
}
