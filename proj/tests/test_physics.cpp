// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cmath>

#include "swipt/errors.hpp"
#include "swipt/physics.hpp"
#include "swipt/random.hpp"

using namespace swipt;

TEST(Rate, Examples)
{
    const EigenchannelSet chans({2.0, 1.0}, 1.0);
    EXPECT_EQ(achievable_rate({{0.0, 0.0}, std::nullopt}, chans), 0.0);
    EXPECT_NEAR(achievable_rate({{1.75, 1.25}, std::nullopt}, chans), std::log2(4.5) + std::log2(2.25), 1e-15);
    EXPECT_NEAR(achievable_rate({{1.75, 1.25}, std::nullopt}, chans), 3.3399, 1e-4);
    // The harvesting channel carries no information.
    EXPECT_NEAR(achievable_rate({{1.75, 1.25}, 0}, chans), std::log2(2.25), 1e-15);
    EXPECT_EQ(achievable_rate({{5.0}, 0}, EigenchannelSet({3.0}, 1.0)), 0.0);
    EXPECT_THROW(achievable_rate({{1.0}, std::nullopt}, chans), InvalidArgument);
}

TEST(ReceivedPower, Examples)
{
    const EigenchannelSet chans({4.0, 1.0}, 1.0);
    EXPECT_EQ(received_rf_power({{0.0, 1.0}, 0}, chans), 0.0);
    EXPECT_DOUBLE_EQ(received_rf_power({{3.0, 1.0}, 0}, chans), 12.0);
    EXPECT_DOUBLE_EQ(received_rf_power({{3.0 * 2.5, 1.0}, 0}, chans), 12.0 * 2.5);
    EXPECT_THROW(received_rf_power({{3.0, 1.0}, std::nullopt}, chans), NoHarvestingChannel);
}

TEST(PowerAllocation, Validate)
{
    EXPECT_NO_THROW((PowerAllocation{{1.0, 2.0}, 1}.validate(3.0)));
    EXPECT_THROW((PowerAllocation{{1.0, -0.1}, 1}.validate(3.0)), InvalidArgument);
    EXPECT_THROW((PowerAllocation{{1.0, 2.0}, 2}.validate(3.0)), InvalidArgument);
    EXPECT_THROW((PowerAllocation{{1.0, 2.1}, 0}.validate(3.0)), InvalidArgument);
}

TEST(EhModel, ConstantEfficiency)
{
    const EhModel m = EhModel::default_model();
    EXPECT_EQ(harvested_power(0.0, m), 0.0);
    EXPECT_DOUBLE_EQ(harvested_power(2.0, m), 1.0);
    EXPECT_EQ(harvested_power(0.5e-6, m), 0.0); // below the -30 dBm sensitivity
    EXPECT_THROW(EhModel(ConstantEfficiency{1.5, 0.0}), InvalidArgument);
}

TEST(EhModel, LogisticMonotoneAndBounded)
{
    const EhModel m{LogisticEfficiency{}};
    RngStream rng(9);
    for (int i = 0; i < 1000; ++i) {
        double a = 0.1 * rng.uniform(), b = 0.1 * rng.uniform();
        if (a > b) std::swap(a, b);
        EXPECT_LE(harvested_power(a, m), harvested_power(b, m));
        EXPECT_LE(m.efficiency(a), m.efficiency(b));
        EXPECT_LE(m.efficiency(b), 0.7);
    }
    EXPECT_EQ(harvested_power(0.0, m), 0.0);
}

TEST(EhModel, CustomRuleIsClamped)
{
    const EhModel m{CustomEfficiency{[](double p) { return 10.0 * p; }, 0.0, "linear"}};
    EXPECT_DOUBLE_EQ(m.efficiency(0.01), 0.1);
    EXPECT_DOUBLE_EQ(m.efficiency(1.0), 1.0);
    EXPECT_EQ(m.describe(), "linear");
    EXPECT_THROW(EhModel(CustomEfficiency{}), InvalidArgument);
}
