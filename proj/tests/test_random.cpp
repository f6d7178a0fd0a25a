// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "swipt/random.hpp"

using namespace swipt;

TEST(Rng, SameSeedSameSequence)
{
    RngStream a(123), b(123);
    for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next_u64(), b.next_u64());
}

TEST(Rng, SubstreamsDiffer)
{
    std::set<std::uint64_t> firsts;
    for (std::uint64_t i = 0; i < 1000; ++i) firsts.insert(RngStream::substream(7, i).next_u64());
    EXPECT_EQ(firsts.size(), 1000u);
    EXPECT_NE(RngStream::substream(7, 0).next_u64(), RngStream::substream(8, 0).next_u64());
    EXPECT_EQ(RngStream::substream(7, 3).next_u64(), RngStream::substream(7, 3).next_u64());
}

TEST(Rng, UniformRanges)
{
    RngStream rng(1);
    for (int i = 0; i < 100000; ++i) {
        const double u = rng.uniform();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
        const double v = rng.uniform_open_zero();
        ASSERT_GT(v, 0.0);
        ASSERT_LE(v, 1.0);
    }
}

TEST(Rng, NormalMoments)
{
    RngStream rng(2);
    const int n = 200000;
    double sum = 0.0, sq = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x = rng.normal();
        sum += x;
        sq += x * x;
    }
    EXPECT_LT(std::abs(sum / n), 4.0 / std::sqrt(n));
    EXPECT_NEAR(sq / n, 1.0, 0.02);
}

TEST(Rng, ComplexNormalSplitsVarianceEvenly)
{
    RngStream rng(3);
    const int n = 200000;
    const double var = 0.25;
    double re2 = 0.0, im2 = 0.0, cross = 0.0;
    for (int i = 0; i < n; ++i) {
        const auto z = rng.complex_normal(var);
        re2 += z.real() * z.real();
        im2 += z.imag() * z.imag();
        cross += z.real() * z.imag();
    }
    EXPECT_NEAR(re2 / n, var / 2, 0.02 * var);
    EXPECT_NEAR(im2 / n, var / 2, 0.02 * var);
    EXPECT_LT(std::abs(cross / n), 0.01 * var);
}

TEST(Rng, Mix64IsBijectiveOnSample)
{
    std::set<std::uint64_t> out;
    for (std::uint64_t i = 0; i < 10000; ++i) out.insert(mix64(i));
    EXPECT_EQ(out.size(), 10000u);
}
