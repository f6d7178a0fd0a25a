// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "swipt/errors.hpp"
#include "swipt/instances.hpp"
#include "swipt/ss_solver.hpp"
#include "swipt/waterfilling.hpp"

using namespace swipt;

TEST(SolveOptimal, TwoChannelHandExample)
{
    const EigenchannelSet c({4.0, 1.0}, 1.0);
    const SsSolution s = solve_optimal(c, 4.0, 1.0);
    ASSERT_TRUE(s.feasible);
    EXPECT_EQ(*s.eh_index, 0u);
    EXPECT_NEAR(s.allocation->powers[0], 3.0, 1e-14);
    EXPECT_NEAR(s.allocation->powers[1], 1.0, 1e-14);
    EXPECT_NEAR(s.p_r, 12.0, 1e-13);
    EXPECT_NEAR(s.p_h, 6.0, 1e-13);
    EXPECT_NEAR(s.achieved_rate, 1.0, 1e-14);
    ASSERT_EQ(s.per_candidate.size(), 2u);
    EXPECT_NEAR(s.per_candidate[1].p_r, 3.75, 1e-14);
    EXPECT_NEAR(s.per_candidate[1].id_power, 0.25, 1e-15);
}

TEST(SolveOptimal, ZeroRateUsesStrongestChannel)
{
    for (std::size_t r = 1; r <= 4; ++r) {
        std::vector<double> g;
        for (std::size_t k = 0; k < r; ++k) g.push_back(10.0 - double(k));
        const SsSolution s = solve_optimal(EigenchannelSet(g, 1.0), 4.0, 0.0);
        ASSERT_TRUE(s.feasible);
        EXPECT_EQ(*s.eh_index, 0u);
        EXPECT_DOUBLE_EQ(s.allocation->powers[0], 4.0);
        EXPECT_DOUBLE_EQ(s.p_r, 40.0);
    }
}

TEST(SolveOptimal, InfeasibleAtAndAboveRateMax)
{
    const EigenchannelSet c({16.0, 1.0}, 1.0);
    const double r_max = feasibility_rate_max(c, 4.0);
    EXPECT_FALSE(solve_optimal(c, 4.0, r_max).feasible);
    EXPECT_FALSE(solve_optimal(c, 4.0, r_max + 1.0).feasible);
    EXPECT_TRUE(solve_optimal(c, 4.0, r_max - 1e-6).feasible);
    EXPECT_FALSE(solve_optimal(EigenchannelSet({3.0}, 1.0), 4.0, 0.5).feasible);
}

TEST(SolveOptimal, RejectsBadInputs)
{
    const EigenchannelSet c({4.0, 1.0}, 1.0);
    EXPECT_THROW(solve_optimal(c, -1.0, 1.0), InvalidArgument);
    EXPECT_THROW(solve_optimal(c, 4.0, -1.0), InvalidArgument);
}

TEST(SolveOptimal, MatchesIndependentEnumeration)
{
    RngStream rng(99);
    for (int i = 0; i < 3000; ++i) {
        const std::size_t r = 2 + rng.next_u64() % 6;
        const double noise = i % 2 ? 1e-13 : 1.0;
        const EigenchannelSet c = i % 2 ? random_eigenchannels(rng, r, noise)
                                        : [&] {
                                              std::vector<double> g;
                                              for (std::size_t k = 0; k < r; ++k) g.push_back(uniform_between(rng, 0.1, 10.0));
                                              std::sort(g.rbegin(), g.rend());
                                              return EigenchannelSet(g, noise);
                                          }();
        const double rate = uniform_between(rng, 0.0, feasibility_rate_max(c, 4.0));
        const SsSolution s = solve_optimal(c, 4.0, rate);
        std::vector<double> g(c.gains().begin(), c.gains().end());
        std::size_t e_ref = 0;
        const double ref = oracle::best_received_power(g, noise, 4.0, rate, &e_ref);
        ASSERT_TRUE(s.feasible);
        ASSERT_NEAR(s.p_r, ref, 1e-9 * ref) << "instance " << i;
        ASSERT_TRUE(verify_kkt(s, c, rate).ok(1e-8));
    }
}

TEST(SolveOptimal, AssignmentNondecreasingInRate)
{
    RngStream rng(5);
    for (int i = 0; i < 100; ++i) {
        const EigenchannelSet c = random_eigenchannels(rng, 4, 1e-13);
        const double r_max = feasibility_rate_max(c, 4.0);
        std::size_t prev = 0;
        for (int k = 0; k < 400; ++k) {
            const SsSolution s = solve_optimal(c, 4.0, r_max * k / 400.0);
            ASSERT_TRUE(s.feasible);
            ASSERT_GE(*s.eh_index, prev);
            prev = *s.eh_index;
        }
    }
}

TEST(SolveApprox, EqualTailGains)
{
    const double g = 2.0, rate = 3.0;
    const EigenchannelSet c({8.0, g, g}, 1.0);
    const ApproxSolution a = solve_approx(c, 100.0, rate);
    EXPECT_NEAR(a.candidate_equal_pa[0], std::pow(2.0, rate / 2.0) / g, 1e-13);
}

TEST(SolveApprox, ZeroRateEqualPower)
{
    const EigenchannelSet c({8.0, 4.0, 2.0}, 0.5);
    const ApproxSolution a = solve_approx(c, 100.0, 0.0);
    EXPECT_NEAR(a.candidate_equal_pa[0], 0.5 * std::pow(4.0 * 2.0, -0.5), 1e-15);
    EXPECT_NEAR(a.candidate_equal_pa[2], 0.5 * std::pow(8.0 * 4.0, -0.5), 1e-15);
    EXPECT_GT(a.candidate_equal_pa[1], 0.0);
}

TEST(SolveApprox, NeedsTwoChannels)
{
    EXPECT_THROW(solve_approx(EigenchannelSet({3.0}, 1.0), 4.0, 0.0), InvalidArgument);
}

TEST(SolveApprox, NeverBeatsOptimum)
{
    RngStream rng(17);
    for (int i = 0; i < 1000; ++i) {
        const EigenchannelSet c = random_eigenchannels(rng, 2 + i % 4, i % 3 ? 1e-13 : 1e-7);
        const double rate = uniform_between(rng, 0.0, feasibility_rate_max(c, 4.0));
        const SsSolution s = solve_optimal(c, 4.0, rate);
        try {
            const ApproxSolution a = solve_approx(c, 4.0, rate);
            EXPECT_LE(a.p_r, s.p_r * (1.0 + 1e-12));
            EXPECT_NEAR(a.achieved_rate, rate, 1e-9);
        } catch (const ApproxInfeasible&) {
        }
    }
}

TEST(Kkt, ZeroRateHasOnlyBudgetCondition)
{
    const EigenchannelSet c({4.0, 2.0, 1.0}, 1.0);
    const SsSolution s = solve_optimal(c, 4.0, 0.0);
    const KktReport k = verify_kkt(s, c, 0.0);
    EXPECT_EQ(k.budget_residual, 0.0);
    EXPECT_EQ(k.stationarity, 0.0);
    EXPECT_TRUE(k.ok(0.0));
}

TEST(Kkt, PerturbationIsDetected)
{
    const EigenchannelSet c({3.0, 2.0, 1.0, 0.5}, 1.0);
    const SsSolution s = solve_optimal(c, 10.0, 3.0);
    ASSERT_TRUE(verify_kkt(s, c, 3.0).ok(1e-9));
    SsSolution bad = s;
    std::vector<std::size_t> active;
    for (std::size_t k = 0; k < c.size(); ++k)
        if (k != *s.eh_index && s.allocation->powers[k] > 0.0) active.push_back(k);
    ASSERT_GE(active.size(), 2u);
    const double moved = 0.01 * bad.allocation->powers[active[0]];
    bad.allocation->powers[active[0]] -= moved;
    bad.allocation->powers[active[1]] += moved;
    EXPECT_GT(verify_kkt(bad, c, 3.0).stationarity, 1e-4);
}

TEST(Kkt, InfeasibleSolutionRejected)
{
    const EigenchannelSet c({4.0, 1.0}, 1.0);
    EXPECT_THROW(verify_kkt(solve_optimal(c, 4.0, 100.0), c, 100.0), InvalidArgument);
}
