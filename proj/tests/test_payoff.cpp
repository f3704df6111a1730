#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "cdsbounds/cli.hpp"
#include "cdsbounds/errors.hpp"
#include "cdsbounds/payoff.hpp"
#include "oracles.hpp"

using namespace cdsbounds;

namespace {

PayoffModel reference_model() { return PayoffModel(TenorGrid(), DiscountCurve(0.02), 0.05); }

std::vector<double> random_alpha(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> a(21);
    for (double& x : a) x = u(rng);
    return a;
}

// Brute-force minimum over a dense tau grid, hugging each right limit.
double brute_minimum(const PayoffModel& model, const HedgedPosition& pos) {
    const oracle::Model o;
    double lo = position_value(model, pos, model.survival_path());
    for (std::size_t k = 1; k <= 21; ++k) {
        const double a = o.t(k - 1);
        const double b = o.t(k);
        for (double rho : {0.0, 1.0}) {
            lo = std::min(lo, position_value(model, pos, a + 1e-12, rho));
            for (int i = 1; i <= 4000; ++i) {
                lo = std::min(lo, position_value(model, pos, a + (b - a) * i / 4000.0, rho));
            }
        }
    }
    return lo;
}

}  // namespace

TEST(Accrual, DiscountedPremiumPeriods) {
    const PayoffModel model = reference_model();
    EXPECT_NEAR(model.full_accrual(4), 0.987593, 5e-7);
    const oracle::Model o;
    EXPECT_NEAR(model.full_accrual(21), o.full_accrual(21), 1e-14);
    // Published to six decimals with an error in the fifth.
    EXPECT_NEAR(model.full_accrual(21), 4.971341, 2e-5);
    EXPECT_NEAR(model.accrual(4, 6.0), 0.987593, 5e-7);
    EXPECT_NEAR(model.accrual(7, 0.25), 0.25 * std::exp(-0.005), 1e-15);
    EXPECT_NEAR(model.accrual(7, 0.25), 0.248753, 5e-7);

    const PayoffModel flat(TenorGrid(), DiscountCurve(0.0), 0.05);
    for (std::size_t m : {1u, 8u, 21u}) EXPECT_DOUBLE_EQ(flat.full_accrual(m), 0.25 * m);

    for (std::size_t m = 1; m <= 21; ++m) {
        for (double tau : {0.01, 0.25, 1.13, 2.5, 4.9, 5.25, 7.0}) {
            EXPECT_NEAR(model.accrual(m, tau), o.accrual(m, tau), 1e-14) << m << " " << tau;
        }
    }
}

TEST(CdsPayoff, ClosedFormValues) {
    const PayoffModel model = reference_model();
    EXPECT_NEAR(model.cds_payoff(21, 0.1, 0.4), -0.05 * 0.1 * std::exp(-0.002) +
                                                     0.6 * std::exp(-0.002), 1e-15);
    EXPECT_NEAR(model.cds_payoff(21, 0.1, 0.4), 0.593811, 5e-7);
    EXPECT_NEAR(model.cds_payoff(21, model.survival_path()), -0.05 * oracle::Model().full_accrual(21), 1e-15);
    EXPECT_NEAR(model.cds_payoff(21, model.survival_path()), -0.248567, 1e-6);
    EXPECT_NEAR(model.cds_payoff(10, 1.3, 1.0), -0.05 * model.accrual(10, 1.3), 1e-15);

    // Protection at T_m itself, none just after.
    EXPECT_GT(model.cds_payoff(4, 1.0, 0.0), 0.5);
    EXPECT_LT(model.cds_payoff(4, 1.0 + 1e-9, 0.0), 0.0);
    EXPECT_THROW(model.cds_payoff(4, 1.0, 1.5), DomainError);
    EXPECT_THROW(model.cds_payoff(22, 1.0, 0.5), IndexError);
}

TEST(CdsPayoff, MatchesOracleEverywhere) {
    const PayoffModel model = reference_model();
    const oracle::Model o;
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> tau(0.0, 6.0);
    std::uniform_real_distribution<double> rho(0.0, 1.0);
    for (int i = 0; i < 2000; ++i) {
        const double t = std::max(1e-6, tau(rng));
        const double r = rho(rng);
        const std::size_t m = 1 + static_cast<std::size_t>(i % 21);
        EXPECT_NEAR(model.cds_payoff(m, t, r), o.cds(m, t, r), 1e-14);
    }
}

TEST(Portfolio, Basics) {
    const Portfolio p = Portfolio::single(21, 7, -0.5);
    EXPECT_DOUBLE_EQ(p.notional(7), -0.5);
    EXPECT_DOUBLE_EQ(p.notional(6), 0.0);
    EXPECT_THROW(p.notional(0), IndexError);
    EXPECT_THROW(Portfolio({1.0, NAN}), ConfigurationError);
    EXPECT_DOUBLE_EQ(p.scaled(-2.0).notional(7), 1.0);
}

TEST(PositionValue, EmptyPortfolioIsCash) {
    const PayoffModel model = reference_model();
    const HedgedPosition pos{Portfolio::zeros(21), 0.37};
    for (double tau : {0.1, 2.0, 5.25, 9.0}) EXPECT_DOUBLE_EQ(position_value(model, pos, tau, 0.3), 0.37);
    EXPECT_THROW(position_value(model, HedgedPosition{Portfolio::zeros(20), 0.0}, 1.0, 0.5),
                 ConfigurationError);
}

TEST(PositionValue, AffineInRecovery) {
    const PayoffModel model = reference_model();
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> tau(1e-6, 5.25);
    std::uniform_real_distribution<double> rho(0.0, 1.0);
    double worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        const HedgedPosition pos{Portfolio(random_alpha(rng)), 0.1 * trial};
        for (int i = 0; i < 100; ++i) {
            const double t = tau(rng);
            const double r = rho(rng);
            const double v0 = position_value(model, pos, t, 0.0);
            const double v1 = position_value(model, pos, t, 1.0);
            worst = std::max(worst, std::abs(position_value(model, pos, t, r) - (r * v1 + (1 - r) * v0)));
        }
    }
    EXPECT_LE(worst, 1e-14);
}

TEST(QuarterCoefficients, AgreeWithDirectSummation) {
    const PayoffModel model = reference_model();
    const oracle::Model o;
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        const auto alpha = random_alpha(rng);
        const HedgedPosition pos{Portfolio(alpha), u(rng)};
        const QuarterCoefficients c(model, pos);
        for (std::size_t k = 1; k <= 21; ++k) {
            const double tau = o.t(k - 1) + 0.25 * u(rng);
            const double rho = u(rng);
            EXPECT_NEAR(c.value(PathPoint{k, tau, rho}), o.position(alpha, pos.cash, tau, rho), 1e-12);
        }
        EXPECT_NEAR(c.survival_value(), o.survival_value(alpha, pos.cash), 1e-12);
        // Right limit at T_{k-1} is the value just inside quarter k.
        EXPECT_NEAR(c.value(model.right_limit(5, 0.3)), o.position(alpha, pos.cash, 1.0 + 1e-13, 0.3),
                    1e-10);
    }
}

TEST(IntervalMinimum, StationaryPointOutsideQuarter) {
    // Delta = A + (B (tau - T_{k-1}) + C) e^{-r tau} with T_{k-1} = 1, B = -1, C = 0.5:
    // tau* = 1 + 1/r - C/B = 51.5, beyond the quarter, so an endpoint is the minimum.
    const double tstar = 1.0 + 1.0 / 0.02 - 0.5 / -1.0;
    EXPECT_DOUBLE_EQ(tstar, 51.5);

    // Long 1 at m = 21 gives B = -w, C = 1 - rho on every quarter.
    const PayoffModel model = reference_model();
    const HedgedPosition pos{Portfolio::single(21, 21, 1.0), 0.0};
    const QuarterCoefficients c(model, pos);
    for (std::size_t k = 1; k <= 21; ++k) {
        const auto m = c.interval_minimum(k, 1.0);
        EXPECT_DOUBLE_EQ(m.tau, model.grid().time(k));
    }
}

TEST(IntervalMinimum, ConstantOnFlatQuarter) {
    const PayoffModel model = reference_model();
    const HedgedPosition pos{Portfolio::zeros(21), 0.2};
    const QuarterCoefficients c(model, pos);
    EXPECT_DOUBLE_EQ(c.interval_minimum(3, 0.5).value, 0.2);
    EXPECT_DOUBLE_EQ(c.interval_maximum(3, 0.5).value, 0.2);
}

TEST(PathMinimum, KnownPositions) {
    const PayoffModel model = reference_model();
    EXPECT_NEAR(path_minimum(model, {Portfolio::single(21, 21, 1.0), 0.0}).value, -0.248567, 1e-6);
    EXPECT_DOUBLE_EQ(path_minimum(model, {Portfolio::zeros(21), 1.0}).value, 1.0);
    EXPECT_LT(path_minimum(model, {Portfolio(example_portfolio_notionals()), 0.0}).value, 0.0);
}

TEST(PathMinimum, MatchesBruteForceGrid) {
    const PayoffModel model = reference_model();
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 25; ++trial) {
        const HedgedPosition pos{Portfolio(random_alpha(rng)), 0.0};
        const double exact = path_minimum(model, pos).value;
        const double brute = brute_minimum(model, pos);
        EXPECT_GE(brute - exact, -1e-12);
        EXPECT_LE(brute - exact, 1e-6);
    }
}

TEST(PathMinimum, ReportedPathAttainsValue) {
    const PayoffModel model = reference_model();
    const HedgedPosition pos{Portfolio(example_portfolio_notionals()), 0.0};
    const PathExtremum lo = path_minimum(model, pos);
    const PathExtremum hi = path_maximum(model, pos);
    EXPECT_NEAR(position_value(model, pos, lo.path), lo.value, 1e-12);
    EXPECT_NEAR(position_value(model, pos, hi.path), hi.value, 1e-12);
    EXPECT_LT(lo.value, hi.value);
}
