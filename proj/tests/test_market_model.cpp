#include <gtest/gtest.h>

#include <cmath>

#include "cdsbounds/errors.hpp"
#include "cdsbounds/market_model.hpp"
#include "cdsbounds/quadrature.hpp"
#include "oracles.hpp"

using namespace cdsbounds;

namespace {

LiquidMarket reference_market() {
    return LiquidMarket(0.05, {{5, 0.0525}, {9, 0.1247}, {13, 0.1808}, {17, 0.2156}, {21, 0.2405}});
}

}  // namespace

TEST(TenorGrid, QuarterlyDatesFromFirstPeriod) {
    const TenorGrid grid;
    EXPECT_EQ(grid.size(), 21u);
    EXPECT_DOUBLE_EQ(grid.time(0), 0.0);
    EXPECT_DOUBLE_EQ(grid.time(1), 0.25);
    EXPECT_DOUBLE_EQ(grid.horizon(), 5.25);

    const TenorGrid stub(4, 0.1);
    EXPECT_DOUBLE_EQ(stub.time(2), 0.35);
    EXPECT_THROW(TenorGrid(0), ConfigurationError);
    EXPECT_THROW(TenorGrid(4, 0.3), ConfigurationError);
    EXPECT_THROW(grid.time(22), IndexError);
}

TEST(TenorGrid, QuarterIndexIsRightClosed) {
    const TenorGrid grid;
    EXPECT_EQ(grid.quarter_of(0.1), 1u);
    EXPECT_EQ(grid.quarter_of(0.25), 1u);
    EXPECT_EQ(grid.quarter_of(0.2500001), 2u);
    EXPECT_EQ(grid.quarter_of(5.25), 21u);
    EXPECT_EQ(grid.quarter_of(5.3), 22u);
    EXPECT_THROW(grid.quarter_of(0.0), DomainError);
}

TEST(DiscountCurve, Multiplicative) {
    const DiscountCurve d(0.02);
    for (double s : {0.0, 0.3, 1.7}) {
        for (double t : {0.1, 2.5}) EXPECT_NEAR(d.factor(s + t), d.factor(s) * d.factor(t), 1e-15);
    }
    EXPECT_THROW(DiscountCurve(-0.01), ConfigurationError);
}

TEST(Hazard, FromOneYearDefaultProbability) {
    EXPECT_NEAR(hazard_from_pd1(0.30), 0.356675, 5e-7);
    EXPECT_NEAR(hazard_from_pd1(1.0 - std::exp(-1.0)), 1.0, 1e-14);
    EXPECT_GT(hazard_from_pd1(1e-12), 0.0);
    EXPECT_LT(hazard_from_pd1(1e-12), 1e-11);
    EXPECT_THROW(hazard_from_pd1(0.0), DomainError);
    EXPECT_THROW(hazard_from_pd1(1.0), DomainError);
}

TEST(Hazard, QuarterProbabilitiesTelescope) {
    const TenorGrid grid;
    const PhysicalMeasure measure(hazard_from_pd1(0.30), ConstantRecovery{0.4});
    EXPECT_NEAR(default_interval_probability(measure, grid, 1), 1.0 - std::pow(0.7, 0.25), 1e-14);
    EXPECT_NEAR(default_interval_probability(measure, grid, 1), 0.085309, 5e-7);

    double total = measure.survival(grid.horizon());
    for (std::size_t k = 1; k <= grid.size(); ++k) {
        total += default_interval_probability(measure, grid, k);
    }
    EXPECT_NEAR(total, 1.0, 1e-14);
    EXPECT_NEAR(measure.survival(5.25), std::pow(0.7, 5.25), 1e-14);
    EXPECT_NEAR(measure.survival(5.25), 0.15372, 2e-5);
    EXPECT_THROW(default_interval_probability(measure, grid, 22), IndexError);
}

TEST(Recovery, TruncatedNormalNormalisation) {
    const TruncatedNormalRecovery law(0.15, 0.16);
    const double z = oracle::normal_cdf(0.85 / 0.16) - oracle::normal_cdf(-0.15 / 0.16);
    EXPECT_NEAR(law.normalization(), z, 1e-13);
    EXPECT_NEAR(law.normalization(), 0.8258, 5e-4);
    EXPECT_NEAR(law.pdf(0.15), oracle::normal_pdf(0.0) / (0.16 * z), 1e-12);
    EXPECT_NEAR(law.pdf(0.15), 3.0195, 5e-4);
    EXPECT_EQ(law.pdf(-0.01), 0.0);
    EXPECT_EQ(law.pdf(1.01), 0.0);
    EXPECT_NEAR(law.mean(), oracle::truncated_mean(0.15, 0.16), 1e-13);

    const GaussLegendre rule(40);
    EXPECT_NEAR(rule.integrate(0.0, 1.0, [&](double r) { return law.pdf(r); }), 1.0, 1e-12);
    EXPECT_NEAR(law.cdf(0.3), rule.integrate(0.0, 0.3, [&](double r) { return law.pdf(r); }),
                1e-12);
    EXPECT_THROW(TruncatedNormalRecovery(0.1, 0.0), ConfigurationError);
}

TEST(Recovery, DensityVariants) {
    const PhysicalMeasure random(0.3, TruncatedNormalRecovery(0.15, 0.16));
    EXPECT_NEAR(std::get<double>(recovery_density(random, 0.15)), 3.0195, 5e-4);
    const PhysicalMeasure fixed(0.3, ConstantRecovery{0.4});
    EXPECT_DOUBLE_EQ(std::get<PointMass>(recovery_density(fixed, 0.2)).at, 0.4);
    EXPECT_THROW(recovery_density(random, 1.5), DomainError);
    EXPECT_THROW(PhysicalMeasure(0.3, ConstantRecovery{1.2}), ConfigurationError);
}

TEST(LiquidMarket, Validation) {
    EXPECT_THROW(LiquidMarket(0.05, {{9, 0.1}, {5, 0.05}}), ConfigurationError);
    EXPECT_THROW(LiquidMarket(0.05, {{5, 0.1}, {5, 0.05}}), ConfigurationError);
    EXPECT_THROW(LiquidMarket(0.05, {{0, 0.1}}), IndexError);
    EXPECT_THROW(LiquidMarket(0.05, {{22, 0.1}}).check_against(TenorGrid()), IndexError);

    const LiquidMarket market = reference_market();
    const std::size_t keep[] = {5, 13, 21};
    const LiquidMarket b = market.restricted_to(keep);
    EXPECT_EQ(b.size(), 3u);
    EXPECT_DOUBLE_EQ(*b.quote_at(13), 0.1808);
    const std::size_t missing[] = {6};
    EXPECT_THROW(market.restricted_to(missing), ConfigurationError);
}

TEST(Interpolation, LinearInMaturityIndex) {
    const TenorGrid grid;
    const LiquidMarket market = reference_market();
    EXPECT_NEAR(interpolated_upfront(market, grid, 13), 0.1808, 1e-15);
    EXPECT_NEAR(interpolated_upfront(market, grid, 14), 0.1808 + (0.2156 - 0.1808) / 4.0, 1e-15);
    EXPECT_NEAR(interpolated_upfront(market, grid, 14), 0.1895, 1e-12);
    EXPECT_THROW(interpolated_upfront(market, grid, 4), InterpolationRangeError);
    EXPECT_THROW(interpolated_upfront(LiquidMarket(0.05, {}), grid, 10), NoMarketError);
}

TEST(Quadrature, GaussLegendreExactForPolynomials) {
    for (std::size_t n : {2u, 5u, 16u, 64u}) {
        const GaussLegendre rule(n);
        double wsum = 0.0;
        for (double w : rule.weights()) wsum += w;
        EXPECT_NEAR(wsum, 2.0, 1e-13);
        const int degree = static_cast<int>(2 * n - 1);
        const double integral =
            rule.integrate(0.0, 1.0, [&](double x) { return std::pow(x, degree); });
        EXPECT_NEAR(integral, 1.0 / (degree + 1), 1e-13) << n;
    }
}
