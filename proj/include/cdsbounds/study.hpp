/**
 * @file study.hpp
 * @brief Randomised portfolio studies and maturity sweeps.
 *
 * Random portfolios draw each notional uniformly from [-1, 1) using
 * std::mt19937_64 seeded per trial with splitmix64(master_seed, trial_index),
 * and the top 53 bits of each output. Both generator and mixing function are
 * fully specified by the standard, so results are bit-reproducible across
 * platforms and thread counts.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cdsbounds/hedge_optimizer.hpp"
#include "cdsbounds/market_model.hpp"
#include "cdsbounds/payoff.hpp"
#include "cdsbounds/valuation.hpp"

namespace cdsbounds {

/// Liquid maturity sets: a = {5,9,13,17,21}, b = {5,13,21}, c = {21}.
enum class MarketVariant { A, B, C };

std::span<const std::size_t> variant_maturities(MarketVariant variant);
char to_char(MarketVariant variant);
MarketVariant parse_variant(const std::string& text);

struct StudyConfig {
    std::vector<MarketVariant> variants{MarketVariant::A, MarketVariant::B, MarketVariant::C};
    std::size_t n_trials = 1000;
    std::uint64_t master_seed = 42;
    double lambda = 0.8;
    QuadratureConfig quadrature;
    Discretization discretization;
    /// Worker threads; 0 picks std::thread::hardware_concurrency().
    std::size_t threads = 0;
};

struct TrialRecord {
    std::size_t trial_index;
    std::uint64_t seed;
    Portfolio portfolio;
    double lmax_hedged;
    double lmax_unhedged;
    double ratio;
};

/// Empirical distribution of a sample, F(x) = fraction of values <= x.
class CdfEstimate {
public:
    CdfEstimate() = default;
    explicit CdfEstimate(std::vector<double> values);

    std::span<const double> sorted() const noexcept { return sorted_; }
    std::size_t size() const noexcept { return sorted_.size(); }

    double operator()(double x) const;
    double mean() const;
    double median() const;
    double min() const;
    double max() const;

private:
    std::vector<double> sorted_;
};

struct VariantResult {
    MarketVariant variant;
    std::vector<TrialRecord> trials;
    CdfEstimate cdf;
};

struct StudyResult {
    std::vector<VariantResult> variants;
};

/// A trial whose optimisation failed; carries what is needed to replay it.
class TrialFailure : public std::runtime_error {
public:
    TrialFailure(std::size_t trial_index, std::uint64_t seed, const std::string& cause);

    std::size_t trial_index() const noexcept { return trial_index_; }
    std::uint64_t seed() const noexcept { return seed_; }

private:
    std::size_t trial_index_;
    std::uint64_t seed_;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Seed of the per-trial stream.
std::uint64_t trial_seed(std::uint64_t master_seed, std::size_t trial_index);

/// n notionals uniform on [-1, 1) from the stream seeded with `seed`.
Portfolio random_portfolio(std::uint64_t seed, std::size_t n);

/// Hedged vs. cash-only capital at risk for n_trials random portfolios. The
/// same portfolio sequence is reused for every variant.
StudyResult lmax_ratio_study(const StudyConfig& config, const LiquidMarket& full_market,
                             const TenorGrid& grid, const DiscountCurve& curve,
                             const PhysicalMeasure& measure);

struct SweepRow {
    std::size_t maturity;
    double opt_ask;
    double opt_bid;
    std::optional<double> van_ask;
    double van_bid;
    std::optional<double> interpolated;
};

/// Optimal and vanilla bounds plus the interpolated quote for m = 1..N.
std::vector<SweepRow> bounds_sweep(const LiquidMarket& market, const TenorGrid& grid,
                                   const DiscountCurve& curve,
                                   const Discretization& discretization = {});

}  // namespace cdsbounds
