#include "cdsbounds/study.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <random>
#include <thread>

#include "cdsbounds/errors.hpp"
#include "cdsbounds/vanilla_hedge.hpp"

namespace cdsbounds {

namespace {

constexpr std::array<std::size_t, 5> kVariantA{5, 9, 13, 17, 21};
constexpr std::array<std::size_t, 3> kVariantB{5, 13, 21};
constexpr std::array<std::size_t, 1> kVariantC{21};

}  // namespace

std::span<const std::size_t> variant_maturities(MarketVariant variant) {
    switch (variant) {
        case MarketVariant::A: return kVariantA;
        case MarketVariant::B: return kVariantB;
        case MarketVariant::C: return kVariantC;
    }
    return {};
}

char to_char(MarketVariant variant) {
    switch (variant) {
        case MarketVariant::A: return 'a';
        case MarketVariant::B: return 'b';
        case MarketVariant::C: return 'c';
    }
    return '?';
}

MarketVariant parse_variant(const std::string& text) {
    if (text == "a" || text == "A") return MarketVariant::A;
    if (text == "b" || text == "B") return MarketVariant::B;
    if (text == "c" || text == "C") return MarketVariant::C;
    throw ConfigurationError("unknown market variant '" + text + "' (expected a, b or c)");
}

// ---------------------------------------------------------------------------
// CdfEstimate

CdfEstimate::CdfEstimate(std::vector<double> values) : sorted_(std::move(values)) {
    std::sort(sorted_.begin(), sorted_.end());
}

double CdfEstimate::operator()(double x) const {
    if (sorted_.empty()) return 0.0;
    const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
    return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
}

double CdfEstimate::mean() const {
    if (sorted_.empty()) return std::nan("");
    double s = 0.0;
    for (double v : sorted_) s += v;
    return s / static_cast<double>(sorted_.size());
}

double CdfEstimate::median() const {
    if (sorted_.empty()) return std::nan("");
    const std::size_t n = sorted_.size();
    return n % 2 == 1 ? sorted_[n / 2] : 0.5 * (sorted_[n / 2 - 1] + sorted_[n / 2]);
}

double CdfEstimate::min() const {
    return sorted_.empty() ? std::nan("") : sorted_.front();
}

double CdfEstimate::max() const {
    return sorted_.empty() ? std::nan("") : sorted_.back();
}

// ---------------------------------------------------------------------------
// Random portfolios

TrialFailure::TrialFailure(std::size_t trial_index, std::uint64_t seed, const std::string& cause)
    : std::runtime_error("trial " + std::to_string(trial_index) + " (seed " +
                         std::to_string(seed) + ") failed: " + cause),
      trial_index_(trial_index), seed_(seed) {}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t master_seed, std::size_t trial_index) {
    return splitmix64(master_seed ^ splitmix64(static_cast<std::uint64_t>(trial_index)));
}

Portfolio random_portfolio(std::uint64_t seed, std::size_t n) {
    std::mt19937_64 engine(seed);
    std::vector<double> notionals(n);
    for (double& a : notionals) {
        const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
        a = 2.0 * u - 1.0;
    }
    return Portfolio(std::move(notionals));
}

// ---------------------------------------------------------------------------
// L_max ratio study

namespace {

struct TrialOutcome {
    Portfolio portfolio;
    std::uint64_t seed = 0;
    double unhedged = 0.0;
    std::vector<double> hedged;
};

double capital_at_risk(const HedgeProblem& problem, const PhysicalMeasure& measure,
                       double lambda, const QuadratureConfig& quad) {
    const HedgeSolution hedge = optimize_hedge(problem);
    if (hedge.status != LpStatus::Optimal) {
        throw ArbitrageError("superhedge LP unbounded");
    }
    return lambda * expected_payoff(problem.model(), hedge.position, measure, quad);
}

}  // namespace

StudyResult lmax_ratio_study(const StudyConfig& config, const LiquidMarket& full_market,
                             const TenorGrid& grid, const DiscountCurve& curve,
                             const PhysicalMeasure& measure) {
    if (config.n_trials < 1) throw ConfigurationError("study needs at least one trial");
    if (config.variants.empty()) throw ConfigurationError("study needs at least one variant");

    std::vector<LiquidMarket> markets;
    for (MarketVariant v : config.variants) {
        markets.push_back(full_market.restricted_to(variant_maturities(v)));
        markets.back().check_against(grid);
    }
    const LiquidMarket cash_only = full_market.without_quotes();

    std::vector<TrialOutcome> outcomes(config.n_trials);
    std::vector<std::exception_ptr> failures(config.n_trials);
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
        for (;;) {
            const std::size_t t = next.fetch_add(1);
            if (t >= config.n_trials) return;
            TrialOutcome& out = outcomes[t];
            out.seed = trial_seed(config.master_seed, t);
            try {
                out.portfolio = random_portfolio(out.seed, grid.size());
                out.unhedged = capital_at_risk(
                    HedgeProblem(out.portfolio, cash_only, grid, curve, config.discretization),
                    measure, config.lambda, config.quadrature);
                for (const LiquidMarket& market : markets) {
                    out.hedged.push_back(capital_at_risk(
                        HedgeProblem(out.portfolio, market, grid, curve, config.discretization),
                        measure, config.lambda, config.quadrature));
                }
            } catch (...) {
                failures[t] = std::current_exception();
            }
        }
    };

    std::size_t threads = config.threads;
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min(threads, config.n_trials);
    {
        std::vector<std::jthread> pool;
        for (std::size_t i = 1; i < threads; ++i) pool.emplace_back(worker);
        worker();
    }

    for (std::size_t t = 0; t < config.n_trials; ++t) {
        if (!failures[t]) continue;
        try {
            std::rethrow_exception(failures[t]);
        } catch (const std::exception& e) {
            throw TrialFailure(t, outcomes[t].seed, e.what());
        }
    }

    StudyResult result;
    for (std::size_t v = 0; v < config.variants.size(); ++v) {
        VariantResult vr;
        vr.variant = config.variants[v];
        std::vector<double> ratios;
        for (std::size_t t = 0; t < config.n_trials; ++t) {
            const TrialOutcome& o = outcomes[t];
            const double ratio = o.hedged[v] / o.unhedged;
            vr.trials.push_back({t, o.seed, o.portfolio, o.hedged[v], o.unhedged, ratio});
            ratios.push_back(ratio);
        }
        vr.cdf = CdfEstimate(std::move(ratios));
        result.variants.push_back(std::move(vr));
    }
    return result;
}

// ---------------------------------------------------------------------------
// Bounds sweep

std::vector<SweepRow> bounds_sweep(const LiquidMarket& market, const TenorGrid& grid,
                                   const DiscountCurve& curve,
                                   const Discretization& discretization) {
    std::vector<SweepRow> rows;
    for (std::size_t m = 1; m <= grid.size(); ++m) {
        const MaturityBounds opt = no_arbitrage_bounds(market, grid, curve, m, discretization);
        SweepRow row{m, opt.lub_ask, opt.glb_bid, std::nullopt, 0.0, std::nullopt};
        try {
            row.van_ask = vanilla_ask_bound(market, grid, curve, m).bound;
        } catch (const NotComputableError&) {
        }
        row.van_bid = vanilla_bid_bound(market, grid, curve, m).bound;
        try {
            row.interpolated = interpolated_upfront(market, grid, m);
        } catch (const InterpolationRangeError&) {
        } catch (const NoMarketError&) {
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace cdsbounds
