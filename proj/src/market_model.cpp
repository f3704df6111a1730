#include "cdsbounds/market_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <type_traits>

#include "cdsbounds/errors.hpp"

namespace cdsbounds {

double standard_normal_pdf(double x) {
    return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
}

double standard_normal_cdf(double x) {
    return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

// ---------------------------------------------------------------------------
// TenorGrid

TenorGrid::TenorGrid(std::size_t n_quarters, double first_period) {
    if (n_quarters < 1) {
        throw ConfigurationError("tenor grid needs at least one premium date");
    }
    if (!(first_period > 0.0 && first_period <= kQuarterYear)) {
        throw ConfigurationError("first premium period must lie in (0, 0.25]");
    }
    times_.resize(n_quarters + 1);
    times_[0] = 0.0;
    for (std::size_t k = 1; k <= n_quarters; ++k) {
        times_[k] = first_period + kQuarterYear * static_cast<double>(k - 1);
    }
}

double TenorGrid::time(std::size_t k) const {
    if (k >= times_.size()) {
        throw IndexError("tenor index " + std::to_string(k) + " beyond T_N");
    }
    return times_[k];
}

std::size_t TenorGrid::quarter_of(double tau) const {
    if (!(tau > 0.0)) {
        throw DomainError("default time must be positive");
    }
    auto it = std::lower_bound(times_.begin() + 1, times_.end(), tau);
    return static_cast<std::size_t>(it - times_.begin());
}

// ---------------------------------------------------------------------------
// DiscountCurve

DiscountCurve::DiscountCurve(double rate) : rate_(rate) {
    if (!(rate >= 0.0) || !std::isfinite(rate)) {
        throw ConfigurationError("risk-free rate must be finite and non-negative");
    }
}

double DiscountCurve::factor(double t) const {
    return std::exp(-rate_ * t);
}

// ---------------------------------------------------------------------------
// LiquidMarket

LiquidMarket::LiquidMarket(double spread, std::vector<Quote> quotes)
    : spread_(spread), quotes_(std::move(quotes)) {
    if (!std::isfinite(spread_) || spread_ < 0.0) {
        throw ConfigurationError("running spread must be finite and non-negative");
    }
    for (std::size_t i = 0; i < quotes_.size(); ++i) {
        if (quotes_[i].maturity < 1) {
            throw IndexError("liquid maturities are quarter indices >= 1");
        }
        if (!std::isfinite(quotes_[i].upfront)) {
            throw ConfigurationError("upfront quote must be finite");
        }
        if (i > 0 && quotes_[i].maturity <= quotes_[i - 1].maturity) {
            throw ConfigurationError("liquid maturities must be distinct and sorted");
        }
    }
}

std::vector<std::size_t> LiquidMarket::maturities() const {
    std::vector<std::size_t> out;
    out.reserve(quotes_.size());
    for (const auto& q : quotes_) out.push_back(q.maturity);
    return out;
}

std::optional<double> LiquidMarket::quote_at(std::size_t maturity) const {
    auto it = std::lower_bound(quotes_.begin(), quotes_.end(), maturity,
                               [](const Quote& q, std::size_t m) { return q.maturity < m; });
    if (it != quotes_.end() && it->maturity == maturity) return it->upfront;
    return std::nullopt;
}

LiquidMarket LiquidMarket::restricted_to(std::span<const std::size_t> maturities) const {
    std::vector<Quote> kept;
    for (std::size_t m : maturities) {
        auto u = quote_at(m);
        if (!u) {
            throw ConfigurationError("maturity " + std::to_string(m) + " is not quoted");
        }
        kept.push_back({m, *u});
    }
    std::sort(kept.begin(), kept.end(),
              [](const Quote& a, const Quote& b) { return a.maturity < b.maturity; });
    return LiquidMarket(spread_, std::move(kept));
}

void LiquidMarket::check_against(const TenorGrid& grid) const {
    for (const auto& q : quotes_) {
        if (q.maturity > grid.size()) {
            throw IndexError("liquid maturity " + std::to_string(q.maturity) +
                             " beyond the tenor grid");
        }
    }
}

// ---------------------------------------------------------------------------
// Recovery laws

TruncatedNormalRecovery::TruncatedNormalRecovery(double mu, double sigma)
    : mu_(mu), sigma_(sigma) {
    if (!(sigma > 0.0) || !std::isfinite(mu) || !std::isfinite(sigma)) {
        throw ConfigurationError("truncated normal needs finite mu and sigma > 0");
    }
    lower_cdf_ = standard_normal_cdf((0.0 - mu_) / sigma_);
    z_ = standard_normal_cdf((1.0 - mu_) / sigma_) - lower_cdf_;
    if (!(z_ > 0.0)) {
        throw ConfigurationError("truncated normal has no mass on [0, 1]");
    }
}

double TruncatedNormalRecovery::pdf(double rho) const {
    if (rho < 0.0 || rho > 1.0) return 0.0;
    return standard_normal_pdf((rho - mu_) / sigma_) / (sigma_ * z_);
}

double TruncatedNormalRecovery::cdf(double rho) const {
    if (rho <= 0.0) return 0.0;
    if (rho >= 1.0) return 1.0;
    return (standard_normal_cdf((rho - mu_) / sigma_) - lower_cdf_) / z_;
}

double TruncatedNormalRecovery::mean() const {
    const double a = (0.0 - mu_) / sigma_;
    const double b = (1.0 - mu_) / sigma_;
    return mu_ + sigma_ * (standard_normal_pdf(a) - standard_normal_pdf(b)) / z_;
}

PhysicalMeasure::PhysicalMeasure(double hazard_rate, RecoveryLaw recovery)
    : hazard_(hazard_rate), recovery_(std::move(recovery)) {
    if (!(hazard_ > 0.0) || !std::isfinite(hazard_)) {
        throw ConfigurationError("hazard rate must be positive and finite");
    }
    if (const auto* c = std::get_if<ConstantRecovery>(&recovery_)) {
        if (!(c->value >= 0.0 && c->value <= 1.0)) {
            throw ConfigurationError("constant recovery must lie in [0, 1]");
        }
    }
}

bool PhysicalMeasure::has_random_recovery() const noexcept {
    return std::holds_alternative<TruncatedNormalRecovery>(recovery_);
}

double PhysicalMeasure::survival(double t) const {
    return std::exp(-hazard_ * t);
}

double PhysicalMeasure::default_probability(double a, double b) const {
    // -expm1 keeps short subintervals accurate.
    return survival(a) * -std::expm1(-hazard_ * (b - a));
}

double PhysicalMeasure::mean_recovery() const {
    return std::visit(
        [](const auto& law) {
            if constexpr (std::is_same_v<std::decay_t<decltype(law)>, ConstantRecovery>) {
                return law.value;
            } else {
                return law.mean();
            }
        },
        recovery_);
}

// ---------------------------------------------------------------------------
// Free operations

double hazard_from_pd1(double pd1) {
    if (!(pd1 > 0.0 && pd1 < 1.0)) {
        throw DomainError("one-year default probability must lie in (0, 1)");
    }
    return -std::log1p(-pd1);
}

double default_interval_probability(const PhysicalMeasure& measure, const TenorGrid& grid,
                                    std::size_t k) {
    if (k < 1 || k > grid.size()) {
        throw IndexError("quarter index " + std::to_string(k) + " outside 1..N");
    }
    return measure.default_probability(grid.time(k - 1), grid.time(k));
}

std::variant<double, PointMass> recovery_density(const PhysicalMeasure& measure, double rho) {
    if (!(rho >= 0.0 && rho <= 1.0)) {
        throw DomainError("recovery rate must lie in [0, 1]");
    }
    if (const auto* c = std::get_if<ConstantRecovery>(&measure.recovery())) {
        return PointMass{c->value};
    }
    return std::get<TruncatedNormalRecovery>(measure.recovery()).pdf(rho);
}

double interpolated_upfront(const LiquidMarket& market, const TenorGrid& grid, std::size_t m) {
    if (market.empty()) {
        throw NoMarketError("no liquid quotes to interpolate");
    }
    if (m < 1 || m > grid.size()) {
        throw IndexError("maturity index " + std::to_string(m) + " outside 1..N");
    }
    const auto quotes = market.quotes();
    if (m < quotes.front().maturity || m > quotes.back().maturity) {
        throw InterpolationRangeError("maturity " + std::to_string(m) +
                                      " outside the quoted range");
    }
    auto hi = std::lower_bound(quotes.begin(), quotes.end(), m,
                               [](const Quote& q, std::size_t v) { return q.maturity < v; });
    if (hi->maturity == m) return hi->upfront;
    auto lo = std::prev(hi);
    const double t = static_cast<double>(m - lo->maturity) /
                     static_cast<double>(hi->maturity - lo->maturity);
    return lo->upfront + t * (hi->upfront - lo->upfront);
}

}  // namespace cdsbounds
