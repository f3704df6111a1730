/**
 * @file market_model.hpp
 * @brief Tenor grid, flat discounting, liquid CDS quotes and the physical
 *        default/recovery measure.
 */

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace cdsbounds {

inline constexpr double kQuarterYear = 0.25;

/// Quarterly premium dates T_0 = 0 < T_1 < ... < T_N.
///
/// The first period T_1 - T_0 may be shorter than a quarter; every later
/// period is exactly a quarter year. Index k = N + 1 is used throughout the
/// library to label the "no default before T_N" path.
class TenorGrid {
public:
    explicit TenorGrid(std::size_t n_quarters = 21, double first_period = kQuarterYear);

    /// Number of premium dates N.
    std::size_t size() const noexcept { return times_.size() - 1; }

    /// T_k for k = 0..N.
    double time(std::size_t k) const;

    /// T_0..T_N (N + 1 entries).
    std::span<const double> times() const noexcept { return times_; }

    /// T_1..T_N.
    std::span<const double> payment_times() const noexcept {
        return std::span<const double>(times_).subspan(1);
    }

    double first_period() const noexcept { return times_[1]; }
    double horizon() const noexcept { return times_.back(); }

    /// I(tau): the k with tau in (T_{k-1}, T_k]; N + 1 for tau > T_N.
    std::size_t quarter_of(double tau) const;

    std::size_t survival_quarter() const noexcept { return size() + 1; }

    bool operator==(const TenorGrid&) const = default;

private:
    std::vector<double> times_;
};

/// Flat continuously compounded discounting d(t) = exp(-r t).
class DiscountCurve {
public:
    explicit DiscountCurve(double rate = 0.02);

    double rate() const noexcept { return rate_; }
    double factor(double t) const;

private:
    double rate_;
};

/// Upfront quote of a liquid contract, as a decimal of notional.
struct Quote {
    std::size_t maturity;  // quarter index m(p)
    double upfront;        // u_m
};

/// Liquid CDS market for one reference name: a common running spread and a
/// (possibly empty) set of upfront quotes at distinct maturities.
class LiquidMarket {
public:
    LiquidMarket(double spread, std::vector<Quote> quotes);

    double spread() const noexcept { return spread_; }
    std::span<const Quote> quotes() const noexcept { return quotes_; }
    bool empty() const noexcept { return quotes_.empty(); }
    std::size_t size() const noexcept { return quotes_.size(); }

    std::vector<std::size_t> maturities() const;
    std::optional<double> quote_at(std::size_t maturity) const;

    /// Same spread, quotes restricted to the given maturities. Every
    /// requested maturity must be quoted.
    LiquidMarket restricted_to(std::span<const std::size_t> maturities) const;

    /// Same spread, no quotes (the cash-only hedge set).
    LiquidMarket without_quotes() const { return LiquidMarket(spread_, {}); }

    /// Throws IndexError if any quote lies beyond the grid.
    void check_against(const TenorGrid& grid) const;

private:
    double spread_;
    std::vector<Quote> quotes_;
};

/// Normal(mu, sigma) restricted to [0, 1] and renormalised.
class TruncatedNormalRecovery {
public:
    TruncatedNormalRecovery(double mu, double sigma);

    double mu() const noexcept { return mu_; }
    double sigma() const noexcept { return sigma_; }

    /// Standard-normal mass of [(0 - mu)/sigma, (1 - mu)/sigma].
    double normalization() const noexcept { return z_; }

    double pdf(double rho) const;
    double cdf(double rho) const;
    double mean() const;

private:
    double mu_;
    double sigma_;
    double lower_cdf_;
    double z_;
};

struct ConstantRecovery {
    double value;
};

using RecoveryLaw = std::variant<TruncatedNormalRecovery, ConstantRecovery>;

/// Unit point mass, returned where a density has no finite value.
struct PointMass {
    double at;
};

/// Constant hazard rate for the default time and an independent recovery law.
class PhysicalMeasure {
public:
    PhysicalMeasure(double hazard_rate, RecoveryLaw recovery);

    double hazard_rate() const noexcept { return hazard_; }
    const RecoveryLaw& recovery() const noexcept { return recovery_; }
    bool has_random_recovery() const noexcept;

    double survival(double t) const;

    /// P(a < tau <= b).
    double default_probability(double a, double b) const;

    double mean_recovery() const;

private:
    double hazard_;
    RecoveryLaw recovery_;
};

/// h = -ln(1 - PD_1).
double hazard_from_pd1(double pd1);

/// P_k = exp(-h T_{k-1}) - exp(-h T_k), 1 <= k <= N.
double default_interval_probability(const PhysicalMeasure& measure, const TenorGrid& grid,
                                    std::size_t k);

/// gamma(rho): a finite density for the truncated normal, a point mass for a
/// constant recovery.
std::variant<double, PointMass> recovery_density(const PhysicalMeasure& measure, double rho);

/// Linear interpolation in maturity index between bracketing liquid quotes.
/// No extrapolation outside [first quoted, last quoted].
double interpolated_upfront(const LiquidMarket& market, const TenorGrid& grid, std::size_t m);

double standard_normal_pdf(double x);
double standard_normal_cdf(double x);

}  // namespace cdsbounds
