/**
 * @file payoff.hpp
 * @brief Discounted payoff streams of single CDSs, portfolios and hedged
 *        positions along a default path (tau, rho).
 */

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cdsbounds/market_model.hpp"

namespace cdsbounds {

/// A default path. `quarter` is I(tau) and is carried explicitly so that the
/// right limit at T_{k-1} can be represented exactly as {k, T_{k-1}, rho}.
/// quarter == N + 1 is the path with no default before T_N.
struct PathPoint {
    std::size_t quarter;
    double tau;
    double rho;

    bool operator==(const PathPoint&) const = default;
};

/// Grid, discounting and the common running spread, with d_k and T_{m,0} cached.
class PayoffModel {
public:
    PayoffModel(TenorGrid grid, DiscountCurve curve, double spread);

    const TenorGrid& grid() const noexcept { return grid_; }
    const DiscountCurve& curve() const noexcept { return curve_; }
    double spread() const noexcept { return spread_; }
    std::size_t size() const noexcept { return grid_.size(); }

    /// d_k = exp(-r T_k).
    double discount(std::size_t k) const { return discount_[k]; }

    /// T_{m,0} = sum_{k<=m} (T_k - T_{k-1}) d_k; T_{0,0} = 0.
    double full_accrual(std::size_t m) const;

    /// T_m(tau), the discounted premium accrual up to default or maturity.
    double accrual(std::size_t m, double tau) const;

    /// Delta_m(tau, rho) for unit long protection.
    double cds_payoff(std::size_t m, double tau, double rho) const;

    /// Delta_m along an explicit path (handles right limits and survival).
    double cds_payoff(std::size_t m, const PathPoint& path) const;

    PathPoint path_at(double tau, double rho) const;
    PathPoint survival_path() const;

    /// Right limit tau -> T_{k-1}^+ inside quarter k.
    PathPoint right_limit(std::size_t k, double rho) const;

    /// The right end T_k of quarter k.
    PathPoint quarter_end(std::size_t k, double rho) const;

private:
    TenorGrid grid_;
    DiscountCurve curve_;
    double spread_;
    std::vector<double> discount_;      // d_0..d_N
    std::vector<double> full_accrual_;  // T_{0,0}..T_{N,0}
};

/// Net notional per maturity, alpha_1..alpha_N (long protection positive).
class Portfolio {
public:
    Portfolio() = default;
    explicit Portfolio(std::vector<double> notionals);

    static Portfolio zeros(std::size_t n);
    static Portfolio single(std::size_t n, std::size_t maturity, double notional);

    std::size_t size() const noexcept { return notionals_.size(); }

    /// alpha_m, 1-based.
    double notional(std::size_t m) const;
    void add(std::size_t m, double amount);

    std::span<const double> notionals() const noexcept { return notionals_; }

    Portfolio scaled(double factor) const;

    bool operator==(const Portfolio&) const = default;

private:
    std::vector<double> notionals_;
};

/// Portfolio plus cash: Delta = beta + sum_m alpha_m Delta_m.
struct HedgedPosition {
    Portfolio portfolio;
    double cash = 0.0;
};

/// Delta(tau, rho) by direct summation over contracts.
double position_value(const PayoffModel& model, const HedgedPosition& position, double tau,
                      double rho);
double position_value(const PayoffModel& model, const HedgedPosition& position,
                      const PathPoint& path);

struct IntervalExtremum {
    double value;
    double tau;
};

struct PathExtremum {
    double value;
    PathPoint path;
};

/// Per-quarter regrouping of a hedged position. For tau in (T_{k-1}, T_k]
///
///     Delta(tau, rho) = A_k + (B_k (tau - T_{k-1}) + (1 - rho) G_k) exp(-r tau)
///
/// with G_k = sum_{m>=k} alpha_m, B_k = -w G_k and
/// A_k = beta - w sum_{m<k} alpha_m T_{m,0} - w T_{k-1,0} G_k.
class QuarterCoefficients {
public:
    QuarterCoefficients(const PayoffModel& model, const HedgedPosition& position);

    std::size_t size() const noexcept { return constant_.size() - 1; }
    double constant(std::size_t k) const { return constant_[k]; }
    double slope(std::size_t k) const { return slope_[k]; }
    double loss_base(std::size_t k) const { return loss_base_[k]; }

    /// Value on the no-default path, beta - w sum_m alpha_m T_{m,0}.
    double survival_value() const noexcept { return survival_value_; }

    double value(const PathPoint& path) const;

    /// Infimum / supremum over tau in (T_{k-1}, T_k] at fixed rho. The
    /// candidates are the right limit at T_{k-1}, the value at T_k and the
    /// stationary point T_{k-1} + 1/r - C/B when it falls strictly inside.
    IntervalExtremum interval_minimum(std::size_t k, double rho) const;
    IntervalExtremum interval_maximum(std::size_t k, double rho) const;

private:
    IntervalExtremum interval_extremum(std::size_t k, double rho, bool maximize) const;

    std::vector<double> times_;
    double rate_;
    std::vector<double> constant_;   // index 1..N
    std::vector<double> slope_;
    std::vector<double> loss_base_;
    double survival_value_ = 0.0;
};

/// Exact global infimum of Delta over tau > 0, rho in [0, 1]. Affinity in rho
/// means only rho in {0, 1} has to be scanned.
PathExtremum path_minimum(const PayoffModel& model, const HedgedPosition& position);
PathExtremum path_maximum(const PayoffModel& model, const HedgedPosition& position);

}  // namespace cdsbounds
