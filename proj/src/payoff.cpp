#include "cdsbounds/payoff.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "cdsbounds/errors.hpp"

namespace cdsbounds {

namespace {

void check_rho(double rho) {
    if (!(rho >= 0.0 && rho <= 1.0)) {
        throw DomainError("recovery rate must lie in [0, 1]");
    }
}

void check_quarter(const PathPoint& path, std::size_t n) {
    if (path.quarter < 1 || path.quarter > n + 1) {
        throw IndexError("path quarter " + std::to_string(path.quarter) + " outside 1..N+1");
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// PayoffModel

PayoffModel::PayoffModel(TenorGrid grid, DiscountCurve curve, double spread)
    : grid_(std::move(grid)), curve_(curve), spread_(spread) {
    if (!std::isfinite(spread_) || spread_ < 0.0) {
        throw ConfigurationError("running spread must be finite and non-negative");
    }
    const std::size_t n = grid_.size();
    discount_.resize(n + 1);
    full_accrual_.resize(n + 1);
    discount_[0] = 1.0;
    full_accrual_[0] = 0.0;
    for (std::size_t k = 1; k <= n; ++k) {
        discount_[k] = curve_.factor(grid_.time(k));
        full_accrual_[k] =
            full_accrual_[k - 1] + (grid_.time(k) - grid_.time(k - 1)) * discount_[k];
    }
}

double PayoffModel::full_accrual(std::size_t m) const {
    if (m > grid_.size()) {
        throw IndexError("maturity index " + std::to_string(m) + " beyond N");
    }
    return full_accrual_[m];
}

double PayoffModel::accrual(std::size_t m, double tau) const {
    if (m < 1 || m > grid_.size()) {
        throw IndexError("maturity index " + std::to_string(m) + " outside 1..N");
    }
    const std::size_t q = grid_.quarter_of(tau);
    if (q > m) return full_accrual_[m];
    return full_accrual_[q - 1] + (tau - grid_.time(q - 1)) * curve_.factor(tau);
}

double PayoffModel::cds_payoff(std::size_t m, double tau, double rho) const {
    check_rho(rho);
    if (m < 1 || m > grid_.size()) {
        throw IndexError("maturity index " + std::to_string(m) + " outside 1..N");
    }
    return cds_payoff(m, path_at(tau, rho));
}

double PayoffModel::cds_payoff(std::size_t m, const PathPoint& path) const {
    const std::size_t q = path.quarter;
    if (q > m) return -spread_ * full_accrual_[m];
    const double d = curve_.factor(path.tau);
    const double accrued = full_accrual_[q - 1] + (path.tau - grid_.time(q - 1)) * d;
    return -spread_ * accrued + (1.0 - path.rho) * d;
}

PathPoint PayoffModel::path_at(double tau, double rho) const {
    return {grid_.quarter_of(tau), tau, rho};
}

PathPoint PayoffModel::survival_path() const {
    return {grid_.survival_quarter(), std::numeric_limits<double>::infinity(), 1.0};
}

PathPoint PayoffModel::right_limit(std::size_t k, double rho) const {
    return {k, grid_.time(k - 1), rho};
}

PathPoint PayoffModel::quarter_end(std::size_t k, double rho) const {
    return {k, grid_.time(k), rho};
}

// ---------------------------------------------------------------------------
// Portfolio

Portfolio::Portfolio(std::vector<double> notionals) : notionals_(std::move(notionals)) {
    for (double a : notionals_) {
        if (!std::isfinite(a)) throw ConfigurationError("portfolio notionals must be finite");
    }
}

Portfolio Portfolio::zeros(std::size_t n) {
    return Portfolio(std::vector<double>(n, 0.0));
}

Portfolio Portfolio::single(std::size_t n, std::size_t maturity, double notional) {
    Portfolio p = zeros(n);
    p.add(maturity, notional);
    return p;
}

double Portfolio::notional(std::size_t m) const {
    if (m < 1 || m > notionals_.size()) {
        throw IndexError("maturity index " + std::to_string(m) + " outside 1..N");
    }
    return notionals_[m - 1];
}

void Portfolio::add(std::size_t m, double amount) {
    if (m < 1 || m > notionals_.size()) {
        throw IndexError("maturity index " + std::to_string(m) + " outside 1..N");
    }
    notionals_[m - 1] += amount;
}

Portfolio Portfolio::scaled(double factor) const {
    Portfolio p = *this;
    for (double& a : p.notionals_) a *= factor;
    return p;
}

// ---------------------------------------------------------------------------
// Position values

double position_value(const PayoffModel& model, const HedgedPosition& position, double tau,
                      double rho) {
    check_rho(rho);
    return position_value(model, position, model.path_at(tau, rho));
}

double position_value(const PayoffModel& model, const HedgedPosition& position,
                      const PathPoint& path) {
    const std::size_t n = model.size();
    if (position.portfolio.size() != n) {
        throw ConfigurationError("portfolio has " + std::to_string(position.portfolio.size()) +
                                 " notionals, grid has " + std::to_string(n));
    }
    check_quarter(path, n);
    const auto alpha = position.portfolio.notionals();
    double value = position.cash;
    for (std::size_t m = 1; m <= n; ++m) {
        if (alpha[m - 1] != 0.0) value += alpha[m - 1] * model.cds_payoff(m, path);
    }
    return value;
}

// ---------------------------------------------------------------------------
// QuarterCoefficients

QuarterCoefficients::QuarterCoefficients(const PayoffModel& model,
                                         const HedgedPosition& position)
    : times_(model.grid().times().begin(), model.grid().times().end()),
      rate_(model.curve().rate()) {
    const std::size_t n = model.size();
    if (position.portfolio.size() != n) {
        throw ConfigurationError("portfolio length does not match the tenor grid");
    }
    const auto alpha = position.portfolio.notionals();
    const double w = model.spread();

    constant_.assign(n + 1, 0.0);
    slope_.assign(n + 1, 0.0);
    loss_base_.assign(n + 1, 0.0);

    double suffix = 0.0;
    for (std::size_t k = n; k >= 1; --k) {
        suffix += alpha[k - 1];
        loss_base_[k] = suffix;
    }
    double matured = 0.0;  // sum_{m<k} alpha_m T_{m,0}
    for (std::size_t k = 1; k <= n; ++k) {
        const double g = loss_base_[k];
        slope_[k] = -w * g;
        constant_[k] = position.cash - w * matured - w * model.full_accrual(k - 1) * g;
        matured += alpha[k - 1] * model.full_accrual(k);
    }
    survival_value_ = position.cash - w * matured;
}

double QuarterCoefficients::value(const PathPoint& path) const {
    const std::size_t n = size();
    check_quarter(path, n);
    if (path.quarter == n + 1) return survival_value_;
    const std::size_t k = path.quarter;
    const double s = path.tau - times_[k - 1];
    return constant_[k] +
           (slope_[k] * s + (1.0 - path.rho) * loss_base_[k]) * std::exp(-rate_ * path.tau);
}

IntervalExtremum QuarterCoefficients::interval_minimum(std::size_t k, double rho) const {
    return interval_extremum(k, rho, false);
}

IntervalExtremum QuarterCoefficients::interval_maximum(std::size_t k, double rho) const {
    return interval_extremum(k, rho, true);
}

IntervalExtremum QuarterCoefficients::interval_extremum(std::size_t k, double rho,
                                                        bool maximize) const {
    if (k < 1 || k > size()) {
        throw IndexError("quarter index " + std::to_string(k) + " outside 1..N");
    }
    const double a = times_[k - 1];
    const double b = times_[k];
    const double big_a = constant_[k];
    const double big_b = slope_[k];
    const double big_c = (1.0 - rho) * loss_base_[k];
    auto g = [&](double tau) {
        return big_a + (big_b * (tau - a) + big_c) * std::exp(-rate_ * tau);
    };

    IntervalExtremum best{g(a), a};
    auto consider = [&](double tau) {
        const double v = g(tau);
        if (maximize ? v > best.value : v < best.value) best = {v, tau};
    };
    consider(b);
    if (big_b != 0.0 && rate_ > 0.0) {
        const double s_star = 1.0 / rate_ - big_c / big_b;
        if (s_star > 0.0 && s_star < b - a) consider(a + s_star);
    }
    return best;
}

// ---------------------------------------------------------------------------
// Global extrema

namespace {

PathExtremum scan_paths(const PayoffModel& model, const HedgedPosition& position,
                        bool maximize) {
    const QuarterCoefficients coeffs(model, position);
    const std::size_t n = model.size();
    PathExtremum best{coeffs.survival_value(), model.survival_path()};
    for (std::size_t k = 1; k <= n; ++k) {
        for (double rho : {0.0, 1.0}) {
            const IntervalExtremum e =
                maximize ? coeffs.interval_maximum(k, rho) : coeffs.interval_minimum(k, rho);
            if (maximize ? e.value > best.value : e.value < best.value) {
                best = {e.value, PathPoint{k, e.tau, rho}};
            }
        }
    }
    return best;
}

}  // namespace

PathExtremum path_minimum(const PayoffModel& model, const HedgedPosition& position) {
    return scan_paths(model, position, false);
}

PathExtremum path_maximum(const PayoffModel& model, const HedgedPosition& position) {
    return scan_paths(model, position, true);
}

}  // namespace cdsbounds
