/**
 * @file valuation.hpp
 * @brief Physical-measure expectations, fair prices, capital at risk and
 *        bid/ask ranges for hedged CDS positions.
 */

#pragma once

#include <cstddef>
#include <functional>

#include "cdsbounds/hedge_optimizer.hpp"
#include "cdsbounds/market_model.hpp"
#include "cdsbounds/payoff.hpp"

namespace cdsbounds {

struct QuadratureConfig {
    /// Gauss-Legendre nodes per quarter in tau; at least 2.
    std::size_t tau_nodes_per_quarter = 16;
    /// Gauss-Legendre nodes on [0, 1] for functionals that are not affine in rho.
    std::size_t rho_nodes = 64;
};

/// E[Delta] under the physical measure. Uses affinity in rho, so only the
/// mean recovery enters; per-quarter weights are rescaled to the exact P_k.
double expected_payoff(const PayoffModel& model, const HedgedPosition& position,
                       const PhysicalMeasure& measure, const QuadratureConfig& quad = {});

/// E[f(path)] for an arbitrary functional of the path, with quadrature in
/// both tau and rho (a single node at a constant recovery).
double expectation(const PayoffModel& model, const PhysicalMeasure& measure,
                   const QuadratureConfig& quad,
                   const std::function<double(const PathPoint&)>& functional);

struct PayoffMoments {
    double mean;
    double variance;
};

PayoffMoments payoff_moments(const PayoffModel& model, const HedgedPosition& position,
                             const PhysicalMeasure& measure, const QuadratureConfig& quad = {});

struct FairPrice {
    double value;
    /// lambda <= 0: the buyer can lock in an arbitrage at this price.
    bool arbitrage;
};

/// FP(lambda) = V_GLB + lambda * E[Delta].
FairPrice fair_price(double glb, double lambda, double expected_payoff);

/// lambda = 1 / (1 + R).
double lambda_from_return(double target_return);

/// R = 1 / lambda - 1.
double expected_return_from_lambda(double lambda);

struct ValuationResult {
    double expected_payoff;
    /// V_GLB = -V.
    double glb;
    double lambda;
    double fair_price;
    /// L_max = lambda * E[Delta].
    double max_loss;
    double expected_return;
    bool arbitrage;
};

ValuationResult value_position(double hedge_cost, double lambda, double expected_payoff);

struct PortfolioValuation {
    HedgeSolution hedge;
    ValuationResult valuation;
};

/// Superhedges the problem's old portfolio and values the hedged position.
PortfolioValuation value_portfolio(const HedgeProblem& problem, const PhysicalMeasure& measure,
                                   double lambda, const QuadratureConfig& quad = {});

/// Psi = Delta - lambda * E[Delta].
double profit_and_loss(const PayoffModel& model, const HedgedPosition& position, double lambda,
                       double expected_payoff, const PathPoint& path);

/// R_T = (Delta - lambda E[Delta]) / (lambda E[Delta]).
double realized_return(const PayoffModel& model, const HedgedPosition& position, double lambda,
                       double expected_payoff, const PathPoint& path);

struct BidAskRange {
    std::size_t maturity;
    double lub_ask;
    double glb_bid;
    double expected_short;  // E[Delta_S]
    double expected_long;   // E[Delta_L]
    double lambda_short;
    double lambda_long;

    double ask_at(double lambda) const { return lub_ask - lambda * expected_short; }
    double bid_at(double lambda) const { return glb_bid + lambda * expected_long; }
    double ask() const { return ask_at(lambda_short); }
    double bid() const { return bid_at(lambda_long); }
};

BidAskRange bid_ask_range(const LiquidMarket& market, const TenorGrid& grid,
                          const DiscountCurve& curve, const PhysicalMeasure& measure,
                          std::size_t m, double lambda_short, double lambda_long,
                          const QuadratureConfig& quad = {},
                          const Discretization& discretization = {});

}  // namespace cdsbounds
