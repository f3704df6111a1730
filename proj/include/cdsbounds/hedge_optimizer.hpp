/**
 * @file hedge_optimizer.hpp
 * @brief Cost-minimising static superhedge of a single-name CDS portfolio.
 *
 * Decision variables are the cash deposit beta and one notional per liquid
 * quote. The hedge cost beta + sum_m u_m alpha~_m is minimised subject to the
 * hedged position being non-negative on every path. The continuum of paths is
 * sampled on a per-quarter grid, and the exact closed-form path minimum of the
 * candidate position is then used to add cuts until no path is violated.
 */

#pragma once

#include <cstddef>
#include <vector>

#include "cdsbounds/linear_program.hpp"
#include "cdsbounds/market_model.hpp"
#include "cdsbounds/payoff.hpp"

namespace cdsbounds {

struct Discretization {
    std::size_t interior_points_per_quarter = 8;
    double refinement_tolerance = 1e-9;
    std::size_t max_refinement_rounds = 20;
};

struct HedgeProblem {
    HedgeProblem(Portfolio old_portfolio, LiquidMarket market, TenorGrid grid,
                 DiscountCurve curve, Discretization discretization = {});

    PayoffModel model() const { return PayoffModel(grid, curve, market.spread()); }

    Portfolio old_portfolio;
    /// Cash already attached to the old portfolio (zero unless shifted).
    double old_cash = 0.0;
    LiquidMarket market;
    TenorGrid grid;
    DiscountCurve curve;
    Discretization discretization;
};

/// Sampled LP together with the path each row was generated from.
struct HedgeProgram {
    LinearProgram lp;
    std::vector<PathPoint> row_paths;
    /// Liquid maturity behind decision variable 1 + i (variable 0 is beta).
    std::vector<std::size_t> hedge_maturities;
};

struct HedgeLeg {
    std::size_t maturity;
    double notional;
};

struct HedgeSolution {
    LpStatus status = LpStatus::Optimal;
    std::vector<HedgeLeg> hedge_notionals;
    double cash = 0.0;
    /// V = beta + sum_m u_m alpha~_m.
    double cost = 0.0;
    /// Paths where the hedged position is zero within 1e-7.
    std::vector<PathPoint> binding_paths;
    double max_violation = 0.0;
    std::size_t refinement_rounds = 0;
    std::size_t lp_rows = 0;
    /// alpha^Old + alpha~ with cash old_cash + beta.
    HedgedPosition position;
};

/// Rows at the right limit of T_{k-1}, at T_k and at equally spaced interior
/// points of every quarter, each for rho = 0 and rho = 1, plus the no-default
/// row.
HedgeProgram build_constraints(const HedgeProblem& problem);

/// Appends the pair of rows (rho = 0, 1) for the default time of `path`.
void add_path_rows(HedgeProgram& program, const HedgeProblem& problem, const PathPoint& path);

HedgeSolution optimize_hedge(const HedgeProblem& problem);

struct MaturityBounds {
    std::size_t maturity;
    /// u_{L,0} = -V_L, from the long-protection (+1) old position.
    double glb_bid;
    /// u_{S,0} = V_S, from the short-protection (-1) old position.
    double lub_ask;
    HedgeSolution short_side;
    HedgeSolution long_side;
};

/// Throws ArbitrageError when the quoted market makes the LP unbounded.
MaturityBounds no_arbitrage_bounds(const LiquidMarket& market, const TenorGrid& grid,
                                   const DiscountCurve& curve, std::size_t m,
                                   const Discretization& discretization = {});

}  // namespace cdsbounds
