#include "cdsbounds/hedge_optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cdsbounds/errors.hpp"

namespace cdsbounds {

namespace {

constexpr double kBindingTolerance = 1e-7;

void append_row(HedgeProgram& program, const PayoffModel& model,
                const QuarterCoefficients& old_value, const PathPoint& path) {
    std::vector<double> row;
    row.reserve(1 + program.hedge_maturities.size());
    row.push_back(1.0);
    for (std::size_t m : program.hedge_maturities) row.push_back(model.cds_payoff(m, path));
    program.lp.add_row(row, -old_value.value(path));
    program.row_paths.push_back(path);
}

}  // namespace

HedgeProblem::HedgeProblem(Portfolio old_portfolio_, LiquidMarket market_, TenorGrid grid_,
                           DiscountCurve curve_, Discretization discretization_)
    : old_portfolio(std::move(old_portfolio_)), market(std::move(market_)),
      grid(std::move(grid_)), curve(curve_), discretization(discretization_) {
    if (old_portfolio.size() != grid.size()) {
        throw ConfigurationError("old portfolio has " + std::to_string(old_portfolio.size()) +
                                 " notionals, grid has " + std::to_string(grid.size()));
    }
    market.check_against(grid);
}

HedgeProgram build_constraints(const HedgeProblem& problem) {
    const PayoffModel model = problem.model();
    const QuarterCoefficients old_value(model,
                                        HedgedPosition{problem.old_portfolio, problem.old_cash});

    std::vector<double> objective{1.0};
    std::vector<std::size_t> maturities;
    for (const Quote& q : problem.market.quotes()) {
        objective.push_back(q.upfront);
        maturities.push_back(q.maturity);
    }
    HedgeProgram program{LinearProgram(std::move(objective)), {}, std::move(maturities)};

    const std::size_t n = model.size();
    const std::size_t interior = problem.discretization.interior_points_per_quarter;
    for (std::size_t k = 1; k <= n; ++k) {
        const double a = model.grid().time(k - 1);
        const double b = model.grid().time(k);
        for (double rho : {0.0, 1.0}) {
            append_row(program, model, old_value, model.right_limit(k, rho));
            for (std::size_t j = 1; j <= interior; ++j) {
                const double tau =
                    a + (b - a) * static_cast<double>(j) / static_cast<double>(interior + 1);
                append_row(program, model, old_value, PathPoint{k, tau, rho});
            }
            append_row(program, model, old_value, model.quarter_end(k, rho));
        }
    }
    append_row(program, model, old_value, model.survival_path());
    return program;
}

void add_path_rows(HedgeProgram& program, const HedgeProblem& problem, const PathPoint& path) {
    const PayoffModel model = problem.model();
    const QuarterCoefficients old_value(model,
                                        HedgedPosition{problem.old_portfolio, problem.old_cash});
    if (path.quarter == model.grid().survival_quarter()) {
        append_row(program, model, old_value, path);
        return;
    }
    for (double rho : {0.0, 1.0}) {
        append_row(program, model, old_value, PathPoint{path.quarter, path.tau, rho});
    }
}

HedgeSolution optimize_hedge(const HedgeProblem& problem) {
    const PayoffModel model = problem.model();
    const double tolerance = problem.discretization.refinement_tolerance;
    HedgeProgram program = build_constraints(problem);

    double residual = 0.0;
    for (std::size_t round = 0;; ++round) {
        const LpSolution lp = solve_lp(program.lp);
        HedgeSolution out;
        out.status = lp.status;
        out.refinement_rounds = round;
        out.lp_rows = program.lp.num_rows();
        if (lp.status != LpStatus::Optimal) return out;

        out.cash = lp.x[0];
        out.cost = lp.x[0];
        out.position = HedgedPosition{problem.old_portfolio, problem.old_cash + lp.x[0]};
        for (std::size_t i = 0; i < program.hedge_maturities.size(); ++i) {
            const std::size_t m = program.hedge_maturities[i];
            const double notional = lp.x[1 + i];
            out.hedge_notionals.push_back({m, notional});
            out.cost += *problem.market.quote_at(m) * notional;
            out.position.portfolio.add(m, notional);
        }

        const PathExtremum worst = path_minimum(model, out.position);
        residual = std::max(0.0, -worst.value);
        if (residual <= tolerance) {
            out.max_violation = residual;
            const QuarterCoefficients coeffs(model, out.position);
            for (std::size_t k = 1; k <= model.size(); ++k) {
                for (double rho : {0.0, 1.0}) {
                    const IntervalExtremum e = coeffs.interval_minimum(k, rho);
                    if (std::abs(e.value) <= kBindingTolerance) {
                        out.binding_paths.push_back(PathPoint{k, e.tau, rho});
                    }
                }
            }
            if (std::abs(coeffs.survival_value()) <= kBindingTolerance) {
                out.binding_paths.push_back(model.survival_path());
            }
            return out;
        }
        if (round >= problem.discretization.max_refinement_rounds) break;
        add_path_rows(program, problem, worst.path);
    }
    throw ConvergenceError("superhedge refinement did not converge; residual violation " +
                               std::to_string(residual),
                           residual);
}

MaturityBounds no_arbitrage_bounds(const LiquidMarket& market, const TenorGrid& grid,
                                   const DiscountCurve& curve, std::size_t m,
                                   const Discretization& discretization) {
    if (m < 1 || m > grid.size()) {
        throw IndexError("maturity index " + std::to_string(m) + " outside 1..N");
    }
    const std::size_t n = grid.size();
    HedgeSolution short_side = optimize_hedge(
        HedgeProblem(Portfolio::single(n, m, -1.0), market, grid, curve, discretization));
    HedgeSolution long_side = optimize_hedge(
        HedgeProblem(Portfolio::single(n, m, 1.0), market, grid, curve, discretization));
    if (short_side.status != LpStatus::Optimal || long_side.status != LpStatus::Optimal) {
        throw ArbitrageError("superhedge LP is unbounded at maturity " + std::to_string(m) +
                             ": the quoted upfronts admit an arbitrage");
    }
    const double ask = short_side.cost;
    const double bid = -long_side.cost;
    return MaturityBounds{m, bid, ask, std::move(short_side), std::move(long_side)};
}

}  // namespace cdsbounds
