#include "cdsbounds/valuation.hpp"

#include <cmath>
#include <vector>

#include "cdsbounds/errors.hpp"
#include "cdsbounds/quadrature.hpp"

namespace cdsbounds {

namespace {

void check_quadrature(const QuadratureConfig& quad) {
    if (quad.tau_nodes_per_quarter < 2) {
        throw ConfigurationError("tau quadrature needs at least 2 nodes per quarter");
    }
    if (quad.rho_nodes < 1) {
        throw ConfigurationError("rho quadrature needs at least 1 node");
    }
}

struct WeightedNode {
    double x;
    double weight;
};

/// Default-time nodes of quarter k with weights summing to P_k.
std::vector<WeightedNode> tau_nodes(const GaussLegendre& rule, const PhysicalMeasure& measure,
                                    double a, double b) {
    std::vector<WeightedNode> nodes;
    nodes.reserve(rule.size());
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    const double h = measure.hazard_rate();
    double total = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
        const double tau = mid + half * rule.nodes()[i];
        const double w = half * rule.weights()[i] * h * std::exp(-h * tau);
        nodes.push_back({tau, w});
        total += w;
    }
    const double exact = measure.default_probability(a, b);
    for (auto& n : nodes) n.weight *= exact / total;
    return nodes;
}

std::vector<WeightedNode> rho_nodes(const PhysicalMeasure& measure, std::size_t count) {
    if (const auto* c = std::get_if<ConstantRecovery>(&measure.recovery())) {
        return {{c->value, 1.0}};
    }
    const auto& law = std::get<TruncatedNormalRecovery>(measure.recovery());
    const GaussLegendre rule(count);
    std::vector<WeightedNode> nodes;
    double total = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
        const double rho = 0.5 + 0.5 * rule.nodes()[i];
        const double w = 0.5 * rule.weights()[i] * law.pdf(rho);
        nodes.push_back({rho, w});
        total += w;
    }
    for (auto& n : nodes) n.weight /= total;
    return nodes;
}

}  // namespace

double expected_payoff(const PayoffModel& model, const HedgedPosition& position,
                       const PhysicalMeasure& measure, const QuadratureConfig& quad) {
    check_quadrature(quad);
    const QuarterCoefficients coeffs(model, position);
    const GaussLegendre rule(quad.tau_nodes_per_quarter);
    const double loss_weight = 1.0 - measure.mean_recovery();
    const auto& grid = model.grid();

    double total = 0.0;
    for (std::size_t k = 1; k <= grid.size(); ++k) {
        for (const auto& node : tau_nodes(rule, measure, grid.time(k - 1), grid.time(k))) {
            const double at_full = coeffs.value(PathPoint{k, node.x, 1.0});
            const double at_zero = coeffs.value(PathPoint{k, node.x, 0.0});
            total += node.weight * (at_full + loss_weight * (at_zero - at_full));
        }
    }
    return total + measure.survival(grid.horizon()) * coeffs.survival_value();
}

double expectation(const PayoffModel& model, const PhysicalMeasure& measure,
                   const QuadratureConfig& quad,
                   const std::function<double(const PathPoint&)>& functional) {
    check_quadrature(quad);
    const GaussLegendre rule(quad.tau_nodes_per_quarter);
    const auto recovery = rho_nodes(measure, quad.rho_nodes);
    const auto& grid = model.grid();

    double total = 0.0;
    for (std::size_t k = 1; k <= grid.size(); ++k) {
        for (const auto& node : tau_nodes(rule, measure, grid.time(k - 1), grid.time(k))) {
            double inner = 0.0;
            for (const auto& r : recovery) inner += r.weight * functional(PathPoint{k, node.x, r.x});
            total += node.weight * inner;
        }
    }
    return total + measure.survival(grid.horizon()) * functional(model.survival_path());
}

PayoffMoments payoff_moments(const PayoffModel& model, const HedgedPosition& position,
                             const PhysicalMeasure& measure, const QuadratureConfig& quad) {
    const QuarterCoefficients coeffs(model, position);
    const double mean = expected_payoff(model, position, measure, quad);
    const double variance = expectation(model, measure, quad, [&](const PathPoint& p) {
        const double d = coeffs.value(p) - mean;
        return d * d;
    });
    return {mean, variance};
}

FairPrice fair_price(double glb, double lambda, double expected_payoff) {
    return {glb + lambda * expected_payoff, !(lambda > 0.0)};
}

double lambda_from_return(double target_return) {
    if (!(target_return > -1.0)) {
        throw DomainError("expected return must exceed -100%");
    }
    return 1.0 / (1.0 + target_return);
}

double expected_return_from_lambda(double lambda) {
    if (!(lambda > 0.0)) throw DomainError("profit-sharing fraction must be positive");
    return 1.0 / lambda - 1.0;
}

ValuationResult value_position(double hedge_cost, double lambda, double expected_payoff) {
    const double glb = -hedge_cost;
    const FairPrice fp = fair_price(glb, lambda, expected_payoff);
    ValuationResult out;
    out.expected_payoff = expected_payoff;
    out.glb = glb;
    out.lambda = lambda;
    out.fair_price = fp.value;
    out.max_loss = lambda * expected_payoff;
    out.expected_return = lambda > 0.0 ? 1.0 / lambda - 1.0 : std::nan("");
    out.arbitrage = fp.arbitrage;
    return out;
}

PortfolioValuation value_portfolio(const HedgeProblem& problem, const PhysicalMeasure& measure,
                                   double lambda, const QuadratureConfig& quad) {
    HedgeSolution hedge = optimize_hedge(problem);
    if (hedge.status != LpStatus::Optimal) {
        throw ArbitrageError("superhedge LP is unbounded: the quoted upfronts admit an arbitrage");
    }
    const double mean = expected_payoff(problem.model(), hedge.position, measure, quad);
    const ValuationResult valuation = value_position(hedge.cost, lambda, mean);
    return {std::move(hedge), valuation};
}

double profit_and_loss(const PayoffModel& model, const HedgedPosition& position, double lambda,
                       double expected_payoff, const PathPoint& path) {
    return position_value(model, position, path) - lambda * expected_payoff;
}

double realized_return(const PayoffModel& model, const HedgedPosition& position, double lambda,
                       double expected_payoff, const PathPoint& path) {
    const double capital = lambda * expected_payoff;
    if (capital == 0.0) {
        throw UndefinedReturnError("rate of return undefined with zero capital at risk");
    }
    if (!(lambda > 0.0)) throw DomainError("profit-sharing fraction must be positive");
    return (position_value(model, position, path) - capital) / capital;
}

BidAskRange bid_ask_range(const LiquidMarket& market, const TenorGrid& grid,
                          const DiscountCurve& curve, const PhysicalMeasure& measure,
                          std::size_t m, double lambda_short, double lambda_long,
                          const QuadratureConfig& quad, const Discretization& discretization) {
    if (!(lambda_short > 0.0) || !(lambda_long > 0.0)) {
        throw DomainError("bid/ask profit-sharing fractions must be positive");
    }
    const MaturityBounds bounds = no_arbitrage_bounds(market, grid, curve, m, discretization);
    const PayoffModel model(grid, curve, market.spread());
    BidAskRange out;
    out.maturity = m;
    out.lub_ask = bounds.lub_ask;
    out.glb_bid = bounds.glb_bid;
    out.expected_short = expected_payoff(model, bounds.short_side.position, measure, quad);
    out.expected_long = expected_payoff(model, bounds.long_side.position, measure, quad);
    out.lambda_short = lambda_short;
    out.lambda_long = lambda_long;
    return out;
}

}  // namespace cdsbounds
