#include "cdsbounds/vanilla_hedge.hpp"

#include <algorithm>
#include <string>

#include "cdsbounds/errors.hpp"
#include "cdsbounds/payoff.hpp"

namespace cdsbounds {

namespace {

void check_maturity(const TenorGrid& grid, std::size_t m) {
    if (m < 1 || m > grid.size()) {
        throw IndexError("maturity index " + std::to_string(m) + " outside 1..N");
    }
}

}  // namespace

Bracket bracketing_maturities(const LiquidMarket& market, std::size_t m) {
    Bracket out;
    for (const Quote& q : market.quotes()) {
        if (q.maturity <= m) out.below = q.maturity;
        if (q.maturity >= m && !out.above) out.above = q.maturity;
    }
    return out;
}

VanillaBound vanilla_ask_bound(const LiquidMarket& market, const TenorGrid& grid,
                               const DiscountCurve& curve, std::size_t m) {
    check_maturity(grid, m);
    market.check_against(grid);
    const Bracket bracket = bracketing_maturities(market, m);
    if (!bracket.above) {
        throw NotComputableError("no liquid maturity at or above " + std::to_string(m) +
                                 " to anchor the vanilla ask hedge");
    }
    const PayoffModel model(grid, curve, market.spread());
    const std::size_t plus = *bracket.above;
    const double cost = *market.quote_at(plus) +
                        market.spread() * (model.full_accrual(plus) - model.full_accrual(m));
    return VanillaBound{m, Side::ShortProtection, plus, cost, cost};
}

VanillaBound vanilla_bid_bound(const LiquidMarket& market, const TenorGrid& grid,
                               const DiscountCurve& curve, std::size_t m) {
    check_maturity(grid, m);
    market.check_against(grid);
    const Bracket bracket = bracketing_maturities(market, m);
    const PayoffModel model(grid, curve, market.spread());
    if (!bracket.below) {
        // Only the premium leg can hurt the long-protection holder.
        const double cost = market.spread() * model.full_accrual(m);
        return VanillaBound{m, Side::LongProtection, std::nullopt, cost, -cost};
    }
    const std::size_t minus = *bracket.below;
    const double cost = -*market.quote_at(minus) +
                        market.spread() * (model.full_accrual(m) - model.full_accrual(minus));
    return VanillaBound{m, Side::LongProtection, minus, cost, -cost};
}

}  // namespace cdsbounds
