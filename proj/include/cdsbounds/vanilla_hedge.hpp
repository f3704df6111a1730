#pragma once

#include <cstddef>
#include <optional>

#include "cdsbounds/market_model.hpp"

namespace cdsbounds {

enum class Side {
    ShortProtection,  // ask bound u_{S,0}
    LongProtection,   // bid bound u_{L,0}
};

/// Closed-form bound from hedging one illiquid CDS with a single bracketing
/// liquid contract plus cash.
struct VanillaBound {
    std::size_t maturity;
    Side side;
    /// M+ for the ask side, M- for the bid side; empty for the bid bound
    /// below the first liquid maturity.
    std::optional<std::size_t> bracketing_liquid;
    /// V_S(M) or V_L(M).
    double hedge_cost;
    /// u_{S,0} = V_S or u_{L,0} = -V_L.
    double bound;
};

struct Bracket {
    std::optional<std::size_t> below;  // nearest liquid index <= M
    std::optional<std::size_t> above;  // nearest liquid index >= M
};

Bracket bracketing_maturities(const LiquidMarket& market, std::size_t m);

/// V_S(M) = u(M+) + w (T_{M+,0} - T_{M,0}). Throws NotComputableError when
/// no liquid maturity >= M exists.
VanillaBound vanilla_ask_bound(const LiquidMarket& market, const TenorGrid& grid,
                               const DiscountCurve& curve, std::size_t m);

/// V_L(M) = -u(M-) + w (T_{M,0} - T_{M-,0}), or w T_{M,0} below the first
/// liquid maturity.
VanillaBound vanilla_bid_bound(const LiquidMarket& market, const TenorGrid& grid,
                               const DiscountCurve& curve, std::size_t m);

}  // namespace cdsbounds
