/**
 * @file config.hpp
 * @brief JSON model configuration. Every field is optional and defaults to
 *        the reference single-name market: 21 quarters, r = 2%, w = 5%,
 *        quotes at quarters 5/9/13/17/21, PD_1 = 30% and truncated-normal
 *        recovery N(0.15, 0.16) on [0, 1].
 *
 * All rates, prices and probabilities are decimals of notional.
 *
 * @code{.json}
 * {
 *   "grid":      {"n_quarters": 21, "first_period": 0.25},
 *   "curve":     {"rate": 0.02},
 *   "market":    {"spread": 0.05, "quotes": [[5, 0.0525], [21, 0.2405]]},
 *   "measure":   {"pd1": 0.3, "recovery": {"normal": {"mu": 0.15, "sigma": 0.16}}},
 *   "valuation": {"lambda": 0.8},
 *   "study":     {"variant": "all", "trials": 1000, "seed": 42}
 * }
 * @endcode
 *
 * "measure" takes either "pd1" or "hazard"; "recovery" either "normal" or
 * "constant"; "valuation" either "lambda" or "target_return". Unknown keys
 * are rejected.
 */

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cdsbounds/market_model.hpp"
#include "cdsbounds/study.hpp"

namespace cdsbounds {

struct ModelConfig {
    TenorGrid grid;
    DiscountCurve curve;
    LiquidMarket market;
    PhysicalMeasure measure;
    double lambda;
    std::vector<MarketVariant> study_variants;
    std::size_t study_trials;
    std::uint64_t study_seed;
};

ModelConfig default_config();

/// Throws ConfigurationError on malformed JSON, unknown keys or values that
/// violate a model invariant.
ModelConfig parse_config(std::string_view json_text);
ModelConfig load_config(const std::string& path);

/// Fully expanded configuration with every value written out, keys sorted.
std::string canonical_json(const ModelConfig& config);

/// 64-bit FNV-1a of canonical_json.
std::uint64_t config_hash(const ModelConfig& config);

}  // namespace cdsbounds
