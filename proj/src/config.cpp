#include "cdsbounds/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include "json.hpp"

#include "cdsbounds/errors.hpp"

namespace cdsbounds {

namespace {

using nlohmann::json;

void reject_unknown(const json& section, std::string_view where,
                    std::initializer_list<std::string_view> allowed) {
    if (!section.is_object()) {
        throw ConfigurationError(std::string(where) + " must be an object");
    }
    for (const auto& item : section.items()) {
        bool known = false;
        for (std::string_view key : allowed) known = known || item.key() == key;
        if (!known) {
            throw ConfigurationError("unknown key '" + item.key() + "' in " + std::string(where));
        }
    }
}

double number(const json& value, std::string_view what) {
    if (!value.is_number()) throw ConfigurationError(std::string(what) + " must be a number");
    const double x = value.get<double>();
    if (!std::isfinite(x)) throw ConfigurationError(std::string(what) + " must be finite");
    return x;
}

std::size_t count(const json& value, std::string_view what) {
    if (!value.is_number_integer() || value.get<long long>() < 0) {
        throw ConfigurationError(std::string(what) + " must be a non-negative integer");
    }
    return value.get<std::size_t>();
}

std::vector<Quote> default_quotes() {
    return {{5, 0.0525}, {9, 0.1247}, {13, 0.1808}, {17, 0.2156}, {21, 0.2405}};
}

std::vector<MarketVariant> parse_variants(const json& value) {
    if (!value.is_string()) throw ConfigurationError("study.variant must be a string");
    const auto text = value.get<std::string>();
    if (text == "all") return {MarketVariant::A, MarketVariant::B, MarketVariant::C};
    return {parse_variant(text)};
}

std::string exact(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace

ModelConfig default_config() {
    return ModelConfig{
        TenorGrid(21, kQuarterYear),
        DiscountCurve(0.02),
        LiquidMarket(0.05, default_quotes()),
        PhysicalMeasure(hazard_from_pd1(0.30), TruncatedNormalRecovery(0.15, 0.16)),
        0.8,
        {MarketVariant::A, MarketVariant::B, MarketVariant::C},
        1000,
        42,
    };
}

ModelConfig parse_config(std::string_view json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigurationError(std::string("config is not valid JSON: ") + e.what());
    }
    reject_unknown(root, "config", {"grid", "curve", "market", "measure", "valuation", "study"});

    ModelConfig cfg = default_config();

    if (root.contains("grid")) {
        const json& g = root["grid"];
        reject_unknown(g, "grid", {"n_quarters", "first_period"});
        const std::size_t n = g.contains("n_quarters") ? count(g["n_quarters"], "grid.n_quarters")
                                                       : cfg.grid.size();
        const double first = g.contains("first_period")
                                 ? number(g["first_period"], "grid.first_period")
                                 : cfg.grid.first_period();
        cfg.grid = TenorGrid(n, first);
    }

    if (root.contains("curve")) {
        const json& c = root["curve"];
        reject_unknown(c, "curve", {"rate"});
        if (c.contains("rate")) cfg.curve = DiscountCurve(number(c["rate"], "curve.rate"));
    }

    if (root.contains("market")) {
        const json& m = root["market"];
        reject_unknown(m, "market", {"spread", "quotes"});
        const double spread =
            m.contains("spread") ? number(m["spread"], "market.spread") : cfg.market.spread();
        std::vector<Quote> quotes(cfg.market.quotes().begin(), cfg.market.quotes().end());
        if (m.contains("quotes")) {
            if (!m["quotes"].is_array()) throw ConfigurationError("market.quotes must be an array");
            quotes.clear();
            for (const json& q : m["quotes"]) {
                if (!q.is_array() || q.size() != 2) {
                    throw ConfigurationError("each quote must be a [quarter, upfront] pair");
                }
                quotes.push_back({count(q[0], "quote quarter"), number(q[1], "quote upfront")});
            }
        }
        cfg.market = LiquidMarket(spread, std::move(quotes));
    }
    cfg.market.check_against(cfg.grid);

    if (root.contains("measure")) {
        const json& m = root["measure"];
        reject_unknown(m, "measure", {"pd1", "hazard", "recovery"});
        if (m.contains("pd1") && m.contains("hazard")) {
            throw ConfigurationError("measure takes pd1 or hazard, not both");
        }
        double hazard = cfg.measure.hazard_rate();
        if (m.contains("pd1")) {
            try {
                hazard = hazard_from_pd1(number(m["pd1"], "measure.pd1"));
            } catch (const DomainError& e) {
                throw ConfigurationError(e.what());
            }
        }
        if (m.contains("hazard")) hazard = number(m["hazard"], "measure.hazard");
        RecoveryLaw law = cfg.measure.recovery();
        if (m.contains("recovery")) {
            const json& r = m["recovery"];
            reject_unknown(r, "measure.recovery", {"normal", "constant"});
            if (r.size() != 1) {
                throw ConfigurationError("measure.recovery takes exactly one of normal, constant");
            }
            if (r.contains("normal")) {
                const json& n = r["normal"];
                reject_unknown(n, "measure.recovery.normal", {"mu", "sigma"});
                if (!n.contains("mu") || !n.contains("sigma")) {
                    throw ConfigurationError("normal recovery needs mu and sigma");
                }
                law = TruncatedNormalRecovery(number(n["mu"], "mu"), number(n["sigma"], "sigma"));
            } else {
                law = ConstantRecovery{number(r["constant"], "measure.recovery.constant")};
            }
        }
        cfg.measure = PhysicalMeasure(hazard, law);
    }

    if (root.contains("valuation")) {
        const json& v = root["valuation"];
        reject_unknown(v, "valuation", {"lambda", "target_return"});
        if (v.contains("lambda") && v.contains("target_return")) {
            throw ConfigurationError("valuation takes lambda or target_return, not both");
        }
        if (v.contains("lambda")) cfg.lambda = number(v["lambda"], "valuation.lambda");
        if (v.contains("target_return")) {
            try {
                cfg.lambda = lambda_from_return(number(v["target_return"], "target_return"));
            } catch (const DomainError& e) {
                throw ConfigurationError(e.what());
            }
        }
        if (!(cfg.lambda > 0.0)) throw ConfigurationError("lambda must be positive");
    }

    if (root.contains("study")) {
        const json& s = root["study"];
        reject_unknown(s, "study", {"variant", "trials", "seed"});
        if (s.contains("variant")) cfg.study_variants = parse_variants(s["variant"]);
        if (s.contains("trials")) cfg.study_trials = count(s["trials"], "study.trials");
        if (s.contains("seed")) {
            if (!s["seed"].is_number_integer()) {
                throw ConfigurationError("study.seed must be an integer");
            }
            cfg.study_seed = s["seed"].get<std::uint64_t>();
        }
        if (cfg.study_trials < 1) throw ConfigurationError("study.trials must be at least 1");
    }
    return cfg;
}

ModelConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigurationError("cannot open config file " + path);
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str());
}

std::string canonical_json(const ModelConfig& c) {
    std::ostringstream out;
    out << "{\"curve\":{\"rate\":" << exact(c.curve.rate()) << "},";
    out << "\"grid\":{\"first_period\":" << exact(c.grid.first_period())
        << ",\"n_quarters\":" << c.grid.size() << "},";
    out << "\"market\":{\"quotes\":[";
    bool first = true;
    for (const Quote& q : c.market.quotes()) {
        out << (first ? "" : ",") << "[" << q.maturity << "," << exact(q.upfront) << "]";
        first = false;
    }
    out << "],\"spread\":" << exact(c.market.spread()) << "},";
    out << "\"measure\":{\"hazard\":" << exact(c.measure.hazard_rate()) << ",\"recovery\":";
    if (const auto* n = std::get_if<TruncatedNormalRecovery>(&c.measure.recovery())) {
        out << "{\"normal\":{\"mu\":" << exact(n->mu()) << ",\"sigma\":" << exact(n->sigma())
            << "}}";
    } else {
        out << "{\"constant\":" << exact(std::get<ConstantRecovery>(c.measure.recovery()).value)
            << "}";
    }
    out << "},\"study\":{\"seed\":" << c.study_seed << ",\"trials\":" << c.study_trials
        << ",\"variant\":\"";
    for (MarketVariant v : c.study_variants) out << to_char(v);
    out << "\"},\"valuation\":{\"lambda\":" << exact(c.lambda) << "}}";
    return out.str();
}

std::uint64_t config_hash(const ModelConfig& config) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : canonical_json(config)) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace cdsbounds
