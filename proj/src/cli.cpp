#include "cdsbounds/cli.hpp"

#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <variant>

#include "CLI11.hpp"
#include "json.hpp"

#include "cdsbounds/config.hpp"
#include "cdsbounds/distribution.hpp"
#include "cdsbounds/errors.hpp"
#include "cdsbounds/hedge_optimizer.hpp"
#include "cdsbounds/study.hpp"
#include "cdsbounds/valuation.hpp"
#include "cdsbounds/vanilla_hedge.hpp"

namespace cdsbounds {

const std::vector<double>& example_portfolio_notionals() {
    static const std::vector<double> notionals{
        0.2190, 0.9513,  0.0744,  0.3669,  0.2543,  -0.2179, 0.7840,
        0.3894, 0.1945,  0.6885,  0.7642,  -0.9360, -0.8572, 0.5786,
        -0.1819, 0.7254, 0.1285, -0.8874, -0.0712, -0.7650, 0.0290,
    };
    return notionals;
}

Portfolio parse_portfolio(const std::string& spec, const TenorGrid& grid) {
    const std::size_t n = grid.size();
    if (spec == "paper-example") {
        if (n != example_portfolio_notionals().size()) {
            throw ConfigurationError("paper-example needs a 21-quarter grid");
        }
        return Portfolio(example_portfolio_notionals());
    }
    if (spec.rfind("cds:", 0) == 0) {
        std::size_t maturity = 0;
        double notional = 1.0;
        try {
            const std::string body = spec.substr(4);
            const auto colon = body.find(':');
            maturity = std::stoul(body.substr(0, colon));
            if (colon != std::string::npos) notional = std::stod(body.substr(colon + 1));
        } catch (const std::exception&) {
            throw ConfigurationError("portfolio '" + spec + "' is not of the form cds:M[:notional]");
        }
        if (maturity < 1 || maturity > n) {
            throw ConfigurationError("portfolio maturity outside 1.." + std::to_string(n));
        }
        return Portfolio::single(n, maturity, notional);
    }

    std::ifstream in(spec);
    if (!in) throw ConfigurationError("cannot open portfolio file " + spec);
    std::vector<double> notionals;
    std::string line;
    while (std::getline(in, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream fields(line);
        std::string token;
        while (fields >> token) {
            try {
                std::size_t used = 0;
                notionals.push_back(std::stod(token, &used));
                if (used != token.size()) throw std::invalid_argument(token);
            } catch (const std::exception&) {
                throw ConfigurationError("bad notional '" + token + "' in " + spec);
            }
        }
    }
    if (notionals.size() != n) {
        throw ConfigurationError("portfolio file " + spec + " holds " +
                                 std::to_string(notionals.size()) + " notionals, grid has " +
                                 std::to_string(n));
    }
    return Portfolio(std::move(notionals));
}

namespace {

using Cell = std::variant<std::monostate, double, long long, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    std::vector<std::string> summary;
};

std::string format_number(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string percent(double x, int decimals = 2) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.*f%%", decimals, 100.0 * x);
    return buf;
}

struct Options {
    std::string config_path;
    std::string out_path;
    std::string format = "csv";
    std::optional<std::uint64_t> seed;
};

struct RunContext {
    std::string command;
    ModelConfig config;
    Options options;
};

std::string csv_cell(const Cell& c) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>) return "";
            else if constexpr (std::is_same_v<T, double>) return format_number(v);
            else if constexpr (std::is_same_v<T, long long>) return std::to_string(v);
            else return v;
        },
        c);
}

nlohmann::ordered_json json_cell(const Cell& c) {
    return std::visit(
        [](const auto& v) -> nlohmann::ordered_json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>) return nullptr;
            else return v;
        },
        c);
}

std::string hash_text(std::uint64_t h) {
    char buf[24];
    std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
    return buf;
}

void write_table(const RunContext& ctx, const Table& table, std::ostream& out) {
    const std::string hash = hash_text(config_hash(ctx.config));
    if (ctx.options.format == "json") {
        nlohmann::ordered_json doc;
        doc["command"] = ctx.command;
        doc["config_hash"] = hash;
        doc["seed"] = ctx.config.study_seed;
        auto& rows = doc["rows"] = nlohmann::ordered_json::array();
        for (const auto& row : table.rows) {
            nlohmann::ordered_json obj;
            for (std::size_t i = 0; i < table.columns.size(); ++i) {
                obj[table.columns[i]] = json_cell(row[i]);
            }
            rows.push_back(std::move(obj));
        }
        out << doc.dump(2) << "\n";
        return;
    }
    out << "# cdsbounds " << ctx.command << " config_hash=" << hash
        << " seed=" << ctx.config.study_seed << "\n";
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        out << (i ? "," : "") << table.columns[i];
    }
    out << "\n";
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
        out << "\n";
    }
}

void emit(const RunContext& ctx, const Table& table, std::ostream& out, std::ostream& err) {
    if (ctx.options.out_path.empty()) {
        write_table(ctx, table, out);
        for (const auto& line : table.summary) err << line << "\n";
        return;
    }
    std::ofstream file(ctx.options.out_path, std::ios::binary);
    if (!file) throw ConfigurationError("cannot write " + ctx.options.out_path);
    write_table(ctx, table, file);
    file.close();
    if (!file) throw ConfigurationError("failed writing " + ctx.options.out_path);
    for (const auto& line : table.summary) out << line << "\n";
}

Cell optional_cell(const std::optional<double>& x) {
    return x ? Cell{*x} : Cell{};
}

/// full = every configured quote, none = cash only, a/b/c = variant subset.
LiquidMarket select_market(const ModelConfig& cfg, const std::string& name) {
    if (name == "full") return cfg.market;
    if (name == "none") return cfg.market.without_quotes();
    return cfg.market.restricted_to(variant_maturities(parse_variant(name)));
}

// ---------------------------------------------------------------------------

Table bounds_table(const ModelConfig& cfg, const std::string& market_name) {
    const LiquidMarket market = select_market(cfg, market_name);
    Table t;
    t.columns = {"m", "opt_ask", "opt_bid", "van_ask", "van_bid", "u_int"};
    for (const SweepRow& r : bounds_sweep(market, cfg.grid, cfg.curve)) {
        t.rows.push_back({static_cast<long long>(r.maturity), r.opt_ask, r.opt_bid,
                          optional_cell(r.van_ask), r.van_bid, optional_cell(r.interpolated)});
    }
    return t;
}

Table vanilla_table(const ModelConfig& cfg, const std::string& market_name,
                    const std::vector<std::size_t>& maturities) {
    const LiquidMarket market = select_market(cfg, market_name);
    Table t;
    t.columns = {"m", "van_ask", "opt_ask", "u_int", "opt_bid", "van_bid", "asym_opt", "asym_van"};
    t.summary.push_back("   m    Van ask    Opt ask      u_Int    Opt bid    Van bid  asym(Opt)");
    for (std::size_t m : maturities) {
        const MaturityBounds opt = no_arbitrage_bounds(market, cfg.grid, cfg.curve, m);
        const double bid = vanilla_bid_bound(market, cfg.grid, cfg.curve, m).bound;
        std::optional<double> ask;
        try {
            ask = vanilla_ask_bound(market, cfg.grid, cfg.curve, m).bound;
        } catch (const NotComputableError&) {
        }
        std::optional<double> mid;
        try {
            mid = interpolated_upfront(market, cfg.grid, m);
        } catch (const InterpolationRangeError&) {
        }
        std::optional<double> asym_opt;
        std::optional<double> asym_van;
        if (mid && *mid != opt.glb_bid) {
            asym_opt = (opt.lub_ask - *mid) / (*mid - opt.glb_bid);
        }
        if (mid && ask && *mid != bid) asym_van = (*ask - *mid) / (*mid - bid);
        t.rows.push_back({static_cast<long long>(m), optional_cell(ask), opt.lub_ask,
                          optional_cell(mid), opt.glb_bid, bid, optional_cell(asym_opt),
                          optional_cell(asym_van)});
        char line[160];
        std::snprintf(line, sizeof line, "%4zu %10s %10s %10s %10s %10s %10s", m,
                      ask ? percent(*ask).c_str() : "n/a", percent(opt.lub_ask).c_str(),
                      mid ? percent(*mid).c_str() : "n/a", percent(opt.glb_bid).c_str(),
                      percent(bid).c_str(),
                      asym_opt ? format_number(*asym_opt).substr(0, 6).c_str() : "n/a");
        t.summary.push_back(line);
    }
    return t;
}

Table hedge_table(const ModelConfig& cfg, const std::string& market_name,
                  const std::string& portfolio_spec) {
    const HedgeProblem problem(parse_portfolio(portfolio_spec, cfg.grid),
                               select_market(cfg, market_name), cfg.grid, cfg.curve);
    const HedgeSolution s = optimize_hedge(problem);
    if (s.status != LpStatus::Optimal) {
        throw ArbitrageError("superhedge LP is unbounded: the quotes admit an arbitrage");
    }
    Table t;
    t.columns = {"kind", "quarter", "tau", "rho", "value"};
    t.rows.push_back({std::string("cash"), {}, {}, {}, s.cash});
    for (const HedgeLeg& leg : s.hedge_notionals) {
        t.rows.push_back({std::string("hedge"), static_cast<long long>(leg.maturity), {}, {},
                          leg.notional});
    }
    t.rows.push_back({std::string("cost"), {}, {}, {}, s.cost});
    t.rows.push_back({std::string("max_violation"), {}, {}, {}, s.max_violation});
    t.rows.push_back({std::string("refinement_rounds"), {}, {}, {},
                      static_cast<long long>(s.refinement_rounds)});
    for (const PathPoint& p : s.binding_paths) {
        const bool survival = p.quarter == cfg.grid.survival_quarter();
        t.rows.push_back({std::string("binding"), static_cast<long long>(p.quarter),
                          survival ? Cell{} : Cell{p.tau}, survival ? Cell{} : Cell{p.rho},
                          position_value(problem.model(), s.position, p)});
    }
    t.summary.push_back("hedge cost V = " + percent(s.cost, 4) + " of notional, " +
                        std::to_string(s.binding_paths.size()) + " binding paths");
    return t;
}

Table value_portfolio_table(const ModelConfig& cfg, const std::string& market_name,
                            const std::string& portfolio_spec, double lambda) {
    const HedgeProblem problem(parse_portfolio(portfolio_spec, cfg.grid),
                               select_market(cfg, market_name), cfg.grid, cfg.curve);
    const PortfolioValuation pv = value_portfolio(problem, cfg.measure, lambda);
    const ValuationResult& v = pv.valuation;
    Table t;
    t.columns = {"quantity", "value"};
    t.rows = {
        {std::string("hedge_cost"), pv.hedge.cost},
        {std::string("glb"), v.glb},
        {std::string("expected_payoff"), v.expected_payoff},
        {std::string("lambda"), v.lambda},
        {std::string("fair_price"), v.fair_price},
        {std::string("max_loss"), v.max_loss},
        {std::string("expected_return"), v.expected_return},
    };
    t.summary.push_back("V_GLB = " + percent(v.glb) + ", E[Delta] = " +
                        percent(v.expected_payoff) + ", FP = " + percent(v.fair_price) +
                        ", L_max = " + percent(v.max_loss));
    return t;
}

Table value_maturity_table(const ModelConfig& cfg, const std::string& market_name,
                           std::size_t m, double lambda_short, double lambda_long) {
    const BidAskRange r = bid_ask_range(select_market(cfg, market_name), cfg.grid, cfg.curve,
                                        cfg.measure, m, lambda_short, lambda_long);
    Table t;
    t.columns = {"quantity", "value"};
    t.rows = {
        {std::string("maturity"), static_cast<long long>(m)},
        {std::string("lub_ask"), r.lub_ask},
        {std::string("glb_bid"), r.glb_bid},
        {std::string("expected_short"), r.expected_short},
        {std::string("expected_long"), r.expected_long},
        {std::string("lambda_short"), r.lambda_short},
        {std::string("lambda_long"), r.lambda_long},
        {std::string("ask"), r.ask()},
        {std::string("bid"), r.bid()},
    };
    t.summary.push_back("m = " + std::to_string(m) + ": bid " + percent(r.bid()) + ", ask " +
                        percent(r.ask()) + " (bounds " + percent(r.glb_bid) + " / " +
                        percent(r.lub_ask) + ")");
    return t;
}

/// The position whose law is reported: the superhedged portfolio, or the
/// cash-only superhedge when `hedged` is false.
struct ReportedPosition {
    PayoffModel model;
    HedgedPosition position;
};

ReportedPosition reported_position(const ModelConfig& cfg, const std::string& market_name,
                                   const std::string& portfolio_spec, bool hedged) {
    const LiquidMarket market =
        hedged ? select_market(cfg, market_name) : cfg.market.without_quotes();
    const HedgeProblem problem(parse_portfolio(portfolio_spec, cfg.grid), market, cfg.grid,
                               cfg.curve);
    const HedgeSolution s = optimize_hedge(problem);
    if (s.status != LpStatus::Optimal) {
        throw ArbitrageError("superhedge LP is unbounded: the quotes admit an arbitrage");
    }
    return {problem.model(), s.position};
}

Table density_table(const ModelConfig& cfg, const std::string& market_name,
                    const std::string& portfolio_spec, bool hedged, bool pnl, double lambda,
                    std::size_t bins) {
    const ReportedPosition rp = reported_position(cfg, market_name, portfolio_spec, hedged);
    BinningConfig binning;
    binning.bins = bins;
    DensityEstimate density = payoff_density(rp.model, rp.position, cfg.measure, binning);
    const double mean = expected_payoff(rp.model, rp.position, cfg.measure);
    if (pnl) density = pnl_density(density, lambda, mean);

    Table t;
    t.columns = {"kind", "lo", "hi", "mass"};
    for (std::size_t i = 0; i < density.bins(); ++i) {
        t.rows.push_back({std::string("bin"), density.edges()[i], density.edges()[i + 1],
                          density.masses()[i]});
    }
    for (const Atom& a : density.atoms()) {
        t.rows.push_back({std::string("atom"), a.value, a.value, a.mass});
    }
    const Atom& atom = density.atoms().front();
    t.summary.push_back(std::string(hedged ? "hedged" : "unhedged") +
                        (pnl ? " P&L" : " payoff") + ": atom at " + percent(atom.value, 1) +
                        " with mass " + percent(atom.mass, 1) + ", mean " +
                        percent(density.mean(), 2) + ", L_max = " + percent(lambda * mean, 1));
    return t;
}

Table spectrum_table(const ModelConfig& cfg, const std::string& market_name,
                     const std::string& portfolio_spec, bool hedged,
                     std::optional<double> recovery) {
    ModelConfig local = cfg;
    if (recovery) {
        local.measure = PhysicalMeasure(cfg.measure.hazard_rate(), ConstantRecovery{*recovery});
    }
    const ReportedPosition rp = reported_position(local, market_name, portfolio_spec, hedged);
    const DiscreteSpectrum spectrum = constant_recovery_spectrum(rp.model, rp.position,
                                                                 local.measure);
    Table t;
    t.columns = {"quarter", "value", "probability"};
    for (const SpectrumLine& line : spectrum.lines) {
        t.rows.push_back({static_cast<long long>(line.quarter), line.value, line.probability});
    }
    t.rows.push_back({static_cast<long long>(cfg.grid.survival_quarter()),
                      spectrum.survival.value, spectrum.survival.mass});
    t.summary.push_back("total probability " + format_number(spectrum.total_probability()));
    return t;
}

struct StudyTables {
    Table cdf;
    Table trials;
};

StudyTables study_tables(const ModelConfig& cfg, const std::vector<MarketVariant>& variants,
                         std::size_t trials, std::size_t threads) {
    StudyConfig sc;
    sc.variants = variants;
    sc.n_trials = trials;
    sc.master_seed = cfg.study_seed;
    sc.lambda = cfg.lambda;
    sc.threads = threads;
    const StudyResult result = lmax_ratio_study(sc, cfg.market, cfg.grid, cfg.curve, cfg.measure);

    StudyTables out;
    out.cdf.columns = {"variant", "rank", "ratio", "cdf"};
    out.trials.columns = {"variant", "trial", "seed", "lmax_hedged", "lmax_unhedged", "ratio"};
    for (const VariantResult& vr : result.variants) {
        const std::string name(1, to_char(vr.variant));
        const auto sorted = vr.cdf.sorted();
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            out.cdf.rows.push_back({name, static_cast<long long>(i + 1), sorted[i],
                                    static_cast<double>(i + 1) / static_cast<double>(sorted.size())});
        }
        for (const TrialRecord& r : vr.trials) {
            out.trials.rows.push_back({name, static_cast<long long>(r.trial_index),
                                       std::to_string(r.seed), r.lmax_hedged, r.lmax_unhedged,
                                       r.ratio});
        }
        char line[200];
        std::snprintf(line, sizeof line,
                      "variant %s: %zu trials, mean %.4f, median %.4f, max %.4f, "
                      "CDF(0.235) %.3f, CDF(0.725) %.3f",
                      name.c_str(), vr.cdf.size(), vr.cdf.mean(), vr.cdf.median(), vr.cdf.max(),
                      vr.cdf(0.235), vr.cdf(0.725));
        out.cdf.summary.push_back(line);
    }
    return out;
}

std::vector<MarketVariant> parse_variant_list(const std::string& text) {
    if (text == "all") return {MarketVariant::A, MarketVariant::B, MarketVariant::C};
    std::vector<MarketVariant> out;
    for (char c : text) {
        if (c == ',') continue;
        out.push_back(parse_variant(std::string(1, c)));
    }
    if (out.empty()) throw ConfigurationError("empty variant list");
    return out;
}

void add_common(CLI::App& cmd, Options& o) {
    cmd.add_option("--config", o.config_path, "JSON model configuration");
    cmd.add_option("--out", o.out_path, "Write data to this file instead of stdout");
    cmd.add_option("--seed", o.seed, "Master seed (overrides the configuration)");
    cmd.add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"No-arbitrage bounds, fair prices and capital at risk for single-name CDSs",
                 "cdsbounds"};
    app.require_subcommand(1);

    Options o;
    std::string market_name = "full";
    std::string portfolio = "paper-example";
    std::vector<std::size_t> maturities{10, 11, 12, 14, 15, 16};
    std::optional<std::size_t> maturity;
    std::optional<double> lambda;
    std::optional<double> lambda_short;
    std::optional<double> lambda_long;
    bool unhedged = false;
    bool pnl = false;
    std::size_t bins = 400;
    std::optional<double> recovery;
    std::optional<std::string> variants;
    std::optional<std::size_t> trials;
    std::size_t threads = 0;
    std::string trials_out;

    auto add_market = [&](CLI::App* cmd) {
        cmd->add_option("--market", market_name, "Hedge set: full, none, a, b or c")
            ->check(CLI::IsMember({"full", "none", "a", "b", "c"}));
    };
    auto add_portfolio = [&](CLI::App* cmd) {
        cmd->add_option("--portfolio", portfolio,
                        "paper-example, cds:M[:notional] or a file of notionals");
    };

    CLI::App* bounds = app.add_subcommand("bounds", "Optimal and vanilla bounds for m = 1..N");
    add_common(*bounds, o);
    add_market(bounds);

    CLI::App* vanilla = app.add_subcommand("vanilla", "Vanilla vs optimal bounds side by side");
    add_common(*vanilla, o);
    add_market(vanilla);
    vanilla->add_option("--maturities", maturities, "Quarter indices")->delimiter(',');

    CLI::App* hedge = app.add_subcommand("hedge", "Superhedge one portfolio");
    add_common(*hedge, o);
    add_market(hedge);
    add_portfolio(hedge);

    CLI::App* value = app.add_subcommand("value", "Fair price of a portfolio or bid/ask at M");
    add_common(*value, o);
    add_market(value);
    add_portfolio(value);
    value->add_option("--maturity", maturity, "Quote a bid/ask range for this quarter");
    value->add_option("--lambda", lambda, "Profit-sharing fraction");
    value->add_option("--lambda-short", lambda_short, "Fraction on the ask side");
    value->add_option("--lambda-long", lambda_long, "Fraction on the bid side");

    CLI::App* density = app.add_subcommand("density", "Binned law of the position value");
    add_common(*density, o);
    add_market(density);
    add_portfolio(density);
    density->add_flag("--hedged", "Superhedge with the market (default)");
    density->add_flag("--unhedged", unhedged, "Superhedge with cash only");
    density->add_flag("--pnl", pnl, "Shift by -lambda E[Delta]");
    density->add_option("--bins", bins, "Number of bins")->check(CLI::PositiveNumber);
    density->add_option("--lambda", lambda, "Profit-sharing fraction");

    CLI::App* spectrum = app.add_subcommand("spectrum", "Discrete law under constant recovery");
    add_common(*spectrum, o);
    add_market(spectrum);
    add_portfolio(spectrum);
    spectrum->add_flag("--hedged", "Superhedge with the market (default)");
    spectrum->add_flag("--unhedged", unhedged, "Superhedge with cash only");
    spectrum->add_option("--recovery", recovery, "Constant recovery rate")
        ->check(CLI::Range(0.0, 1.0));

    CLI::App* study = app.add_subcommand("study", "Random-portfolio capital-at-risk ratio study");
    add_common(*study, o);
    study->add_option("--variant", variants, "a, b, c or all");
    study->add_option("--trials", trials, "Number of random portfolios")
        ->check(CLI::PositiveNumber);
    study->add_option("--threads", threads, "Worker threads (0 = all cores)");
    study->add_option("--trials-out", trials_out, "Per-trial records file");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitConfiguration;
    }

    RunContext ctx{app.get_subcommands().front()->get_name(),
                   o.config_path.empty() ? default_config() : load_config(o.config_path), o};
    if (o.seed) ctx.config.study_seed = *o.seed;
    if (lambda) {
        if (!(*lambda > 0.0)) throw ConfigurationError("lambda must be positive");
        ctx.config.lambda = *lambda;
    }
    const ModelConfig& cfg = ctx.config;

    if (ctx.command == "bounds") {
        emit(ctx, bounds_table(cfg, market_name), out, err);
    } else if (ctx.command == "vanilla") {
        emit(ctx, vanilla_table(cfg, market_name, maturities), out, err);
    } else if (ctx.command == "hedge") {
        emit(ctx, hedge_table(cfg, market_name, portfolio), out, err);
    } else if (ctx.command == "value") {
        if (maturity) {
            emit(ctx,
                 value_maturity_table(cfg, market_name, *maturity,
                                      lambda_short.value_or(cfg.lambda),
                                      lambda_long.value_or(cfg.lambda)),
                 out, err);
        } else {
            emit(ctx, value_portfolio_table(cfg, market_name, portfolio, cfg.lambda), out, err);
        }
    } else if (ctx.command == "density") {
        emit(ctx, density_table(cfg, market_name, portfolio, !unhedged, pnl, cfg.lambda, bins),
             out, err);
    } else if (ctx.command == "spectrum") {
        emit(ctx, spectrum_table(cfg, market_name, portfolio, !unhedged, recovery), out, err);
    } else if (ctx.command == "study") {
        const auto chosen = variants ? parse_variant_list(*variants) : cfg.study_variants;
        StudyTables tables = study_tables(cfg, chosen, trials.value_or(cfg.study_trials), threads);
        if (!trials_out.empty()) {
            RunContext trial_ctx = ctx;
            trial_ctx.options.out_path = trials_out;
            std::ostringstream ignored;
            emit(trial_ctx, tables.trials, ignored, ignored);
        }
        emit(ctx, tables.cdf, out, err);
    }
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return dispatch(args, out, err);
    } catch (const ConvergenceError& e) {
        err << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const ArbitrageError& e) {
        err << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const TrialFailure& e) {
        err << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::logic_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitConfiguration;
    } catch (const std::exception& e) {
        err << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    }
}

int cli_main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run_cli(args, std::cout, std::cerr);
}

}  // namespace cdsbounds
