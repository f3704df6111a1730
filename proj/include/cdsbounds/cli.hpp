#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cdsbounds/market_model.hpp"
#include "cdsbounds/payoff.hpp"

namespace cdsbounds {

/// Exit statuses of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitConfiguration = 1,
    kExitNumerical = 2,
};

/// Notionals of the 21-quarter example portfolio shipped as `paper-example`.
const std::vector<double>& example_portfolio_notionals();

/// Resolves `paper-example`, `cds:M[:notional]` or a file of whitespace or
/// comma separated notionals.
Portfolio parse_portfolio(const std::string& spec, const TenorGrid& grid);

/// Runs one command. args excludes the program name. Data goes to `out`
/// unless --out names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cli_main(int argc, char** argv);

}  // namespace cdsbounds
