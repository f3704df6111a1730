#pragma once

#include <stdexcept>
#include <string>

namespace cdsbounds {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Quarter or maturity index outside the tenor grid.
class IndexError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Maturity outside the span of liquid quotes.
class InterpolationRangeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

class NoMarketError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Inconsistent or malformed inputs (lengths, config values, quadrature sizes).
class ConfigurationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Closed-form bound whose construction needs a liquid maturity that is absent.
class NotComputableError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Operation requested for the wrong recovery law (constant vs. random).
class WrongLawError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Rate of return requested with zero capital at risk.
class UndefinedReturnError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Cutting-plane refinement did not reach the violation tolerance.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double residual)
        : std::runtime_error(what), residual_(residual) {}

    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

/// The quoted liquid prices admit an arbitrage, so the superhedge LP is unbounded.
class ArbitrageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace cdsbounds
