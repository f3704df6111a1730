/**
 * @file distribution.hpp
 * @brief Probability law of the realised present value Delta of a hedged
 *        position: a binned continuous part plus discrete atoms.
 *
 * Bin masses are probabilities per bin, not densities; divide by the bin
 * width for a density plot.
 */

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cdsbounds/market_model.hpp"
#include "cdsbounds/payoff.hpp"

namespace cdsbounds {

struct BinningConfig {
    std::size_t bins = 400;
    /// Uniform sub-intervals per quarter in tau, each weighted by its exact
    /// default probability.
    std::size_t tau_nodes_per_quarter = 64;
    /// Padding added on both sides of the exact path extrema.
    double margin = 0.01;
    /// Overrides the automatic [min - margin, max + margin] range. Mass
    /// falling outside is clamped into the end bins.
    std::optional<std::pair<double, double>> range;
};

struct Atom {
    double value;
    double mass;
};

class DensityEstimate {
public:
    DensityEstimate(std::vector<double> edges, std::vector<double> masses,
                    std::vector<Atom> atoms);

    std::size_t bins() const noexcept { return masses_.size(); }
    std::span<const double> edges() const noexcept { return edges_; }
    std::span<const double> masses() const noexcept { return masses_; }
    std::span<const Atom> atoms() const noexcept { return atoms_; }

    double continuous_mass() const;
    double total_mass() const;

    /// First moment with the bin mass placed at the bin midpoint.
    double mean() const;

    /// Smallest value carrying positive mass.
    double support_min() const;

    /// Mass of [a, b]: atoms at either end count, bins are apportioned
    /// linearly where partially covered.
    double cdf_query(double a, double b) const;

    DensityEstimate shifted(double offset) const;

private:
    std::vector<double> edges_;
    std::vector<double> masses_;
    std::vector<Atom> atoms_;
};

/// Requires a random (truncated-normal) recovery law; throws WrongLawError
/// for a constant recovery.
DensityEstimate payoff_density(const PayoffModel& model, const HedgedPosition& position,
                               const PhysicalMeasure& measure, const BinningConfig& binning = {});

/// Density of Psi = Delta - lambda E[Delta].
DensityEstimate pnl_density(const DensityEstimate& density, double lambda,
                            double expected_payoff);

struct SpectrumLine {
    std::size_t quarter;
    /// Delta_k, the average of the right limit at T_{k-1} and the value at T_k.
    double value;
    /// P_k.
    double probability;
};

struct DiscreteSpectrum {
    std::vector<SpectrumLine> lines;
    Atom survival;

    double total_probability() const;
};

/// Requires a constant recovery law; throws WrongLawError otherwise.
DiscreteSpectrum constant_recovery_spectrum(const PayoffModel& model,
                                            const HedgedPosition& position,
                                            const PhysicalMeasure& measure);

}  // namespace cdsbounds
