#include "cdsbounds/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cdsbounds/errors.hpp"

namespace cdsbounds {

DensityEstimate::DensityEstimate(std::vector<double> edges, std::vector<double> masses,
                                 std::vector<Atom> atoms)
    : edges_(std::move(edges)), masses_(std::move(masses)), atoms_(std::move(atoms)) {
    if (edges_.size() != masses_.size() + 1) {
        throw ConfigurationError("density needs one more edge than bins");
    }
    for (std::size_t i = 1; i < edges_.size(); ++i) {
        if (!(edges_[i] > edges_[i - 1])) {
            throw ConfigurationError("bin edges must be strictly increasing");
        }
    }
}

double DensityEstimate::continuous_mass() const {
    double s = 0.0;
    for (double m : masses_) s += m;
    return s;
}

double DensityEstimate::total_mass() const {
    double s = continuous_mass();
    for (const Atom& a : atoms_) s += a.mass;
    return s;
}

double DensityEstimate::mean() const {
    double s = 0.0;
    for (std::size_t i = 0; i < masses_.size(); ++i) {
        s += masses_[i] * 0.5 * (edges_[i] + edges_[i + 1]);
    }
    for (const Atom& a : atoms_) s += a.mass * a.value;
    return s;
}

double DensityEstimate::support_min() const {
    double lo = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < masses_.size(); ++i) {
        if (masses_[i] > 0.0) {
            lo = edges_[i];
            break;
        }
    }
    for (const Atom& a : atoms_) {
        if (a.mass > 0.0) lo = std::min(lo, a.value);
    }
    return lo;
}

double DensityEstimate::cdf_query(double a, double b) const {
    if (a > b) throw DomainError("cdf query needs a <= b");
    double s = 0.0;
    for (const Atom& atom : atoms_) {
        if (atom.value >= a && atom.value <= b) s += atom.mass;
    }
    for (std::size_t i = 0; i < masses_.size(); ++i) {
        const double lo = std::max(a, edges_[i]);
        const double hi = std::min(b, edges_[i + 1]);
        if (hi > lo) s += masses_[i] * (hi - lo) / (edges_[i + 1] - edges_[i]);
    }
    return s;
}

DensityEstimate DensityEstimate::shifted(double offset) const {
    std::vector<double> edges = edges_;
    for (double& e : edges) e += offset;
    std::vector<Atom> atoms = atoms_;
    for (Atom& a : atoms) a.value += offset;
    return DensityEstimate(std::move(edges), masses_, std::move(atoms));
}

DensityEstimate payoff_density(const PayoffModel& model, const HedgedPosition& position,
                               const PhysicalMeasure& measure, const BinningConfig& binning) {
    if (!measure.has_random_recovery()) {
        throw WrongLawError("constant recovery has a discrete law; use constant_recovery_spectrum");
    }
    if (binning.bins < 1 || binning.tau_nodes_per_quarter < 1) {
        throw ConfigurationError("density needs at least one bin and one tau node per quarter");
    }
    const auto& law = std::get<TruncatedNormalRecovery>(measure.recovery());
    const QuarterCoefficients coeffs(model, position);

    double lo = 0.0;
    double hi = 0.0;
    if (binning.range) {
        std::tie(lo, hi) = *binning.range;
        if (!(hi > lo)) throw ConfigurationError("density range must have hi > lo");
    } else {
        lo = path_minimum(model, position).value - binning.margin;
        hi = path_maximum(model, position).value + binning.margin;
        if (!(hi > lo)) hi = lo + 1e-9;
    }

    const std::size_t nbins = binning.bins;
    const double width = (hi - lo) / static_cast<double>(nbins);
    std::vector<double> edges(nbins + 1);
    for (std::size_t i = 0; i <= nbins; ++i) edges[i] = lo + width * static_cast<double>(i);
    edges[nbins] = hi;
    std::vector<double> masses(nbins, 0.0);

    auto bin_of = [&](double x) -> std::size_t {
        const double f = std::floor((x - lo) / width);
        if (f <= 0.0) return 0;
        return std::min(nbins - 1, static_cast<std::size_t>(f));
    };

    const auto& grid = model.grid();
    const std::size_t sub = binning.tau_nodes_per_quarter;
    for (std::size_t k = 1; k <= grid.size(); ++k) {
        const double a = grid.time(k - 1);
        const double step = (grid.time(k) - a) / static_cast<double>(sub);
        for (std::size_t j = 0; j < sub; ++j) {
            const double left = a + step * static_cast<double>(j);
            const double node_mass = measure.default_probability(left, left + step);
            const double tau = left + 0.5 * step;
            const double at_zero = coeffs.value(PathPoint{k, tau, 0.0});
            const double at_full = coeffs.value(PathPoint{k, tau, 1.0});
            // Delta(rho) = at_zero + rho * slope.
            const double slope = at_full - at_zero;
            if (std::abs(slope) <= 1e-14 * std::max(1.0, std::abs(at_zero))) {
                masses[bin_of(at_zero)] += node_mass;
                continue;
            }
            const std::size_t first = bin_of(std::min(at_zero, at_full));
            const std::size_t last = bin_of(std::max(at_zero, at_full));
            // Recovery CDF at the rho that maps onto each interior bin edge;
            // the range ends map exactly onto rho = 0 and rho = 1.
            double prev = slope > 0.0 ? 0.0 : 1.0;
            for (std::size_t i = first; i <= last; ++i) {
                const double next = i == last ? (slope > 0.0 ? 1.0 : 0.0)
                                              : law.cdf((edges[i + 1] - at_zero) / slope);
                masses[i] += node_mass * std::abs(next - prev);
                prev = next;
            }
        }
    }

    std::vector<Atom> atoms{{coeffs.survival_value(), measure.survival(grid.horizon())}};
    return DensityEstimate(std::move(edges), std::move(masses), std::move(atoms));
}

DensityEstimate pnl_density(const DensityEstimate& density, double lambda,
                            double expected_payoff) {
    return density.shifted(-lambda * expected_payoff);
}

double DiscreteSpectrum::total_probability() const {
    double s = survival.mass;
    for (const auto& line : lines) s += line.probability;
    return s;
}

DiscreteSpectrum constant_recovery_spectrum(const PayoffModel& model,
                                            const HedgedPosition& position,
                                            const PhysicalMeasure& measure) {
    const auto* constant = std::get_if<ConstantRecovery>(&measure.recovery());
    if (!constant) {
        throw WrongLawError("discrete spectrum requires a constant recovery rate");
    }
    const double rho = constant->value;
    const QuarterCoefficients coeffs(model, position);
    const auto& grid = model.grid();

    DiscreteSpectrum out;
    out.lines.reserve(grid.size());
    for (std::size_t k = 1; k <= grid.size(); ++k) {
        const double start = coeffs.value(model.right_limit(k, rho));
        const double end = coeffs.value(model.quarter_end(k, rho));
        out.lines.push_back({k, 0.5 * (start + end),
                             default_interval_probability(measure, grid, k)});
    }
    out.survival = {coeffs.survival_value(), measure.survival(grid.horizon())};
    return out;
}

}  // namespace cdsbounds
