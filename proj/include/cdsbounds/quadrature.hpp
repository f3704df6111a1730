#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace cdsbounds {

/// n-point Gauss-Legendre rule on [-1, 1].
class GaussLegendre {
public:
    explicit GaussLegendre(std::size_t n);

    std::size_t size() const noexcept { return nodes_.size(); }
    std::span<const double> nodes() const noexcept { return nodes_; }
    std::span<const double> weights() const noexcept { return weights_; }

    /// Integral of f over [a, b].
    template <class F>
    double integrate(double a, double b, F&& f) const {
        const double half = 0.5 * (b - a);
        const double mid = 0.5 * (a + b);
        double sum = 0.0;
        for (std::size_t i = 0; i < nodes_.size(); ++i) {
            sum += weights_[i] * f(mid + half * nodes_[i]);
        }
        return half * sum;
    }

private:
    std::vector<double> nodes_;
    std::vector<double> weights_;
};

}  // namespace cdsbounds
