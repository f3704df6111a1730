#include "cdsbounds/linear_program.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cdsbounds/errors.hpp"

namespace cdsbounds {

LinearProgram::LinearProgram(std::vector<double> objective) : objective_(std::move(objective)) {
    if (objective_.empty()) throw ConfigurationError("linear program needs a variable");
}

std::span<const double> LinearProgram::row(std::size_t i) const {
    const std::size_t n = num_variables();
    return std::span<const double>(coefficients_).subspan(i * n, n);
}

void LinearProgram::add_row(std::span<const double> coefficients, double rhs) {
    if (coefficients.size() != num_variables()) {
        throw ConfigurationError("constraint row length does not match the variable count");
    }
    coefficients_.insert(coefficients_.end(), coefficients.begin(), coefficients.end());
    rhs_.push_back(rhs);
}

double LinearProgram::slack(std::size_t i, std::span<const double> x) const {
    const auto a = row(i);
    double s = -rhs_[i];
    for (std::size_t j = 0; j < a.size(); ++j) s += a[j] * x[j];
    return s;
}

double LinearProgram::objective_value(std::span<const double> x) const {
    double v = 0.0;
    for (std::size_t j = 0; j < objective_.size(); ++j) v += objective_[j] * x[j];
    return v;
}

std::string_view to_string(LpStatus status) {
    switch (status) {
        case LpStatus::Optimal: return "optimal";
        case LpStatus::Unbounded: return "unbounded";
        case LpStatus::Infeasible: return "infeasible";
    }
    return "unknown";
}

namespace {

/// Revised simplex over the dual in equality form
///
///     minimize  cost . v   s.t.  E v = e,  v >= 0,
///
/// where the first M columns of E are the sign-adjusted primal rows and the
/// last n columns are artificial unit vectors.
class DualSimplex {
public:
    DualSimplex(const LinearProgram& lp, const SimplexOptions& options)
        : lp_(lp), opt_(options), n_(lp.num_variables()), m_(lp.num_rows()),
          sign_(n_), rhs_(n_), basis_(n_), binv_(n_ * n_), xb_(n_) {
        const auto c = lp.objective();
        for (std::size_t j = 0; j < n_; ++j) {
            sign_[j] = c[j] < 0.0 ? -1.0 : 1.0;
            rhs_[j] = sign_[j] * c[j];
            basis_[j] = m_ + j;
        }
        refactor();
    }

    LpSolution run() {
        LpSolution out;

        // Phase 1: drive the artificials to zero.
        std::vector<double> cost(m_ + n_, 0.0);
        std::fill(cost.begin() + static_cast<std::ptrdiff_t>(m_), cost.end(), 1.0);
        const Outcome p1 = iterate(cost, /*allow_artificial=*/true, out.iterations);
        if (p1 == Outcome::IterationLimit) {
            throw std::runtime_error("simplex iteration limit reached in phase 1");
        }
        double infeasibility = 0.0;
        for (std::size_t r = 0; r < n_; ++r) {
            if (basis_[r] >= m_) infeasibility += xb_[r];
        }
        double scale = 1.0;
        for (double v : rhs_) scale = std::max(scale, std::abs(v));
        if (infeasibility > opt_.feasibility_tolerance * scale) {
            out.status = LpStatus::Unbounded;
            return out;
        }
        expel_artificials();

        // Phase 2: minimize -b . y.
        std::fill(cost.begin(), cost.end(), 0.0);
        for (std::size_t i = 0; i < m_; ++i) cost[i] = -lp_.rhs(i);
        const Outcome p2 = iterate(cost, /*allow_artificial=*/false, out.iterations);
        if (p2 == Outcome::IterationLimit) {
            throw std::runtime_error("simplex iteration limit reached in phase 2");
        }
        if (p2 == Outcome::Unbounded) {
            out.status = LpStatus::Infeasible;
            return out;
        }

        // Primal solution from the simplex multipliers: x = -S pi.
        const std::vector<double> pi = multipliers(cost);
        out.x.resize(n_);
        for (std::size_t j = 0; j < n_; ++j) out.x[j] = -sign_[j] * pi[j];
        out.objective = lp_.objective_value(out.x);
        out.status = LpStatus::Optimal;
        return out;
    }

private:
    enum class Outcome { Optimal, Unbounded, IterationLimit };

    double column_entry(std::size_t col, std::size_t eq) const {
        if (col < m_) return sign_[eq] * lp_.row(col)[eq];
        return col - m_ == eq ? 1.0 : 0.0;
    }

    void refactor() {
        // Gauss-Jordan inversion of the basis matrix with partial pivoting.
        std::vector<double> a(n_ * n_);
        for (std::size_t r = 0; r < n_; ++r) {
            for (std::size_t c = 0; c < n_; ++c) a[r * n_ + c] = column_entry(basis_[c], r);
        }
        std::fill(binv_.begin(), binv_.end(), 0.0);
        for (std::size_t i = 0; i < n_; ++i) binv_[i * n_ + i] = 1.0;
        for (std::size_t col = 0; col < n_; ++col) {
            std::size_t piv = col;
            for (std::size_t r = col + 1; r < n_; ++r) {
                if (std::abs(a[r * n_ + col]) > std::abs(a[piv * n_ + col])) piv = r;
            }
            if (std::abs(a[piv * n_ + col]) < 1e-14) {
                throw std::runtime_error("singular simplex basis");
            }
            if (piv != col) {
                for (std::size_t c = 0; c < n_; ++c) {
                    std::swap(a[piv * n_ + c], a[col * n_ + c]);
                    std::swap(binv_[piv * n_ + c], binv_[col * n_ + c]);
                }
            }
            const double inv = 1.0 / a[col * n_ + col];
            for (std::size_t c = 0; c < n_; ++c) {
                a[col * n_ + c] *= inv;
                binv_[col * n_ + c] *= inv;
            }
            for (std::size_t r = 0; r < n_; ++r) {
                if (r == col) continue;
                const double f = a[r * n_ + col];
                if (f == 0.0) continue;
                for (std::size_t c = 0; c < n_; ++c) {
                    a[r * n_ + c] -= f * a[col * n_ + c];
                    binv_[r * n_ + c] -= f * binv_[col * n_ + c];
                }
            }
        }
        for (std::size_t r = 0; r < n_; ++r) {
            double v = 0.0;
            for (std::size_t c = 0; c < n_; ++c) v += binv_[r * n_ + c] * rhs_[c];
            xb_[r] = std::max(v, 0.0);
        }
    }

    std::vector<double> multipliers(const std::vector<double>& cost) const {
        std::vector<double> pi(n_, 0.0);
        for (std::size_t r = 0; r < n_; ++r) {
            const double cb = cost[basis_[r]];
            if (cb == 0.0) continue;
            for (std::size_t c = 0; c < n_; ++c) pi[c] += cb * binv_[r * n_ + c];
        }
        return pi;
    }

    std::vector<double> direction(std::size_t col) const {
        std::vector<double> u(n_, 0.0);
        for (std::size_t r = 0; r < n_; ++r) {
            double v = 0.0;
            for (std::size_t c = 0; c < n_; ++c) v += binv_[r * n_ + c] * column_entry(col, c);
            u[r] = v;
        }
        return u;
    }

    bool is_basic(std::size_t col) const {
        return std::find(basis_.begin(), basis_.end(), col) != basis_.end();
    }

    Outcome iterate(const std::vector<double>& cost, bool allow_artificial,
                    std::size_t& iterations) {
        const std::size_t n_cols = allow_artificial ? m_ + n_ : m_;
        for (;;) {
            if (iterations >= opt_.max_iterations) return Outcome::IterationLimit;
            const std::vector<double> pi = multipliers(cost);

            // Bland: lowest-index column with a negative reduced cost enters.
            std::size_t enter = n_cols;
            for (std::size_t j = 0; j < n_cols; ++j) {
                if (is_basic(j)) continue;
                double d = cost[j];
                for (std::size_t c = 0; c < n_; ++c) d -= pi[c] * column_entry(j, c);
                if (d < -opt_.optimality_tolerance) {
                    enter = j;
                    break;
                }
            }
            if (enter == n_cols) return Outcome::Optimal;

            const std::vector<double> u = direction(enter);
            std::size_t leave = n_;
            double best = 0.0;
            for (std::size_t r = 0; r < n_; ++r) {
                if (u[r] <= opt_.pivot_tolerance) continue;
                const double theta = xb_[r] / u[r];
                if (leave == n_ || theta < best - 1e-13) {
                    best = theta;
                    leave = r;
                } else if (theta <= best + 1e-13 && basis_[r] < basis_[leave]) {
                    best = std::min(best, theta);
                    leave = r;
                }
            }
            if (leave == n_) return Outcome::Unbounded;

            basis_[leave] = enter;
            refactor();
            ++iterations;
        }
    }

    /// Pivots zero-level artificials out of the basis where some structural
    /// column has a nonzero entry in their tableau row. Rows where none does
    /// are redundant equalities; their artificial stays basic at zero and no
    /// later pivot can move it.
    void expel_artificials() {
        for (std::size_t r = 0; r < n_; ++r) {
            if (basis_[r] < m_) continue;
            for (std::size_t j = 0; j < m_; ++j) {
                if (is_basic(j)) continue;
                double entry = 0.0;
                for (std::size_t c = 0; c < n_; ++c) entry += binv_[r * n_ + c] * column_entry(j, c);
                if (std::abs(entry) > opt_.pivot_tolerance) {
                    basis_[r] = j;
                    refactor();
                    break;
                }
            }
        }
    }

    const LinearProgram& lp_;
    SimplexOptions opt_;
    std::size_t n_;  // equalities (primal variables)
    std::size_t m_;  // structural columns (primal rows)
    std::vector<double> sign_;
    std::vector<double> rhs_;
    std::vector<std::size_t> basis_;
    std::vector<double> binv_;
    std::vector<double> xb_;
};

}  // namespace

LpSolution solve_lp(const LinearProgram& lp, const SimplexOptions& options) {
    DualSimplex simplex(lp, options);
    return simplex.run();
}

}  // namespace cdsbounds
