/**
 * @file linear_program.hpp
 * @brief Small dense linear programs with free variables and ">=" rows.
 *
 *     minimize    c . x
 *     subject to  a_i . x - b_i >= 0,   i = 1..M,   x free
 *
 * Solved through its dual (max b . y, A^T y = c, y >= 0) with a two-phase
 * revised simplex and Bland's rule. The dual has one equality per primal
 * variable, so the basis stays tiny however many rows are sampled.
 */

#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace cdsbounds {

class LinearProgram {
public:
    explicit LinearProgram(std::vector<double> objective);

    std::size_t num_variables() const noexcept { return objective_.size(); }
    std::size_t num_rows() const noexcept { return rhs_.size(); }

    std::span<const double> objective() const noexcept { return objective_; }
    std::span<const double> row(std::size_t i) const;
    double rhs(std::size_t i) const { return rhs_[i]; }

    /// Appends coefficients . x >= rhs.
    void add_row(std::span<const double> coefficients, double rhs);

    /// a_i . x - b_i.
    double slack(std::size_t i, std::span<const double> x) const;

    double objective_value(std::span<const double> x) const;

private:
    std::vector<double> objective_;
    std::vector<double> coefficients_;  // row-major, num_rows x num_variables
    std::vector<double> rhs_;
};

enum class LpStatus {
    Optimal,
    Unbounded,   // objective unbounded below (dual infeasible)
    Infeasible,  // no x satisfies the rows (dual unbounded)
};

std::string_view to_string(LpStatus status);

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    std::vector<double> x;
    double objective = 0.0;
    std::size_t iterations = 0;
};

struct SimplexOptions {
    double optimality_tolerance = 1e-11;
    double pivot_tolerance = 1e-9;
    double feasibility_tolerance = 1e-9;
    std::size_t max_iterations = 100000;
};

LpSolution solve_lp(const LinearProgram& lp, const SimplexOptions& options = {});

}  // namespace cdsbounds
