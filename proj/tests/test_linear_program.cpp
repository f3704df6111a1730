#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "cdsbounds/linear_program.hpp"

using namespace cdsbounds;

namespace {

void add(LinearProgram& lp, std::vector<double> a, double b) { lp.add_row(a, b); }

// Minimum of c.x over a 2-variable polygon by checking every pairwise vertex.
double vertex_enumeration(const LinearProgram& lp) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < lp.num_rows(); ++i) {
        for (std::size_t j = i + 1; j < lp.num_rows(); ++j) {
            const auto a = lp.row(i);
            const auto b = lp.row(j);
            const double det = a[0] * b[1] - a[1] * b[0];
            if (std::abs(det) < 1e-12) continue;
            const std::vector<double> x{(lp.rhs(i) * b[1] - a[1] * lp.rhs(j)) / det,
                                        (a[0] * lp.rhs(j) - lp.rhs(i) * b[0]) / det};
            bool feasible = true;
            for (std::size_t k = 0; k < lp.num_rows(); ++k) feasible = feasible && lp.slack(k, x) >= -1e-9;
            if (feasible) best = std::min(best, lp.objective_value(x));
        }
    }
    return best;
}

}  // namespace

TEST(LinearProgram, SingleBound) {
    LinearProgram lp({1.0});
    add(lp, {1.0}, 0.0);
    const LpSolution s = solve_lp(lp);
    ASSERT_EQ(s.status, LpStatus::Optimal);
    EXPECT_NEAR(s.x[0], 0.0, 1e-14);
    EXPECT_NEAR(s.objective, 0.0, 1e-14);
}

TEST(LinearProgram, AbsoluteValueEpigraph) {
    // min beta s.t. beta >= |x - 1|.
    LinearProgram lp({1.0, 0.0});
    add(lp, {1.0, 1.0}, 1.0);
    add(lp, {1.0, -1.0}, -1.0);
    const LpSolution s = solve_lp(lp);
    ASSERT_EQ(s.status, LpStatus::Optimal);
    EXPECT_NEAR(s.x[0], 0.0, 1e-12);
    EXPECT_NEAR(s.x[1], 1.0, 1e-12);
}

TEST(LinearProgram, DetectsUnboundedAndInfeasible) {
    LinearProgram unbounded({1.0, -1.0});
    add(unbounded, {1.0, 0.0}, 0.0);
    EXPECT_EQ(solve_lp(unbounded).status, LpStatus::Unbounded);

    LinearProgram infeasible({1.0});
    add(infeasible, {1.0}, 1.0);
    add(infeasible, {-1.0}, 0.0);
    EXPECT_EQ(solve_lp(infeasible).status, LpStatus::Infeasible);

    LinearProgram free_variable({1.0});
    EXPECT_EQ(solve_lp(free_variable).status, LpStatus::Unbounded);
}

TEST(LinearProgram, DegenerateVertex) {
    // Three rows meet at (1, 1).
    LinearProgram lp({1.0, 1.0});
    add(lp, {1.0, 0.0}, 1.0);
    add(lp, {0.0, 1.0}, 1.0);
    add(lp, {1.0, 1.0}, 2.0);
    add(lp, {2.0, 1.0}, 3.0);
    const LpSolution s = solve_lp(lp);
    ASSERT_EQ(s.status, LpStatus::Optimal);
    EXPECT_NEAR(s.objective, 2.0, 1e-12);
}

TEST(LinearProgram, RandomPolygonsMatchVertexEnumeration) {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        // Tangent rows of the unit circle keep the feasible set bounded in c's direction.
        const double angle = 3.14159265358979 * u(rng);
        LinearProgram lp({std::cos(angle), std::sin(angle)});
        for (int i = 0; i < 12; ++i) {
            const double t = 3.14159265358979 * u(rng);
            add(lp, {std::cos(t), std::sin(t)}, -1.0 + 0.3 * u(rng));
        }
        for (int i = 0; i < 4; ++i) {
            const double t = 1.5707963267949 * i;
            add(lp, {std::cos(t), std::sin(t)}, -3.0);
        }
        const LpSolution s = solve_lp(lp);
        ASSERT_EQ(s.status, LpStatus::Optimal) << trial;
        EXPECT_NEAR(s.objective, vertex_enumeration(lp), 1e-9) << trial;
        for (std::size_t k = 0; k < lp.num_rows(); ++k) EXPECT_GE(lp.slack(k, s.x), -1e-9);
    }
}

TEST(LinearProgram, RowValidation) {
    LinearProgram lp({1.0, 2.0});
    const std::vector<double> short_row{1.0};
    EXPECT_THROW(lp.add_row(short_row, 0.0), std::invalid_argument);
}
