// Copyright 2026 The qlogic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qlogic/annex.h"

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"

#include "qlogic/errors.h"
#include "qlogic/grover.h"

using namespace qlogic;
using namespace qlogic::annex;

TEST(build_M, entries) {
    const RealMatrix4 half = build_M(0.5);
    EXPECT_EQ(half.col(0), Vector4(-1, 1, 0, 2));
    EXPECT_EQ(build_M(0.25)(1, 1), 1.5);
    for (double p : {0.1, 0.25, 0.5, 0.8}) {
        const RealMatrix4 m = build_M(p);
        const double a = alpha1(p).real();
        EXPECT_NEAR(m.trace(), 16 * p * p - 16 * p + 4, 1e-14);
        EXPECT_NEAR(m.trace(), 2 * a + 2, 1e-14);
        EXPECT_LE((m * kernel_vector(p) - kernel_vector(p)).cwiseAbs().maxCoeff(), 1e-14);
    }
    EXPECT_THROW(build_M(0.0), DomainError);
    EXPECT_THROW(build_M(1.0), DomainError);
}

TEST(basis_action, coefficients_match_columns) {
    for (double p : {0.05, 0.2, 0.37, 0.5, 0.63, 0.95}) {
        for (std::size_t copies : {1u, 2u}) {
            const BasisAction a = basis_action(p, copies);
            EXPECT_EQ(a.span_rank, 3u);
            EXPECT_LE(a.operator_residual, 1e-10) << p;
            EXPECT_LE(a.coefficient_residual, 1e-10) << p;
            EXPECT_LE(a.kernel_residual, 1e-10) << p;
            EXPECT_TRUE(verify_basis_action(p, Tolerance{}, copies).passed);
        }
    }
}

TEST(basis_action, third_column_at_half) {
    // S_f S_e b_3 = 2(1-p)^2 b_2 - b_3 + 2p b_4.
    const auto b = b_basis(0.5);
    const auto [e, f] = qubit_pair(0.5);
    const HermitianOperator image = s_transform(f, s_transform(e, b[2]));
    const ComplexMatrix expected = 0.5 * b[1].matrix() - b[2].matrix() + b[3].matrix();
    EXPECT_LE(max_diff(image.matrix(), expected), 1e-15);
    EXPECT_EQ(build_M(0.5).col(2), Vector4(0, 0.5, -1, 1));
}

TEST(basis_action, degenerate_endpoints) {
    EXPECT_THROW(basis_action(0.0), BasisDegenerate);
    EXPECT_THROW(basis_action(1.0), BasisDegenerate);
    EXPECT_THROW(basis_action(1.5), DomainError);
}

TEST(eigen_check, half) {
    const EigenReport r = eigen_check(0.5);
    EXPECT_NEAR(alpha1(0.5).real(), -1.0, 1e-15);
    EXPECT_NEAR(alpha1(0.5).imag(), 0.0, 1e-15);
    EXPECT_LE(r.max_deviation, 1e-9);
    EXPECT_EQ(r.rank_m_minus_identity, 3u);
}

TEST(eigen_check, quarter) {
    const std::complex<double> a = alpha1(0.25);
    EXPECT_NEAR(a.real(), -0.5, 1e-15);
    EXPECT_NEAR(a.imag(), std::sqrt(3.0) / 2, 1e-15);
    EXPECT_LE(eigen_check(0.25).max_deviation, 1e-9);
}

TEST(eigen_check, grid) {
    for (int k = 1; k <= 19; ++k) {
        const double p = k / 20.0;
        const EigenReport r = eigen_check(p);
        EXPECT_LE(r.max_deviation, 1e-9) << p;
        EXPECT_LE(r.alpha_modulus_deviation, 1e-12) << p;
        EXPECT_EQ(r.rank_m_minus_identity, 3u) << p;
        EXPECT_LE(r.jordan_crosscheck_residual, 1e-12) << p;
        EXPECT_EQ(r.raw_eigs.size(), 4u);
    }
}

TEST(m_power_prob, examples) {
    for (double p : {0.1, 0.3, 0.5, 0.9}) {
        const MPowerProb m0 = m_power_prob(p, 0);
        EXPECT_NEAR(m0.analytic, p, 1e-15);
        EXPECT_NEAR(m0.literal, p, 1e-15);
    }
    const MPowerProb q = m_power_prob(0.25, 1);
    EXPECT_NEAR(q.analytic, 1.0, 1e-12);
    EXPECT_NEAR(q.literal, 1.0, 1e-12);

    const MPowerProb t = m_power_prob(0.1, 2);
    EXPECT_NEAR(t.analytic, 0.99856, 1e-12);
    EXPECT_NEAR(t.literal, 0.99856, 1e-12);
    EXPECT_NEAR(closed_form(0.1, 2), 0.99856, 1e-12);
    EXPECT_LE(t.deviation, 1e-10);
}

TEST(simulate_prob, matches_closed_form) {
    for (double p : {0.07, 0.5, 0.81}) {
        for (std::size_t r : {0u, 1u, 5u, 17u}) {
            EXPECT_NEAR(simulate_prob(p, r), closed_form(p, r), 1e-10);
            EXPECT_NEAR(simulate_prob(p, r, 2), closed_form(p, r), 1e-10);
        }
    }
}

TEST(trig_identity, examples) {
    EXPECT_NEAR(trig_identity_residual(0.25, 1), -std::numbers::pi / 3, 1e-12);
    for (std::size_t r = 0; r <= 4; ++r) {
        const double rr = static_cast<double>(r);
        EXPECT_NEAR(trig_identity_residual(0.5, r),
                    std::numbers::pi / 2 - (4 * rr + 2) * std::numbers::pi / 4, 1e-12);
    }
    for (std::size_t r = 1; r <= 5; ++r) EXPECT_NEAR(trig_identity_residual(0.1, r), 0.0, 1e-9);
    EXPECT_THROW(trig_identity_residual(0.0, 1), DomainError);
    EXPECT_THROW(trig_identity_residual(1.0, 1), DomainError);
}

TEST(trig_identity, holds_up_to_branch_limit) {
    const double limit = trig_identity_branch_limit();
    EXPECT_NEAR(limit, 0.14644660940672624, 1e-15);
    for (int k = 1; k <= 100; ++k) {
        const double x = limit * k / 100.0;
        for (std::size_t r = 0; r <= 10; ++r) {
            EXPECT_NEAR(trig_identity_residual(x, r), 0.0, 1e-9) << x << " " << r;
        }
    }
    EXPECT_GT(std::abs(trig_identity_residual(limit + 0.01, 1)), 1e-3);
    for (int k = 1; k <= 20; ++k) EXPECT_NEAR(trig_identity_residual(k / 41.0, 0), 0.0, 1e-9);
}

TEST(trig_identity, angle_form_holds_on_open_interval) {
    for (int k = 1; k < 100; ++k) {
        const double p = k / 100.0;
        for (std::size_t r = 0; r <= 30; ++r) {
            EXPECT_NEAR(angle_identity_residual(p, r), 0.0, 1e-9) << p << " " << r;
        }
    }
}

TEST(sweep, triple_agreement) {
    const auto grid = default_p_grid();
    ASSERT_EQ(grid.size(), 19u);
    EXPECT_DOUBLE_EQ(grid.front(), 0.05);
    EXPECT_DOUBLE_EQ(grid.back(), 0.95);
    const auto points = sweep(grid, 30);
    ASSERT_EQ(points.size(), 19u * 31u);
    for (const GridPoint& g : points) {
        EXPECT_LE(g.max_pairwise_dev, 1e-9) << g.p << " " << g.r;
        EXPECT_LE(g.eig_dev, 1e-9);
    }
    const auto j = to_json(points.front());
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    const std::vector<std::string> expected{"p",         "r",                "closed_form", "m_power",
                                            "simulated", "max_pairwise_dev", "eig_dev"};
    EXPECT_EQ(keys, expected);
}
