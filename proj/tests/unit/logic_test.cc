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

#include "qlogic/logic.h"

#include <array>
#include <cmath>

#include "gtest/gtest.h"

#include "qlogic/errors.h"
#include "qlogic/random.h"
#include "qlogic/teleport.h"

using namespace qlogic;

namespace {

Projection ket(double re0, double re1) {
    Eigen::VectorXcd v(2);
    v << re0, re1;
    return Projection::onto(v);
}

Projection basis_projection(std::size_t dim, std::size_t k) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim));
    v(static_cast<Eigen::Index>(k)) = 1.0;
    return Projection::onto(v);
}

/// Random pair sharing an eigenbasis.
std::pair<Projection, Projection> commuting_pair(std::size_t dim, Rng& rng) {
    const auto n = static_cast<Eigen::Index>(dim);
    Eigen::MatrixXcd g(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index i = 0; i < n; ++i) g(i, j) = rng.complex_normal();
    }
    const Eigen::MatrixXcd q = orthonormalize(g);
    std::vector<Eigen::Index> ce;
    std::vector<Eigen::Index> cf;
    for (Eigen::Index k = 0; k < n; ++k) {
        if (rng.below(2) == 0) ce.push_back(k);
        if (rng.below(2) == 0) cf.push_back(k);
    }
    auto span = [&](const std::vector<Eigen::Index>& cols) {
        if (cols.empty()) return Projection::zero(dim);
        Eigen::MatrixXcd b(n, static_cast<Eigen::Index>(cols.size()));
        for (std::size_t i = 0; i < cols.size(); ++i) b.col(static_cast<Eigen::Index>(i)) = q.col(cols[i]);
        return Projection::onto_span(b);
    };
    return {span(ce), span(cf)};
}

}  // namespace

TEST(projection, make_validates) {
    EXPECT_THROW(Projection::make(0.5 * ComplexMatrix::identity(2)), NotAProjection);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2, 2);
    m(0, 1) = 1.0;
    EXPECT_THROW(Projection::make(ComplexMatrix(m)), NotAProjection);
    EXPECT_EQ(Projection::make(ComplexMatrix::identity(3)).rank(), 3u);
    EXPECT_EQ(Projection::zero(3).rank(), 0u);
    EXPECT_THROW(Projection::onto(Eigen::VectorXcd::Zero(2)), InvalidArgument);
}

TEST(projection, onto_span_requires_orthonormal_columns) {
    Eigen::MatrixXcd b(3, 2);
    b << 1, 1, 0, 0, 0, 0;
    EXPECT_THROW(Projection::onto_span(b), InvalidArgument);
}

TEST(orthocomplement, examples) {
    EXPECT_EQ(max_diff(orthocomplement(Projection::zero(2)).matrix(), ComplexMatrix::identity(2)),
              0.0);
    EXPECT_LE(max_diff(orthocomplement(basis_projection(2, 0)).matrix(),
                       basis_projection(2, 1).matrix()),
              1e-15);
}

TEST(orthocomplement, involutive_bit_exact) {
    Rng rng(1);
    for (int t = 0; t < 20; ++t) {
        const Projection e = random_projection(4, 1 + rng.below(3), rng);
        const Projection back = orthocomplement(orthocomplement(e));
        EXPECT_EQ(max_diff(back.matrix(), e.matrix()), 0.0);
        EXPECT_EQ(back.rank(), e.rank());
        EXPECT_EQ(orthocomplement(e).rank(), 4 - e.rank());
    }
}

TEST(order, examples) {
    Rng rng(2);
    for (int t = 0; t < 10; ++t) {
        const Projection e = random_projection(3, 1 + rng.below(3), rng);
        EXPECT_TRUE(leq(e, Projection::identity(3)));
        EXPECT_TRUE(leq(Projection::zero(3), e));
        EXPECT_TRUE(leq(e, e));
    }
    const double h = 1.0 / std::sqrt(2.0);
    EXPECT_FALSE(leq(ket(1, 0), ket(h, h)));
    EXPECT_FALSE(leq(ket(h, h), ket(1, 0)));
}

TEST(order, reverses_under_orthocomplement) {
    Rng rng(3);
    for (int t = 0; t < 20; ++t) {
        const Projection e = random_projection(4, 2, rng);
        // A rank-1 sub-event of e: project a random vector into e.
        const Eigen::VectorXcd v = e.matrix().eigen() * random_unit_vector(4, rng);
        const Projection f = Projection::onto(v);
        ASSERT_TRUE(leq(f, e));
        EXPECT_TRUE(leq(orthocomplement(e), orthocomplement(f)));
    }
}

TEST(orthogonality, examples) {
    EXPECT_TRUE(is_orthogonal(basis_projection(2, 0), basis_projection(2, 1)));
    Rng rng(4);
    for (int t = 0; t < 10; ++t) {
        const Projection e = random_projection(5, 2, rng);
        EXPECT_TRUE(is_orthogonal(e, orthocomplement(e)));
        EXPECT_FALSE(is_orthogonal(e, e));
    }
}

TEST(compatibility, examples) {
    Rng rng(5);
    const Projection e = random_projection(3, 1, rng);
    EXPECT_TRUE(is_compatible(e, e));
    const double h = 1.0 / std::sqrt(2.0);
    EXPECT_FALSE(is_compatible(ket(1, 0), ket(h, h)));
    EXPECT_NEAR(commutator_norm(ket(1, 0), ket(h, h)), 0.5, 1e-15);
}

TEST(compatibility, teleport_embeddings_commute) {
    const TeleportSystem sys = build_system();
    Rng rng(6);
    for (int t = 0; t < 10; ++t) {
        const Projection x = random_projection(2, 1, rng);
        const Projection y = random_projection(2, 1, rng);
        EXPECT_TRUE(is_compatible(sys.embed(Subsystem::A, x), sys.embed(Subsystem::B, y)));
        EXPECT_TRUE(is_compatible(sys.embed(Subsystem::A, x), sys.embed(Subsystem::C, y)));
        EXPECT_TRUE(is_compatible(sys.embed(Subsystem::B, x), sys.embed(Subsystem::C, y)));
    }
}

TEST(meet, examples) {
    Rng rng(7);
    for (int t = 0; t < 10; ++t) {
        const Projection e = random_projection(4, 2, rng);
        EXPECT_LE(max_diff(meet_compatible(e, Projection::identity(4)).matrix(), e.matrix()), 1e-15);
        EXPECT_LE(max_norm(meet_compatible(e, orthocomplement(e)).matrix()), 1e-15);
    }
    const double h = 1.0 / std::sqrt(2.0);
    EXPECT_THROW(meet_compatible(ket(1, 0), ket(h, h)), IncompatiblePair);
    EXPECT_THROW(join_compatible(ket(1, 0), ket(h, h)), IncompatiblePair);
}

TEST(meet, teleport_initial_event) {
    const TeleportSystem sys = build_system();
    Rng rng(8);
    const Projection x = sys.embed(Subsystem::C, random_projection(2, 1, rng));
    const Projection g = meet_compatible(sys.d_ab, x);
    EXPECT_LE(max_diff(g.matrix(), sys.d_ab.matrix() * x.matrix()), 1e-15);
    EXPECT_EQ(g.rank(), 1u);
}

TEST(join, examples) {
    Rng rng(9);
    for (int t = 0; t < 10; ++t) {
        const Projection e = random_projection(3, 1 + rng.below(3), rng);
        EXPECT_LE(max_diff(join_compatible(e, Projection::zero(3)).matrix(), e.matrix()), 1e-15);
        EXPECT_LE(max_diff(join_compatible(e, orthocomplement(e)).matrix(),
                           ComplexMatrix::identity(3)),
                  1e-15);
    }
    const std::array<double, 3> d{1, 1, 0};
    const Projection j = join_compatible(basis_projection(3, 0), basis_projection(3, 1));
    EXPECT_EQ(max_diff(j.matrix(), ComplexMatrix::diagonal(d)), 0.0);
    EXPECT_EQ(j.rank(), 2u);
}

TEST(atom, examples) {
    EXPECT_TRUE(is_atom(basis_projection(2, 0)));
    EXPECT_FALSE(is_atom(Projection::identity(2)));
    EXPECT_FALSE(is_atom(Projection::zero(2)));
    Eigen::MatrixXcd block = Eigen::MatrixXcd::Zero(4, 2);
    block(0, 0) = 1.0;
    block(1, 1) = 1.0;
    EXPECT_FALSE(is_atom(Projection::onto_span(block)));
}

TEST(lattice, de_morgan_and_orthomodularity_on_commuting_pairs) {
    Rng rng(10);
    for (int t = 0; t < 50; ++t) {
        const auto [e, f] = commuting_pair(5, rng);
        const Projection lhs = orthocomplement(join_compatible(e, f));
        const Projection rhs = meet_compatible(orthocomplement(e), orthocomplement(f));
        EXPECT_LE(max_diff(lhs.matrix(), rhs.matrix()), 1e-10);

        // f ^ e <= e, and e = (e ^ f) v (e ^ (e ^ f)')
        const Projection m = meet_compatible(e, f);
        ASSERT_TRUE(leq(m, e));
        const Projection rest = meet_compatible(e, orthocomplement(m));
        EXPECT_LE(max_diff(join_compatible(m, rest).matrix(), e.matrix()), 1e-10);
    }
}
