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

#ifndef QLOGIC_ANNEX_H
#define QLOGIC_ANNEX_H

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "qlogic/assumptions.h"
#include "qlogic/probability.h"

namespace qlogic::annex {

// Verification of the closed-form success probability through the 4x4
// representation M of S_f S_e on span{b_1, b_2, b_3, b_4}, where
// b_1 = e, b_2 = f, b_3 = U_e' f, b_4 = U_f' e and P(f|e) = P(e|f) = p.
//
// In a Hilbert model the four b's satisfy b_1 - b_2 + (b_3 - b_4)/(1-p) = 0
// (both sides of b_1 + b_3/(1-p) = b_2 + b_4/(1-p) equal e v f), so their
// span has dimension 3 and coefficients are unique only up to the kernel
// vector returned by kernel_vector(p). M maps that vector to itself, so it
// still represents S_f S_e faithfully.

using RealMatrix4 = Eigen::Matrix4d;
using Vector4 = Eigen::Vector4d;

/// Throws DomainError unless 0 < p < 1.
RealMatrix4 build_M(double p);

/// (1, -1, 1/(1-p), -1/(1-p)).
Vector4 kernel_vector(double p);

/// alpha_1 = 8p^2 - 8p + 1 + 4(1-2p) sqrt(p(1-p)) i.
std::complex<double> alpha1(double p);

/// b_1..b_4 in the concrete model e = |0><0|, f = |chi><chi| direct-summed
/// `copies` times.
std::array<HermitianOperator, 4> b_basis(double p, std::size_t copies = 1);

struct BasisAction {
    double p;
    std::size_t copies;
    std::size_t span_rank;
    /// max_k ||S_f S_e b_k - sum_j M_jk b_j||_max
    double operator_residual;
    /// Least-squares coefficients minus M's columns, with the kernel
    /// direction removed.
    double coefficient_residual;
    /// ||M v - v|| and ||sum_j v_j b_j|| for the kernel vector v.
    double kernel_residual;
    /// Minimum-norm least-squares coefficients; column k expands S_f S_e b_k.
    RealMatrix4 lsq_coefficients;
};

/// Throws BasisDegenerate at p in {0, 1} or when the b's span fewer than
/// three dimensions; DomainError for p outside [0, 1].
BasisAction basis_action(double p, std::size_t copies = 1);
CheckResult verify_basis_action(double p, const Tolerance& tol = {}, std::size_t copies = 1);

struct EigenReport {
    double p;
    /// Eigenvalues straight from the numeric solver.
    std::vector<std::complex<double>> raw_eigs;
    /// Raw eigenvalues with each near-coincident cluster replaced by its mean.
    /// A defective eigenvalue splits by O(sqrt(eps)) in floating point; the
    /// cluster mean is accurate to O(eps).
    std::vector<std::complex<double>> computed_eigs;
    /// alpha_1, alpha_2, 1, 1.
    std::array<std::complex<double>, 4> expected;
    /// Largest |computed - expected| under the best matching.
    double max_deviation;
    /// ||lambda| - 1| for the computed eigenvalues matched to alpha_1, alpha_2.
    double alpha_modulus_deviation;
    /// Largest spread inside any cluster (raw solver splitting).
    double cluster_spread;
    /// rank(M - I) from singular values.
    std::size_t rank_m_minus_identity;
    /// ||N2^-1 N1^-1 M N1 N2 - J||_max with the printed N1, N2 and their
    /// printed inverses; an optional cross-check, not the source of truth.
    double jordan_crosscheck_residual;
};

EigenReport eigen_check(double p);

struct MPowerProb {
    /// 1/2 - (1-2p)/2 Re(alpha_1^r) + sqrt(p(1-p)) Im(alpha_1^r)
    double analytic;
    /// From the second column of M^r (repeated multiplication) projected with
    /// U_e b_1 = e, U_e b_2 = p e, U_e b_3 = 0, U_e b_4 = (1-p)^2 e.
    double literal;
    double deviation;
};

/// Throws DomainError unless 0 < p < 1.
MPowerProb m_power_prob(double p, std::size_t r);

/// P(f | (S_e S_f)^r e) in the concrete model, by r applications of S_f then S_e.
double simulate_prob(double p, std::size_t r, std::size_t copies = 1);

/// arcsin(2 sqrt(x - x^2)) + r arcsin(4(1-2x) sqrt(x - x^2)) - (4r+2) arcsin(sqrt x).
/// Throws DomainError unless 0 < x < 1. Zero only where the principal
/// branches coincide with the geometric angles: x <= 1/2 for r = 0 and
/// x <= sin^2(pi/8) for r >= 1.
double trig_identity_residual(double x, std::size_t r);

/// The same identity with s = atan2(2 sqrt(p(1-p)), 1-2p) and t = arg(alpha_1)
/// in place of the arcsins, reduced mod 2 pi into (-pi, pi]. Zero on all of (0, 1).
double angle_identity_residual(double p, std::size_t r);

/// Largest x for which trig_identity_residual(x, r >= 1) vanishes.
double trig_identity_branch_limit();

struct GridPoint {
    double p;
    std::size_t r;
    double closed_form;
    double m_power;
    double simulated;
    double max_pairwise_dev;
    double eig_dev;
};

/// Every (p, r) with r in [0, r_max], in grid order.
std::vector<GridPoint> sweep(const std::vector<double>& p_grid, std::size_t r_max);

/// {0.05, 0.10, ..., 0.95}, computed as k/20 to avoid accumulated drift.
std::vector<double> default_p_grid();

nlohmann::ordered_json to_json(const GridPoint& g);

}  // namespace qlogic::annex

#endif  // QLOGIC_ANNEX_H
