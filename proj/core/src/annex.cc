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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "qlogic/errors.h"
#include "qlogic/grover.h"

namespace qlogic::annex {

namespace {

using Complex4 = Eigen::Matrix4cd;

void require_open_unit(double p, const char* what) {
    if (!(p > 0.0 && p < 1.0)) {
        throw DomainError(std::string(what) + ": p must lie in (0, 1)");
    }
}

/// Real coordinates of a Hermitian operator: real parts then imaginary parts.
Eigen::VectorXd vectorize(const ComplexMatrix& m) {
    const Eigen::Index n = m.eigen().size();
    Eigen::VectorXd v(2 * n);
    for (Eigen::Index i = 0; i < n; ++i) {
        v(i) = m.eigen()(i).real();
        v(n + i) = m.eigen()(i).imag();
    }
    return v;
}

ComplexMatrix combine(const std::array<HermitianOperator, 4>& b, const Vector4& c) {
    ComplexMatrix out = c(0) * b[0].matrix();
    for (int j = 1; j < 4; ++j) {
        out = out + c(j) * b[static_cast<std::size_t>(j)].matrix();
    }
    return out;
}

}  // namespace

RealMatrix4 build_M(double p) {
    require_open_unit(p, "build_M");
    const double q = 1.0 - p;
    const double diag = 8 * p * p - 8 * p + 3;
    RealMatrix4 m;
    // Column k holds the coefficients of S_f S_e b_k.
    m << -1, -2 * p, 0, -2 * q * q,
         2 * p, diag, 2 * q * q, 8 * p * q * q,
         0, -2, -1, -2 * p,
         2, 8 * p, 2 * p, diag;
    return m;
}

Vector4 kernel_vector(double p) {
    require_open_unit(p, "kernel_vector");
    const double inv = 1.0 / (1.0 - p);
    return Vector4(1.0, -1.0, inv, -inv);
}

std::complex<double> alpha1(double p) {
    require_open_unit(p, "alpha1");
    return {8 * p * p - 8 * p + 1, 4 * (1 - 2 * p) * std::sqrt(p * (1 - p))};
}

std::array<HermitianOperator, 4> b_basis(double p, std::size_t copies) {
    auto [e, f] = qubit_pair(p, copies);
    const Projection ec = orthocomplement(e);
    const Projection fc = orthocomplement(f);
    return {HermitianOperator(e), HermitianOperator(f), u_transform(ec, f), u_transform(fc, e)};
}

BasisAction basis_action(double p, std::size_t copies) {
    if (p == 0.0 || p == 1.0) {
        throw BasisDegenerate("basis_action: b_1..b_4 collapse at p = " + std::to_string(p));
    }
    if (!(p > 0.0 && p < 1.0)) {
        throw DomainError("basis_action: p must lie in [0, 1]");
    }
    auto [e, f] = qubit_pair(p, copies);
    const auto b = b_basis(p, copies);

    Eigen::MatrixXd design(vectorize(b[0].matrix()).size(), 4);
    for (int j = 0; j < 4; ++j) {
        design.col(j) = vectorize(b[static_cast<std::size_t>(j)].matrix());
    }
    const Eigen::JacobiSVD<Eigen::MatrixXd> svd(design);
    const auto& sv = svd.singularValues();
    std::size_t rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > 1e-9 * sv(0)) ++rank;
    }
    if (rank < 3) {
        throw BasisDegenerate("basis_action: b-span has rank " + std::to_string(rank));
    }

    const RealMatrix4 m = build_M(p);
    const Vector4 v = kernel_vector(p);
    const Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(design);

    BasisAction out{p, copies, rank, 0.0, 0.0, 0.0, RealMatrix4::Zero()};
    for (int k = 0; k < 4; ++k) {
        const HermitianOperator image = s_transform(f, s_transform(e, b[static_cast<std::size_t>(k)]));
        const Vector4 column = m.col(k);
        out.operator_residual =
            std::max(out.operator_residual, max_diff(image.matrix(), combine(b, column)));

        const Vector4 coeffs = cod.solve(vectorize(image.matrix()));
        out.lsq_coefficients.col(k) = coeffs;
        Vector4 diff = coeffs - column;
        diff -= (diff.dot(v) / v.dot(v)) * v;
        out.coefficient_residual = std::max(out.coefficient_residual, diff.cwiseAbs().maxCoeff());
    }
    out.kernel_residual = std::max((m * v - v).cwiseAbs().maxCoeff(), max_norm(combine(b, v)));
    return out;
}

CheckResult verify_basis_action(double p, const Tolerance& tol, std::size_t copies) {
    const BasisAction a = basis_action(p, copies);
    const double residual =
        std::max({a.operator_residual, a.coefficient_residual, a.kernel_residual});
    return CheckResult::from_residual("annex_basis_action", residual, tol.abs_tol);
}

EigenReport eigen_check(double p) {
    const RealMatrix4 m = build_M(p);
    const Eigen::EigenSolver<RealMatrix4> solver(m, false);
    if (solver.info() != Eigen::Success) {
        throw Error("eigen_check: eigensolver did not converge");
    }
    EigenReport rep;
    rep.p = p;
    for (int i = 0; i < 4; ++i) {
        rep.raw_eigs.push_back(solver.eigenvalues()(i));
    }

    // Replace each cluster of near-coincident eigenvalues by its mean.
    const double radius = 1e-6 * std::max(1.0, m.cwiseAbs().maxCoeff());
    std::array<int, 4> cluster{-1, -1, -1, -1};
    int next_cluster = 0;
    for (int i = 0; i < 4; ++i) {
        if (cluster[static_cast<std::size_t>(i)] >= 0) continue;
        cluster[static_cast<std::size_t>(i)] = next_cluster;
        for (bool grew = true; grew;) {
            grew = false;
            for (int j = 0; j < 4; ++j) {
                if (cluster[static_cast<std::size_t>(j)] >= 0) continue;
                for (int k = 0; k < 4; ++k) {
                    if (cluster[static_cast<std::size_t>(k)] == next_cluster &&
                        std::abs(rep.raw_eigs[static_cast<std::size_t>(j)] -
                                 rep.raw_eigs[static_cast<std::size_t>(k)]) <= radius) {
                        cluster[static_cast<std::size_t>(j)] = next_cluster;
                        grew = true;
                        break;
                    }
                }
            }
        }
        ++next_cluster;
    }
    rep.computed_eigs.resize(4);
    rep.cluster_spread = 0.0;
    for (int c = 0; c < next_cluster; ++c) {
        std::complex<double> sum = 0.0;
        int count = 0;
        for (int i = 0; i < 4; ++i) {
            if (cluster[static_cast<std::size_t>(i)] == c) {
                sum += rep.raw_eigs[static_cast<std::size_t>(i)];
                ++count;
            }
        }
        const std::complex<double> mean = sum / static_cast<double>(count);
        for (int i = 0; i < 4; ++i) {
            if (cluster[static_cast<std::size_t>(i)] == c) {
                rep.computed_eigs[static_cast<std::size_t>(i)] = mean;
                rep.cluster_spread = std::max(
                    rep.cluster_spread, std::abs(rep.raw_eigs[static_cast<std::size_t>(i)] - mean));
            }
        }
    }

    const std::complex<double> a1 = alpha1(p);
    rep.expected = {a1, std::conj(a1), 1.0, 1.0};

    std::array<int, 4> perm{0, 1, 2, 3};
    std::array<int, 4> best = perm;
    double best_dev = INFINITY;
    do {
        double dev = 0.0;
        for (std::size_t i = 0; i < 4; ++i) {
            dev = std::max(dev, std::abs(rep.computed_eigs[static_cast<std::size_t>(perm[i])] -
                                         rep.expected[i]));
        }
        if (dev < best_dev) {
            best_dev = dev;
            best = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    rep.max_deviation = best_dev;
    rep.alpha_modulus_deviation =
        std::max(std::abs(std::abs(rep.computed_eigs[static_cast<std::size_t>(best[0])]) - 1.0),
                 std::abs(std::abs(rep.computed_eigs[static_cast<std::size_t>(best[1])]) - 1.0));

    const Eigen::JacobiSVD<RealMatrix4> svd(m - RealMatrix4::Identity());
    const auto& sv = svd.singularValues();
    rep.rank_m_minus_identity = 0;
    for (int i = 0; i < 4; ++i) {
        if (sv(i) > 1e-9 * std::max(1.0, sv(0))) ++rep.rank_m_minus_identity;
    }

    // Printed transformation matrices and their printed inverses.
    const double q = 1.0 - p;
    const double s = std::sqrt(p * q);
    const std::complex<double> i1(0.0, 1.0);
    Complex4 n1;
    n1 << q, 0, q, 0,
          0, q, 0, q,
          -1, 0, 1, 0,
          0, -1, 0, 1;
    Complex4 n1_inv;
    n1_inv << 1, 0, p - 1, 0,
              0, 1, 0, p - 1,
              1, 0, q, 0,
              0, 1, 0, q;
    n1_inv /= 2 * q;
    Complex4 n2;
    n2 << 1, 1, 0, 0,
          1 - 2 * p + 2 * s * i1, 1 - 2 * p - 2 * s * i1, 0, 0,
          0, 0, 1, -2,
          0, 0, 0, 2;
    Complex4 n2_inv;
    n2_inv << 0.5 + (1 - 2 * p) / (4 * s) * i1, -i1 / (4 * s), 0, 0,
              0.5 - (1 - 2 * p) / (4 * s) * i1, i1 / (4 * s), 0, 0,
              0, 0, 1, 1,
              0, 0, 0, 0.5;
    Complex4 jordan = Complex4::Zero();
    jordan(0, 0) = a1;
    jordan(1, 1) = std::conj(a1);
    jordan(2, 2) = 1.0;
    jordan(3, 3) = 1.0;
    jordan(3, 2) = 1.0;
    const Complex4 transformed = n2_inv * n1_inv * m.cast<std::complex<double>>() * n1 * n2;
    rep.jordan_crosscheck_residual = (transformed - jordan).cwiseAbs().maxCoeff();
    return rep;
}

MPowerProb m_power_prob(double p, std::size_t r) {
    require_open_unit(p, "m_power_prob");
    const std::complex<double> ar = std::pow(alpha1(p), static_cast<double>(r));
    const double analytic =
        0.5 - 0.5 * (1 - 2 * p) * ar.real() + std::sqrt(p * (1 - p)) * ar.imag();

    const RealMatrix4 m = build_M(p);
    RealMatrix4 power = RealMatrix4::Identity();
    for (std::size_t i = 0; i < r; ++i) {
        power = m * power;
    }
    const Vector4 c = power.col(1);
    const double literal = c(0) + c(1) * p + c(3) * (1 - p) * (1 - p);
    return MPowerProb{analytic, literal, std::abs(analytic - literal)};
}

double simulate_prob(double p, std::size_t r, std::size_t copies) {
    require_open_unit(p, "simulate_prob");
    auto [e, f] = qubit_pair(p, copies);
    HermitianOperator x = e;
    for (std::size_t i = 0; i < r; ++i) {
        x = s_transform(e, s_transform(f, x));
    }
    const auto tp = state_independent_prob(f, x.as_projection());
    if (!tp) {
        throw TransitionNotStateIndependent("simulate_prob: P(f|evolved) does not exist");
    }
    return tp->value;
}

double trig_identity_residual(double x, std::size_t r) {
    if (!(x > 0.0 && x < 1.0)) {
        throw DomainError("trig_identity_residual: x must lie in (0, 1)");
    }
    const double root = std::sqrt(x - x * x);
    const double inner = std::clamp(4 * (1 - 2 * x) * root, -1.0, 1.0);
    const double rr = static_cast<double>(r);
    return std::asin(std::min(1.0, 2 * root)) + rr * std::asin(inner) -
           (4 * rr + 2) * std::asin(std::sqrt(x));
}

double angle_identity_residual(double p, std::size_t r) {
    require_open_unit(p, "angle_identity_residual");
    const double s = std::atan2(2 * std::sqrt(p * (1 - p)), 1 - 2 * p);
    const double t = std::arg(alpha1(p));
    const double rr = static_cast<double>(r);
    const double value = s + rr * t - (4 * rr + 2) * std::asin(std::sqrt(p));
    return std::remainder(value, 2 * std::numbers::pi);
}

double trig_identity_branch_limit() { return (2.0 - std::numbers::sqrt2) / 4.0; }

std::vector<GridPoint> sweep(const std::vector<double>& p_grid, std::size_t r_max) {
    std::vector<GridPoint> out;
    out.reserve(p_grid.size() * (r_max + 1));
    for (double p : p_grid) {
        const double eig_dev = eigen_check(p).max_deviation;
        for (std::size_t r = 0; r <= r_max; ++r) {
            const double cf = qlogic::closed_form(p, r);
            const MPowerProb mp = m_power_prob(p, r);
            const double sim = simulate_prob(p, r);
            const std::array<double, 4> values{cf, mp.literal, mp.analytic, sim};
            double dev = 0.0;
            for (std::size_t i = 0; i < values.size(); ++i) {
                for (std::size_t j = i + 1; j < values.size(); ++j) {
                    dev = std::max(dev, std::abs(values[i] - values[j]));
                }
            }
            out.push_back(GridPoint{p, r, cf, mp.literal, sim, dev, eig_dev});
        }
    }
    return out;
}

std::vector<double> default_p_grid() {
    std::vector<double> grid;
    for (int k = 1; k <= 19; ++k) {
        grid.push_back(static_cast<double>(k) / 20.0);
    }
    return grid;
}

nlohmann::ordered_json to_json(const GridPoint& g) {
    nlohmann::ordered_json j;
    j["p"] = g.p;
    j["r"] = g.r;
    j["closed_form"] = g.closed_form;
    j["m_power"] = g.m_power;
    j["simulated"] = g.simulated;
    j["max_pairwise_dev"] = g.max_pairwise_dev;
    j["eig_dev"] = g.eig_dev;
    return j;
}

}  // namespace qlogic::annex
