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

#include "qlogic/random.h"

#include <cmath>
#include <numbers>

#include "qlogic/errors.h"

namespace qlogic {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t root, std::string_view name, std::uint64_t index) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (char c : name) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001B3ULL;
    }
    return splitmix64(splitmix64(splitmix64(root) ^ h) ^ index);
}

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Rng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) {
        u1 = uniform();
    }
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

Complex Rng::complex_normal() {
    const double re = normal();
    const double im = normal();
    return Complex(re, im) * std::numbers::sqrt2 * 0.5;
}

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) {
        throw InvalidArgument("Rng::below: empty range");
    }
    // Rejection sampling keeps the result unbiased.
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t x = engine_();
    while (x >= limit) {
        x = engine_();
    }
    return x % n;
}

Eigen::MatrixXcd orthonormalize(const Eigen::MatrixXcd& columns) {
    Eigen::MatrixXcd q = columns;
    const Eigen::Index k = q.cols();
    for (Eigen::Index j = 0; j < k; ++j) {
        const double original = q.col(j).norm();
        for (int pass = 0; pass < 2; ++pass) {
            for (Eigen::Index i = 0; i < j; ++i) {
                const Complex overlap = q.col(i).dot(q.col(j));
                q.col(j) -= overlap * q.col(i);
            }
        }
        const double norm = q.col(j).norm();
        if (!(norm > 1e-12 * std::max(1.0, original))) {
            throw InvalidArgument("orthonormalize: columns are linearly dependent");
        }
        q.col(j) /= norm;
    }
    return q;
}

namespace {

Eigen::MatrixXcd gaussian_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
    Eigen::MatrixXcd g(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    // Column-major fill order is part of the stream contract.
    for (Eigen::Index j = 0; j < g.cols(); ++j) {
        for (Eigen::Index i = 0; i < g.rows(); ++i) {
            g(i, j) = rng.complex_normal();
        }
    }
    return g;
}

}  // namespace

Eigen::VectorXcd random_unit_vector(std::size_t dim, Rng& rng) {
    Eigen::VectorXcd v = gaussian_matrix(dim, 1, rng).col(0);
    return v / v.norm();
}

Projection random_projection(std::size_t dim, std::size_t rank, Rng& rng,
                             const Tolerance& tol) {
    if (dim < 1 || rank < 1 || rank > dim) {
        throw InvalidArgument("random_projection: need 1 <= rank <= dim");
    }
    if (rank == dim) {
        return Projection::identity(dim, tol);
    }
    const Eigen::MatrixXcd basis = orthonormalize(gaussian_matrix(dim, rank, rng));
    return Projection::onto_span(basis, tol);
}

State random_state(std::size_t dim, Rng& rng) {
    const Eigen::MatrixXcd g = gaussian_matrix(dim, dim, rng);
    Eigen::MatrixXcd a = g * g.adjoint();
    a /= a.trace().real();
    return State::make(ComplexMatrix(std::move(a)));
}

HermitianOperator random_hermitian(std::size_t dim, Rng& rng) {
    const Eigen::MatrixXcd g = gaussian_matrix(dim, dim, rng);
    return hermitian_part(ComplexMatrix(g));
}

}  // namespace qlogic
