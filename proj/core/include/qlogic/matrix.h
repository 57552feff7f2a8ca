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

#ifndef QLOGIC_MATRIX_H
#define QLOGIC_MATRIX_H

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace qlogic {

using Complex = std::complex<double>;

/// Largest matrix dimension any constructor in the library will produce.
inline constexpr std::size_t kDefaultMaxDim = 4096;

/// Numerical tolerances. `abs_tol` bounds entrywise (max-norm) defects,
/// `eig_tol` bounds eigenvalue and reconstruction defects.
struct Tolerance {
    double abs_tol = 1e-10;
    double eig_tol = 1e-8;

    /// Throws InvalidArgument unless both tolerances are strictly positive.
    static Tolerance make(double abs_tol, double eig_tol);
};

/// Dense square complex matrix. Entries are always finite and the dimension
/// is at least one; both are checked at construction.
class ComplexMatrix {
   public:
    using Storage = Eigen::MatrixXcd;

    explicit ComplexMatrix(Storage m);

    static ComplexMatrix zero(std::size_t dim);
    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix diagonal(std::span<const double> diag);
    /// |v><v| for a (not necessarily normalized) column vector.
    static ComplexMatrix outer(const Eigen::VectorXcd& v);
    /// Row-major construction from real and imaginary parts.
    static ComplexMatrix from_parts(const std::vector<std::vector<double>>& re,
                                    const std::vector<std::vector<double>>& im);

    std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
    Complex operator()(std::size_t row, std::size_t col) const {
        return m_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
    }
    const Storage& eigen() const { return m_; }

    ComplexMatrix adjoint() const;
    Complex trace() const { return m_.trace(); }

    friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator*(Complex s, const ComplexMatrix& a);
    friend ComplexMatrix operator*(double s, const ComplexMatrix& a);

   private:
    Storage m_;
};

/// max_{i,j} |a_ij|.
double max_norm(const ComplexMatrix& a);
/// max_{i,j} |a_ij - b_ij|; throws DimensionMismatch.
double max_diff(const ComplexMatrix& a, const ComplexMatrix& b);

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* what);

ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b);

/// Kronecker product, first factor most significant.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b,
                     std::size_t max_dim = kDefaultMaxDim);

/// Reorders the tensor factors of `m`, an operator on the product of spaces
/// with dimensions `dims` (lexicographic, first factor most significant).
/// Output factor i is input factor `perm[i]`.
ComplexMatrix permute_factors(const ComplexMatrix& m, std::span<const std::size_t> dims,
                              std::span<const std::size_t> perm);

struct HermitianEig {
    std::vector<double> eigenvalues;  // descending
    ComplexMatrix eigenvectors;       // columns, matching eigenvalues
};

/// Spectral decomposition of a Hermitian matrix. Throws NonHermitian when
/// ||m - m*||_max exceeds tol.abs_tol.
HermitianEig hermitian_eig(const ComplexMatrix& m, const Tolerance& tol = {});

double hermiticity_defect(const ComplexMatrix& m);
/// ||m^2 - m||_max.
double idempotency_defect(const ComplexMatrix& m);

bool is_hermitian(const ComplexMatrix& m, const Tolerance& tol = {});
bool is_projection(const ComplexMatrix& m, const Tolerance& tol = {});

}  // namespace qlogic

#endif  // QLOGIC_MATRIX_H
