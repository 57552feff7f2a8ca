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

#include "qlogic/matrix.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "qlogic/errors.h"

namespace qlogic {

Tolerance Tolerance::make(double abs_tol, double eig_tol) {
    if (!(abs_tol > 0.0) || !(eig_tol > 0.0) || !std::isfinite(abs_tol) ||
        !std::isfinite(eig_tol)) {
        throw InvalidArgument("tolerances must be finite and strictly positive");
    }
    return Tolerance{abs_tol, eig_tol};
}

ComplexMatrix::ComplexMatrix(Storage m) : m_(std::move(m)) {
    if (m_.rows() < 1 || m_.rows() != m_.cols()) {
        throw InvalidArgument("matrix must be square with dim >= 1, got " +
                              std::to_string(m_.rows()) + "x" + std::to_string(m_.cols()));
    }
    if (!m_.allFinite()) {
        throw InvalidArgument("matrix has non-finite entries");
    }
}

ComplexMatrix ComplexMatrix::zero(std::size_t dim) {
    auto n = static_cast<Eigen::Index>(dim);
    return ComplexMatrix(Storage::Zero(n, n));
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    auto n = static_cast<Eigen::Index>(dim);
    return ComplexMatrix(Storage::Identity(n, n));
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> diag) {
    auto n = static_cast<Eigen::Index>(diag.size());
    Storage m = Storage::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        m(i, i) = diag[static_cast<std::size_t>(i)];
    }
    return ComplexMatrix(std::move(m));
}

ComplexMatrix ComplexMatrix::outer(const Eigen::VectorXcd& v) {
    return ComplexMatrix(v * v.adjoint());
}

ComplexMatrix ComplexMatrix::from_parts(const std::vector<std::vector<double>>& re,
                                        const std::vector<std::vector<double>>& im) {
    const std::size_t n = re.size();
    if (n == 0 || im.size() != n) {
        throw InvalidArgument("real and imaginary parts must be non-empty and the same size");
    }
    Storage m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (re[i].size() != n || im[i].size() != n) {
            throw InvalidArgument("row " + std::to_string(i) + " has the wrong length");
        }
        for (std::size_t j = 0; j < n; ++j) {
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = Complex(re[i][j], im[i][j]);
        }
    }
    return ComplexMatrix(std::move(m));
}

ComplexMatrix ComplexMatrix::adjoint() const { return ComplexMatrix(m_.adjoint()); }

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch(std::string(what) + ": dimension mismatch (" +
                                std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) + ")");
    }
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "operator+");
    return ComplexMatrix(a.m_ + b.m_);
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "operator-");
    return ComplexMatrix(a.m_ - b.m_);
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) { return mat_mul(a, b); }

ComplexMatrix operator*(Complex s, const ComplexMatrix& a) { return ComplexMatrix(s * a.m_); }

ComplexMatrix operator*(double s, const ComplexMatrix& a) { return ComplexMatrix(s * a.m_); }

double max_norm(const ComplexMatrix& a) { return a.eigen().cwiseAbs().maxCoeff(); }

double max_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "max_diff");
    return (a.eigen() - b.eigen()).cwiseAbs().maxCoeff();
}

ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "mat_mul");
    ComplexMatrix::Storage out = a.eigen() * b.eigen();
    return ComplexMatrix(std::move(out));
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b, std::size_t max_dim) {
    const std::size_t da = a.dim();
    const std::size_t db = b.dim();
    if (da > max_dim / db) {
        throw DimensionOverflow("tensor product dimension " + std::to_string(da) + "*" +
                                std::to_string(db) + " exceeds maximum " + std::to_string(max_dim));
    }
    const auto na = static_cast<Eigen::Index>(da);
    const auto nb = static_cast<Eigen::Index>(db);
    ComplexMatrix::Storage out(na * nb, na * nb);
    for (Eigen::Index i = 0; i < na; ++i) {
        for (Eigen::Index j = 0; j < na; ++j) {
            out.block(i * nb, j * nb, nb, nb) = a.eigen()(i, j) * b.eigen();
        }
    }
    return ComplexMatrix(std::move(out));
}

ComplexMatrix permute_factors(const ComplexMatrix& m, std::span<const std::size_t> dims,
                              std::span<const std::size_t> perm) {
    const std::size_t k = dims.size();
    if (perm.size() != k || k == 0) {
        throw InvalidArgument("permute_factors: dims and perm must have the same non-zero length");
    }
    std::vector<bool> seen(k, false);
    std::size_t total = 1;
    for (std::size_t t = 0; t < k; ++t) {
        if (perm[t] >= k || seen[perm[t]]) {
            throw InvalidArgument("permute_factors: perm is not a permutation");
        }
        seen[perm[t]] = true;
        if (dims[t] == 0) {
            throw InvalidArgument("permute_factors: zero factor dimension");
        }
        total *= dims[t];
    }
    if (total != m.dim()) {
        throw DimensionMismatch("permute_factors: factor dimensions do not multiply to matrix dim");
    }

    // index_map[input basis index] = output basis index
    std::vector<Eigen::Index> index_map(total);
    std::vector<std::size_t> digits(k);
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t rest = idx;
        for (std::size_t t = k; t-- > 0;) {
            digits[t] = rest % dims[t];
            rest /= dims[t];
        }
        std::size_t out = 0;
        for (std::size_t t = 0; t < k; ++t) {
            out = out * dims[perm[t]] + digits[perm[t]];
        }
        index_map[idx] = static_cast<Eigen::Index>(out);
    }

    const auto n = static_cast<Eigen::Index>(total);
    ComplexMatrix::Storage out(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            out(index_map[static_cast<std::size_t>(i)], index_map[static_cast<std::size_t>(j)]) =
                m.eigen()(i, j);
        }
    }
    return ComplexMatrix(std::move(out));
}

double hermiticity_defect(const ComplexMatrix& m) {
    return (m.eigen() - m.eigen().adjoint()).cwiseAbs().maxCoeff();
}

double idempotency_defect(const ComplexMatrix& m) {
    return (m.eigen() * m.eigen() - m.eigen()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const ComplexMatrix& m, const Tolerance& tol) {
    return hermiticity_defect(m) <= tol.abs_tol;
}

bool is_projection(const ComplexMatrix& m, const Tolerance& tol) {
    return hermiticity_defect(m) <= tol.abs_tol && idempotency_defect(m) <= tol.abs_tol;
}

HermitianEig hermitian_eig(const ComplexMatrix& m, const Tolerance& tol) {
    const double defect = hermiticity_defect(m);
    if (defect > tol.abs_tol) {
        throw NonHermitian("hermitian_eig: input is not Hermitian (defect " +
                           std::to_string(defect) + ")");
    }
    ComplexMatrix::Storage sym = 0.5 * (m.eigen() + m.eigen().adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix::Storage> solver(sym);
    if (solver.info() != Eigen::Success) {
        throw Error("hermitian_eig: eigensolver did not converge");
    }
    // Eigen sorts ascending; reverse into descending order.
    const Eigen::Index n = sym.rows();
    std::vector<double> values(static_cast<std::size_t>(n));
    ComplexMatrix::Storage vectors(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        values[static_cast<std::size_t>(i)] = solver.eigenvalues()(n - 1 - i);
        vectors.col(i) = solver.eigenvectors().col(n - 1 - i);
    }
    return HermitianEig{std::move(values), ComplexMatrix(std::move(vectors))};
}

}  // namespace qlogic
