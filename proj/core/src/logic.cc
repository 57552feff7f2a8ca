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

#include <cmath>
#include <string>

#include "qlogic/errors.h"

namespace qlogic {

namespace {

std::size_t count_unit_eigenvalues(const ComplexMatrix& m, const Tolerance& tol) {
    std::size_t rank = 0;
    for (double lambda : hermitian_eig(m, tol).eigenvalues) {
        if (std::abs(lambda - 1.0) <= tol.eig_tol) {
            ++rank;
        }
    }
    return rank;
}

}  // namespace

Projection::Projection(ComplexMatrix m, std::size_t rank, const Tolerance& tol,
                       std::shared_ptr<const ComplexMatrix> complement)
    : matrix_(std::move(m)), rank_(rank), tol_(tol), complement_(std::move(complement)) {}

Projection Projection::make(ComplexMatrix m, const Tolerance& tol) {
    const double herm = hermiticity_defect(m);
    const double idem = idempotency_defect(m);
    if (herm > tol.abs_tol || idem > tol.abs_tol) {
        throw NotAProjection("not a projection: hermiticity defect " + std::to_string(herm) +
                             ", idempotency defect " + std::to_string(idem));
    }
    const std::size_t rank = count_unit_eigenvalues(m, tol);
    return Projection(std::move(m), rank, tol, nullptr);
}

Projection Projection::zero(std::size_t dim, const Tolerance& tol) {
    return Projection(ComplexMatrix::zero(dim), 0, tol, nullptr);
}

Projection Projection::identity(std::size_t dim, const Tolerance& tol) {
    return Projection(ComplexMatrix::identity(dim), dim, tol, nullptr);
}

Projection Projection::onto(const Eigen::VectorXcd& v, const Tolerance& tol) {
    const double norm = v.norm();
    if (!(norm > 0.0)) {
        throw InvalidArgument("Projection::onto: zero vector");
    }
    Eigen::VectorXcd u = v / norm;
    return Projection(ComplexMatrix::outer(u), 1, tol, nullptr);
}

Projection Projection::onto_span(const Eigen::MatrixXcd& basis, const Tolerance& tol) {
    const Eigen::MatrixXcd gram = basis.adjoint() * basis;
    const double defect =
        (gram - Eigen::MatrixXcd::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
    if (defect > tol.abs_tol) {
        throw InvalidArgument("Projection::onto_span: columns are not orthonormal");
    }
    return Projection(ComplexMatrix(basis * basis.adjoint()), static_cast<std::size_t>(basis.cols()),
                      tol, nullptr);
}

Projection orthocomplement(const Projection& e) {
    auto original = std::make_shared<const ComplexMatrix>(e.matrix_);
    if (e.complement_) {
        return Projection(*e.complement_, e.dim() - e.rank_, e.tol_, std::move(original));
    }
    ComplexMatrix comp = ComplexMatrix::identity(e.dim()) - e.matrix_;
    return Projection(std::move(comp), e.dim() - e.rank_, e.tol_, std::move(original));
}

bool leq(const Projection& f, const Projection& e, const Tolerance& tol) {
    require_same_dim(f.matrix(), e.matrix(), "leq");
    return max_diff(e.matrix() * f.matrix(), f.matrix()) <= tol.abs_tol;
}

bool leq(const Projection& f, const Projection& e) { return leq(f, e, f.tol()); }

bool is_orthogonal(const Projection& e, const Projection& f, const Tolerance& tol) {
    require_same_dim(e.matrix(), f.matrix(), "is_orthogonal");
    return max_norm(e.matrix() * f.matrix()) <= tol.abs_tol;
}

bool is_orthogonal(const Projection& e, const Projection& f) {
    return is_orthogonal(e, f, e.tol());
}

double commutator_norm(const Projection& e, const Projection& f) {
    require_same_dim(e.matrix(), f.matrix(), "commutator_norm");
    return max_diff(e.matrix() * f.matrix(), f.matrix() * e.matrix());
}

bool is_compatible(const Projection& e, const Projection& f, const Tolerance& tol) {
    return commutator_norm(e, f) <= tol.abs_tol;
}

bool is_compatible(const Projection& e, const Projection& f) {
    return is_compatible(e, f, e.tol());
}

Projection meet_compatible(const Projection& e, const Projection& f) {
    const double comm = commutator_norm(e, f);
    if (comm > e.tol().abs_tol) {
        throw IncompatiblePair("meet of incompatible events (commutator norm " +
                               std::to_string(comm) + ")");
    }
    const ComplexMatrix ef = e.matrix() * f.matrix();
    return Projection::make(0.5 * (ef + ef.adjoint()), e.tol());
}

Projection join_compatible(const Projection& e, const Projection& f) {
    const double comm = commutator_norm(e, f);
    if (comm > e.tol().abs_tol) {
        throw IncompatiblePair("join of incompatible events (commutator norm " +
                               std::to_string(comm) + ")");
    }
    return orthocomplement(meet_compatible(orthocomplement(e), orthocomplement(f)));
}

bool is_atom(const Projection& e) { return e.rank() == 1; }

}  // namespace qlogic
