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

#ifndef QLOGIC_LOGIC_H
#define QLOGIC_LOGIC_H

#include <cstddef>
#include <memory>

#include "qlogic/matrix.h"

namespace qlogic {

/// An event of the Hilbert quantum logic: a self-adjoint projection.
///
/// The matrix is validated with `is_projection` at construction and the rank
/// (number of eigenvalues within eig_tol of 1) is computed once and cached.
class Projection {
   public:
    /// Throws NotAProjection if `m` fails is_projection(m, tol).
    static Projection make(ComplexMatrix m, const Tolerance& tol = {});
    static Projection zero(std::size_t dim, const Tolerance& tol = {});
    static Projection identity(std::size_t dim, const Tolerance& tol = {});
    /// Projection onto the ray spanned by `v` (normalized internally).
    static Projection onto(const Eigen::VectorXcd& v, const Tolerance& tol = {});
    /// Projection onto the span of the columns of `basis`, which must be
    /// orthonormal within tol.
    static Projection onto_span(const Eigen::MatrixXcd& basis, const Tolerance& tol = {});

    const ComplexMatrix& matrix() const { return matrix_; }
    std::size_t dim() const { return matrix_.dim(); }
    std::size_t rank() const { return rank_; }
    const Tolerance& tol() const { return tol_; }

   private:
    Projection(ComplexMatrix m, std::size_t rank, const Tolerance& tol,
               std::shared_ptr<const ComplexMatrix> complement);

    friend Projection orthocomplement(const Projection& e);

    ComplexMatrix matrix_;
    std::size_t rank_;
    Tolerance tol_;
    // Exact matrix of e' when this value was produced by orthocomplement, so
    // that e'' reproduces e bit-for-bit.
    std::shared_ptr<const ComplexMatrix> complement_;
};

/// e' = I - e.
Projection orthocomplement(const Projection& e);

/// f <= e, tested as ||ef - f||_max <= abs_tol.
bool leq(const Projection& f, const Projection& e, const Tolerance& tol);
bool leq(const Projection& f, const Projection& e);

/// ||ef||_max <= abs_tol.
bool is_orthogonal(const Projection& e, const Projection& f, const Tolerance& tol);
bool is_orthogonal(const Projection& e, const Projection& f);

/// Commutator test ||ef - fe||_max <= abs_tol.
bool is_compatible(const Projection& e, const Projection& f, const Tolerance& tol);
bool is_compatible(const Projection& e, const Projection& f);
double commutator_norm(const Projection& e, const Projection& f);

/// e ^ f for a compatible pair. Throws IncompatiblePair otherwise.
Projection meet_compatible(const Projection& e, const Projection& f);
/// e v f = (e' ^ f')' for a compatible pair. Throws IncompatiblePair otherwise.
Projection join_compatible(const Projection& e, const Projection& f);

bool is_atom(const Projection& e);

}  // namespace qlogic

#endif  // QLOGIC_LOGIC_H
