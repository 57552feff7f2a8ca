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

#ifndef QLOGIC_PROBABILITY_H
#define QLOGIC_PROBABILITY_H

#include <optional>

#include "qlogic/logic.h"
#include "qlogic/matrix.h"

namespace qlogic {

/// Element of the order-unit space: a Hermitian operator. Events embed
/// implicitly.
class HermitianOperator {
   public:
    /// Throws NonHermitian if ||m - m*||_max > tol.abs_tol. The stored
    /// matrix is the Hermitian part (m + m*)/2.
    static HermitianOperator make(const ComplexMatrix& m, const Tolerance& tol = {});
    HermitianOperator(const Projection& e);  // NOLINT(google-explicit-constructor)

    const ComplexMatrix& matrix() const { return matrix_; }
    std::size_t dim() const { return matrix_.dim(); }

    /// Converts back into an event; throws NotAProjection if this is not one.
    Projection as_projection(const Tolerance& tol = {}) const;

   private:
    explicit HermitianOperator(ComplexMatrix m) : matrix_(std::move(m)) {}
    friend HermitianOperator hermitian_part(const ComplexMatrix& m);

    ComplexMatrix matrix_;
};

/// (m + m*)/2 without validation.
HermitianOperator hermitian_part(const ComplexMatrix& m);

/// A density operator: Hermitian, positive semidefinite, unit trace.
class State {
   public:
    /// Throws NotAState on any invariant violation.
    static State make(const ComplexMatrix& m, const Tolerance& tol = {});
    static State maximally_mixed(std::size_t dim, const Tolerance& tol = {});
    /// g / trace(g): the canonical witness state with prob(witness, g) = 1.
    static State normalized(const Projection& g);

    const ComplexMatrix& matrix() const { return matrix_; }
    std::size_t dim() const { return matrix_.dim(); }
    const Tolerance& tol() const { return tol_; }

   private:
    State(ComplexMatrix m, const Tolerance& tol) : matrix_(std::move(m)), tol_(tol) {}
    ComplexMatrix matrix_;
    Tolerance tol_;
};

/// P(f|e) together with the defect ||efe - p e||_max of the defining identity.
struct TransitionProbability {
    double value;
    double residual;
};

/// Unclamped real part of trace(a e).
double prob_raw(const State& rho, const HermitianOperator& x);
/// trace(a e), snapped to 0 or 1 when within abs_tol of the boundary.
double prob(const State& rho, const Projection& e);

/// rho(f|e) = trace(a e f e) / trace(a e). Throws ConditionOnNull if
/// prob(rho, e) <= abs_tol.
double cond_prob(const State& rho, const Projection& f, const Projection& e);

/// Lueders update e a e / trace(a e).
State condition_state(const State& rho, const Projection& e);

/// rho(f|e1,e2) = rho(U_e1 U_e2 f) / rho(U_e1 e2).
double seq_cond_prob(const State& rho, const Projection& f, const Projection& e1,
                     const Projection& e2);

/// P(f|e) if efe = p e holds within tol.abs_tol, otherwise nullopt.
/// Throws ZeroEvent if e = 0.
std::optional<TransitionProbability> state_independent_prob(const Projection& f,
                                                            const Projection& e,
                                                            const Tolerance& tol);
std::optional<TransitionProbability> state_independent_prob(const Projection& f,
                                                            const Projection& e);

/// U_e x = e x e.
HermitianOperator u_transform(const Projection& e, const HermitianOperator& x);
/// S_e x = 2 U_e x + 2 U_e' x - x = (2e - I) x (2e - I).
HermitianOperator s_transform(const Projection& e, const HermitianOperator& x);
/// S_e f, returned as an event.
Projection s_transform_event(const Projection& e, const Projection& f);

/// The state P_e of an atom. Throws NotAnAtom for rank != 1.
State atomic_state(const Projection& e);

}  // namespace qlogic

#endif  // QLOGIC_PROBABILITY_H
