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

#include "qlogic/probability.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "qlogic/errors.h"

namespace qlogic {

namespace {

double snap_unit_interval(double value, double abs_tol) {
    if (std::abs(value) <= abs_tol) return 0.0;
    if (std::abs(value - 1.0) <= abs_tol) return 1.0;
    return value;
}

double real_trace(const ComplexMatrix& m) { return m.trace().real(); }

}  // namespace

HermitianOperator hermitian_part(const ComplexMatrix& m) {
    return HermitianOperator(0.5 * (m + m.adjoint()));
}

HermitianOperator HermitianOperator::make(const ComplexMatrix& m, const Tolerance& tol) {
    const double defect = hermiticity_defect(m);
    if (defect > tol.abs_tol) {
        throw NonHermitian("operator is not Hermitian (defect " + std::to_string(defect) + ")");
    }
    return hermitian_part(m);
}

HermitianOperator::HermitianOperator(const Projection& e) : matrix_(e.matrix()) {}

Projection HermitianOperator::as_projection(const Tolerance& tol) const {
    return Projection::make(matrix_, tol);
}

State State::make(const ComplexMatrix& m, const Tolerance& tol) {
    const double herm = hermiticity_defect(m);
    if (herm > tol.abs_tol) {
        throw NotAState("density operator is not Hermitian (defect " + std::to_string(herm) + ")");
    }
    const double tr = real_trace(m);
    if (std::abs(tr - 1.0) > tol.abs_tol) {
        throw NotAState("density operator trace " + std::to_string(tr) + " is not 1");
    }
    const auto eig = hermitian_eig(m, tol);
    if (eig.eigenvalues.back() < -tol.eig_tol) {
        throw NotAState("density operator has negative eigenvalue " +
                        std::to_string(eig.eigenvalues.back()));
    }
    return State(hermitian_part(m).matrix(), tol);
}

State State::maximally_mixed(std::size_t dim, const Tolerance& tol) {
    return State(1.0 / static_cast<double>(dim) * ComplexMatrix::identity(dim), tol);
}

State State::normalized(const Projection& g) {
    if (g.rank() == 0) {
        throw ZeroEvent("cannot normalize the zero event into a state");
    }
    const double tr = real_trace(g.matrix());
    return State(1.0 / tr * g.matrix(), g.tol());
}

double prob_raw(const State& rho, const HermitianOperator& x) {
    require_same_dim(rho.matrix(), x.matrix(), "prob");
    // trace(a x) without forming the product.
    return (rho.matrix().eigen().transpose().cwiseProduct(x.matrix().eigen())).sum().real();
}

double prob(const State& rho, const Projection& e) {
    return snap_unit_interval(prob_raw(rho, e), rho.tol().abs_tol);
}

double cond_prob(const State& rho, const Projection& f, const Projection& e) {
    require_same_dim(rho.matrix(), f.matrix(), "cond_prob");
    const double denom = prob_raw(rho, e);
    if (denom <= rho.tol().abs_tol) {
        throw ConditionOnNull("cond_prob: conditioning event has probability " +
                              std::to_string(denom));
    }
    const double num = prob_raw(rho, u_transform(e, f));
    return snap_unit_interval(num / denom, rho.tol().abs_tol);
}

State condition_state(const State& rho, const Projection& e) {
    const double denom = prob_raw(rho, e);
    if (denom <= rho.tol().abs_tol) {
        throw ConditionOnNull("condition_state: conditioning event has probability " +
                              std::to_string(denom));
    }
    const ComplexMatrix eae = e.matrix() * rho.matrix() * e.matrix();
    return State::make((1.0 / denom) * hermitian_part(eae).matrix(), rho.tol());
}

double seq_cond_prob(const State& rho, const Projection& f, const Projection& e1,
                     const Projection& e2) {
    const double abs_tol = rho.tol().abs_tol;
    const double first = prob_raw(rho, e1);
    if (first <= abs_tol) {
        throw ConditionOnNull("seq_cond_prob: first condition has probability " +
                              std::to_string(first));
    }
    const double denom = prob_raw(rho, u_transform(e1, e2));
    if (denom / first <= abs_tol) {
        throw ConditionOnNull("seq_cond_prob: second condition has conditional probability " +
                              std::to_string(denom / first));
    }
    const double num = prob_raw(rho, u_transform(e1, u_transform(e2, f)));
    return snap_unit_interval(num / denom, abs_tol);
}

std::optional<TransitionProbability> state_independent_prob(const Projection& f,
                                                            const Projection& e,
                                                            const Tolerance& tol) {
    require_same_dim(f.matrix(), e.matrix(), "state_independent_prob");
    if (e.rank() == 0) {
        throw ZeroEvent("state_independent_prob: conditioning on the zero event");
    }
    const ComplexMatrix efe = u_transform(e, f).matrix();
    const double p = real_trace(efe) / real_trace(e.matrix());
    const double residual = max_diff(efe, p * e.matrix());
    if (residual > tol.abs_tol) {
        return std::nullopt;
    }
    return TransitionProbability{std::clamp(snap_unit_interval(p, tol.abs_tol), 0.0, 1.0),
                                 residual};
}

std::optional<TransitionProbability> state_independent_prob(const Projection& f,
                                                            const Projection& e) {
    return state_independent_prob(f, e, e.tol());
}

HermitianOperator u_transform(const Projection& e, const HermitianOperator& x) {
    require_same_dim(e.matrix(), x.matrix(), "u_transform");
    return hermitian_part(e.matrix() * x.matrix() * e.matrix());
}

HermitianOperator s_transform(const Projection& e, const HermitianOperator& x) {
    require_same_dim(e.matrix(), x.matrix(), "s_transform");
    const ComplexMatrix reflection = 2.0 * e.matrix() - ComplexMatrix::identity(e.dim());
    return hermitian_part(reflection * x.matrix() * reflection);
}

Projection s_transform_event(const Projection& e, const Projection& f) {
    return s_transform(e, f).as_projection(f.tol());
}

State atomic_state(const Projection& e) {
    if (!is_atom(e)) {
        throw NotAnAtom("atomic_state: event has rank " + std::to_string(e.rank()));
    }
    return State::make(e.matrix(), e.tol());
}

}  // namespace qlogic
