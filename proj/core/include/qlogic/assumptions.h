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

#ifndef QLOGIC_ASSUMPTIONS_H
#define QLOGIC_ASSUMPTIONS_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qlogic/logic.h"
#include "qlogic/matrix.h"
#include "qlogic/probability.h"

namespace qlogic {

/// Outcome of one named check, or the aggregate of many cases of it.
///
/// A case whose hypothesis does not hold (for example P(f|e) does not exist)
/// is reported as not applicable and passes vacuously with residual 0.
struct CheckResult {
    std::string name;
    bool passed = true;
    bool applicable = true;
    double max_residual = 0.0;
    double tolerance = 0.0;
    std::size_t cases = 1;
    std::size_t applicable_cases = 1;
    std::optional<nlohmann::ordered_json> witness;

    static CheckResult from_residual(std::string name, double residual, double tolerance);
    static CheckResult not_applicable(std::string name, double tolerance);

    /// Folds another case of the same check into this aggregate. The first
    /// failing witness is kept.
    void merge(const CheckResult& other);
};

nlohmann::ordered_json to_json(const CheckResult& r);
nlohmann::ordered_json to_json(const std::vector<CheckResult>& rs);

/// Attaches the serialized pair to a failing result.
CheckResult with_witness(CheckResult r, const Projection& e, const Projection& f);

struct RandomSpec {
    std::size_t dim = 2;
    std::size_t rank_e = 1;
    std::size_t rank_f = 1;
    std::size_t trials = 1;
    std::uint64_t seed = 0;

    /// Throws InvalidArgument unless dim >= 2, 1 <= ranks <= dim, trials >= 1.
    void validate() const;
};

/// S_e f is an event: residual is its Hermiticity plus idempotency defect.
CheckResult check_assumption1(const Projection& e, const Projection& f, const Tolerance& tol);
/// ||U_e U_f e - p^2 e||_max with p = P(f|e); not applicable if P(f|e) does not exist.
CheckResult check_assumption2(const Projection& e, const Projection& f, const Tolerance& tol);
/// Operator form U_f' U_e f = U_f' U_e' f.
CheckResult check_assumption3(const Projection& e, const Projection& f, const Tolerance& tol);
/// State form rho(f|e) rho(e) = rho(f|e') rho(e') for rho = (rho0 conditioned on f'),
/// so that rho(f) = 0. Not applicable when f = I.
CheckResult check_assumption3_state(const Projection& e, const Projection& f, const State& rho0,
                                    const Tolerance& tol);
/// S_e f = f' and S_e f' = f when P(f|e) = P(f|e') = 1/2.
CheckResult check_lemma1(const Projection& e, const Projection& f, const Tolerance& tol);
/// Lemma 2 (a) all four identities, (b) P(S_f e|e) = (2p-1)^2, (c) orthogonality at p = 1/2.
CheckResult check_lemma2(const Projection& e, const Projection& f, const Tolerance& tol);

/// P(f|e) = P(e|f) for atoms.
CheckResult check_atom_symmetry(const Projection& e, const Projection& f, const Tolerance& tol);
/// P(e|e,f) = p, P(e'|e,f) = 1-p, P(e|e,f') = 1-p, P(e'|e,f') = p, evaluated
/// with seq_cond_prob on the atomic state of e. Requires e to be an atom.
CheckResult check_assumption2_consequences(const Projection& e, const Projection& f,
                                           const Tolerance& tol);

/// S_e S_e x = x.
CheckResult check_s_involution(const Projection& e, const HermitianOperator& x,
                               const Tolerance& tol);
/// U_e U_e x = U_e x.
CheckResult check_u_idempotence(const Projection& e, const HermitianOperator& x,
                                const Tolerance& tol);
/// P(S_g f | S_g e) = P(f|e) whenever P(f|e) exists.
CheckResult check_p_invariance(const Projection& g, const Projection& e, const Projection& f,
                               const Tolerance& tol);

/// Qubit pair e = |0><0|, f = |chi><chi| with chi = sqrt(p)|0> + sqrt(1-p)|1>,
/// direct-summed `copies` times.
std::pair<Projection, Projection> qubit_pair(double p, std::size_t copies = 1,
                                             const Tolerance& tol = {});

/// The fixed deterministic corpus: qubit pairs at p in {0, 1/4, 1/2, 3/4, 1},
/// each as a single copy and as two stacked copies.
std::vector<std::pair<Projection, Projection>> deterministic_corpus(const Tolerance& tol = {});

/// Runs every checker over `spec.trials` seeded random pairs plus the
/// deterministic corpus and returns one aggregated result per check.
std::vector<CheckResult> run_suite(const RandomSpec& spec, const Tolerance& tol = {});

/// Randomized S involution, U idempotence and P-invariance checks in `dim`,
/// `cases` draws from the root seed.
std::vector<CheckResult> run_property_suite(std::size_t dim, std::size_t cases,
                                            std::uint64_t seed, const Tolerance& tol = {});

}  // namespace qlogic

#endif  // QLOGIC_ASSUMPTIONS_H
