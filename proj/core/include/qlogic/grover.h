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

#ifndef QLOGIC_GROVER_H
#define QLOGIC_GROVER_H

#include <cstddef>
#include <vector>

#include <nlohmann/json.hpp>

#include "qlogic/logic.h"
#include "qlogic/matrix.h"

namespace qlogic {

/// Search instance: n pairwise orthogonal events f_1..f_n and an initial
/// event e with P(f_k|e) = 1/n = P(e|f_k). With multiplicity m > 1 every event
/// has rank m and the space is C^n (x) C^m, basis index (k-1)*m + j.
struct GroverInstance {
    std::size_t n;
    std::size_t multiplicity;
    std::size_t target;  // 1-based index k_o
    Projection e;
    std::vector<Projection> f;
    std::size_t dim;

    const Projection& target_event() const { return f[target - 1]; }
};

/// Throws InvalidArgument for n < 2, multiplicity < 1 or target outside
/// [1, n]; DimensionOverflow when n * multiplicity > max_dim. The defining
/// probabilities are verified before returning.
GroverInstance build_instance(std::size_t n, std::size_t target, std::size_t multiplicity = 1,
                              std::size_t max_dim = kDefaultMaxDim, const Tolerance& tol = {});

/// (S_e S_f)^r e, computed as conjugation of e by (u_e u_f)^r with the
/// reflections u = 2p - I.
Projection iterate(const GroverInstance& inst, std::size_t r);

/// The same event computed by applying s_transform(f_target) and then
/// s_transform(e), r times. Slower; kept as an independent route.
Projection iterate_s_composition(const GroverInstance& inst, std::size_t r);

/// P(f_target | (S_e S_f)^r e). Throws TransitionNotStateIndependent if the
/// transition probability does not exist within tolerance.
double success_prob(const GroverInstance& inst, std::size_t r);

/// P((S_f S_e)^r f | e), the other side of the symmetry in the closed form.
double dual_success_prob(const GroverInstance& inst, std::size_t r);

/// sin^2((2r+1) arcsin(sqrt p)). Throws DomainError unless 0 < p <= 1.
double closed_form(double p, std::size_t r);

/// round(pi / (4 arcsin(1/sqrt n)) - 1/2), adjusted to the best of its
/// neighbours with ties going to the smaller count.
std::size_t optimal_iterations(std::size_t n);

struct GroverRun {
    std::size_t n;
    std::size_t multiplicity;
    std::size_t target;
    std::size_t r;
    double success_prob;
    double closed_form;
    double deviation;
};

/// Runs r = 0..r_max, reusing the accumulated unitary between steps.
std::vector<GroverRun> sweep(const GroverInstance& inst, std::size_t r_max);

nlohmann::ordered_json to_json(const GroverRun& run);

/// Two events at arbitrary overlap p in (0,1): e = |0><0|, f = |chi><chi|
/// with chi = sqrt(p)|0> + sqrt(1-p)|1>, direct-summed `copies` times.
struct PairInstance {
    double p;
    Projection e;
    Projection f;
};

PairInstance build_pair_instance(double p, std::size_t copies = 2, const Tolerance& tol = {});

/// P(f | (S_e S_f)^r e) for a pair instance.
double pair_success_prob(const PairInstance& pair, std::size_t r);

}  // namespace qlogic

#endif  // QLOGIC_GROVER_H
