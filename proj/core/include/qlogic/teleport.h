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

#ifndef QLOGIC_TELEPORT_H
#define QLOGIC_TELEPORT_H

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qlogic/assumptions.h"
#include "qlogic/logic.h"
#include "qlogic/probability.h"
#include "qlogic/random.h"

namespace qlogic {

enum class Subsystem { A, B, C };

/// Three qubits A, B, C on C^2 (x) C^2 (x) C^2, basis order A, B, C with A
/// most significant. e_o = |1><1| and f_o = |phi><phi| with
/// phi = (|0> + |1>)/sqrt 2 are the two qubit events the protocol is built on.
struct TeleportSystem {
    Projection e_o;
    Projection f_o;
    Projection d_ab;  // |psi_AB><psi_AB| (x) I_C
    Projection d_ac;  // |psi_AC><psi_AC| (x) I_B, factors reordered to A, B, C

    /// pi_A, pi_B, pi_C: y -> y (x) I (x) I, I (x) y (x) I, I (x) I (x) y.
    Projection embed(Subsystem s, const Projection& y) const;
};

TeleportSystem build_system(const Tolerance& tol = {});

/// The property of system C to be teleported: the ray of
/// alpha|0> + beta|1>, or one of the trivial events 0 and I.
class InputProperty {
   public:
    enum class Kind { Ray, Zero, Identity };

    /// Throws InvalidArgument unless |alpha|^2 + |beta|^2 = 1 within 1e-9.
    static InputProperty ray(Complex alpha, Complex beta, const Tolerance& tol = {});
    static InputProperty zero(const Tolerance& tol = {});
    static InputProperty identity(const Tolerance& tol = {});
    static InputProperty random(Rng& rng, const Tolerance& tol = {});

    Kind kind() const { return kind_; }
    Complex alpha() const { return alpha_; }
    Complex beta() const { return beta_; }
    const Projection& x() const { return x_; }

   private:
    InputProperty(Kind kind, Complex alpha, Complex beta, Projection x)
        : kind_(kind), alpha_(alpha), beta_(beta), x_(std::move(x)) {}

    Kind kind_;
    Complex alpha_;
    Complex beta_;
    Projection x_;
};

/// Conditions (i)-(iv) of the abstract protocol, plus the compatibility of
/// the three embedded copies and the morphism property of the embeddings.
/// Condition (iv) is reported as not applicable for x = 0, where the
/// conditioning event d_AB ^ pi_C x vanishes.
std::vector<CheckResult> check_conditions(const TeleportSystem& sys, const InputProperty& x,
                                          const Tolerance& tol = {});

/// b_1 = d_AC, b_2 = S_{pi_A e} d_AC, b_3 = S_{pi_A f} d_AC,
/// b_4 = S_{pi_A e} S_{pi_A f} d_AC.
std::array<Projection, 4> bell_projections(const TeleportSystem& sys);

/// Pairwise orthogonality of the b_k and P(b_k | d_AB ^ pi_C x) = 1/4.
std::vector<CheckResult> check_lemma3(const TeleportSystem& sys, const InputProperty& x,
                                      const Tolerance& tol = {});

enum class Correction { Identity, SE, SF, SESF };

/// identity, S_{pi_B e}, S_{pi_B f}, S_{pi_B e} S_{pi_B f} for k = 1..4.
/// Throws InvalidArgument for k outside [1, 4].
Correction bob_correction(int k);
std::string correction_name(Correction c);
/// The unitary on A (x) B (x) C implementing the correction: I, or
/// I (x) u (x) I with u = e - e', f - f', (e - e')(f - f').
ComplexMatrix correction_unitary(const TeleportSystem& sys, Correction c);
HermitianOperator apply_correction(const TeleportSystem& sys, Correction c,
                                   const HermitianOperator& x);

/// k - 1 as two big-endian bits, "00" .. "11".
std::string classical_bits(int k);

struct TeleportTranscript {
    InputProperty input;
    int outcome_index;
    std::array<double, 4> outcome_probs;
    std::string classical_bits;
    Correction correction;
    /// P(correction(pi_B x) | d_AB ^ pi_C x, b_k).
    double final_prob;
    /// Bob's view: probability of pi_B x after the Lueders updates by
    /// d_AB ^ pi_C x and b_k followed by the correction unitary.
    double corrected_state_prob;
    std::uint64_t seed;
};

/// Runs the protocol once. The outcome is drawn from the computed outcome
/// probabilities with Rng(seed) unless `forced_outcome` is given. Throws
/// ConditionOnNull for x = 0 and ProtocolViolation if an outcome probability
/// deviates from 1/4 by more than 1e-6.
TeleportTranscript run(const TeleportSystem& sys, const InputProperty& x, std::uint64_t seed,
                       std::optional<int> forced_outcome = std::nullopt);

/// |P(pi_B x | g) - sum_k P(b_k | g) P(pi_B x | g, b_k)| with g = d_AB ^ pi_C x.
double no_signalling_residual(const TeleportSystem& sys, const InputProperty& x);

nlohmann::ordered_json to_json(const TeleportTranscript& t);

}  // namespace qlogic

#endif  // QLOGIC_TELEPORT_H
