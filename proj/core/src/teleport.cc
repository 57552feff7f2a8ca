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

#include "qlogic/teleport.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "qlogic/errors.h"

namespace qlogic {

namespace {

constexpr std::size_t kQubit = 2;
const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

Eigen::VectorXcd bell_vector() {
    // (|00> + |11>)/sqrt 2
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(4);
    v(0) = kInvSqrt2;
    v(3) = kInvSqrt2;
    return v;
}

ComplexMatrix qubit_reflection(const Projection& y) {
    return 2.0 * y.matrix() - ComplexMatrix::identity(kQubit);
}

ComplexMatrix embed_matrix(Subsystem s, const ComplexMatrix& y) {
    const ComplexMatrix id = ComplexMatrix::identity(kQubit);
    switch (s) {
        case Subsystem::A:
            return tensor(tensor(y, id), id);
        case Subsystem::B:
            return tensor(tensor(id, y), id);
        case Subsystem::C:
            return tensor(tensor(id, id), y);
    }
    throw InvalidArgument("unknown subsystem");
}

Projection conditioning_event(const TeleportSystem& sys, const InputProperty& x) {
    return meet_compatible(sys.d_ab, sys.embed(Subsystem::C, x.x()));
}

/// P(f|e) as a residual against `expected`; a missing transition
/// probability counts as a residual of 1.
double transition_residual(const Projection& f, const Projection& e, double expected,
                           const Tolerance& tol) {
    const auto tp = state_independent_prob(f, e, tol);
    if (!tp) return 1.0;
    return std::abs(tp->value - expected);
}

}  // namespace

Projection TeleportSystem::embed(Subsystem s, const Projection& y) const {
    if (y.dim() != kQubit) {
        throw DimensionMismatch("embed: expected a qubit event");
    }
    return Projection::make(embed_matrix(s, y.matrix()), y.tol());
}

TeleportSystem build_system(const Tolerance& tol) {
    Eigen::VectorXcd one = Eigen::VectorXcd::Zero(2);
    one(1) = 1.0;
    Eigen::VectorXcd phi = Eigen::VectorXcd::Constant(2, kInvSqrt2);
    Projection e_o = Projection::onto(one, tol);
    Projection f_o = Projection::onto(phi, tol);

    const ComplexMatrix pair = ComplexMatrix::outer(bell_vector());
    const ComplexMatrix id = ComplexMatrix::identity(kQubit);
    Projection d_ab = Projection::make(tensor(pair, id), tol);

    // |psi_AC><psi_AC| (x) I_B lives on A, C, B; move B to the middle.
    const std::array<std::size_t, 3> dims{2, 2, 2};
    const std::array<std::size_t, 3> perm{0, 2, 1};
    Projection d_ac = Projection::make(permute_factors(tensor(pair, id), dims, perm), tol);

    return TeleportSystem{std::move(e_o), std::move(f_o), std::move(d_ab), std::move(d_ac)};
}

InputProperty InputProperty::ray(Complex alpha, Complex beta, const Tolerance& tol) {
    const double norm2 = std::norm(alpha) + std::norm(beta);
    if (!std::isfinite(norm2) || std::abs(norm2 - 1.0) > 1e-9) {
        throw InvalidArgument("InputProperty: |alpha|^2 + |beta|^2 must equal 1");
    }
    Eigen::VectorXcd xi(2);
    xi << alpha, beta;
    return InputProperty(Kind::Ray, alpha, beta, Projection::onto(xi, tol));
}

InputProperty InputProperty::zero(const Tolerance& tol) {
    return InputProperty(Kind::Zero, 0.0, 0.0, Projection::zero(kQubit, tol));
}

InputProperty InputProperty::identity(const Tolerance& tol) {
    return InputProperty(Kind::Identity, 0.0, 0.0, Projection::identity(kQubit, tol));
}

InputProperty InputProperty::random(Rng& rng, const Tolerance& tol) {
    const Eigen::VectorXcd v = random_unit_vector(kQubit, rng);
    Eigen::VectorXcd xi(2);
    xi << v(0), v(1);
    return InputProperty(Kind::Ray, v(0), v(1), Projection::onto(xi, tol));
}

std::vector<CheckResult> check_conditions(const TeleportSystem& sys, const InputProperty& x,
                                          const Tolerance& tol) {
    const double t = tol.abs_tol;
    std::vector<CheckResult> out;

    std::vector<Projection> sample{Projection::zero(kQubit, tol), Projection::identity(kQubit, tol),
                                   sys.e_o, sys.f_o, orthocomplement(sys.e_o),
                                   orthocomplement(sys.f_o)};
    if (x.kind() == InputProperty::Kind::Ray) {
        sample.push_back(x.x());
        sample.push_back(orthocomplement(x.x()));
    }

    // P(f|e) = P(f|e') = P(e|f) = P(e|f') = 1/2 on the qubit logic.
    {
        double r = transition_residual(sys.f_o, sys.e_o, 0.5, tol);
        r = std::max(r, transition_residual(sys.f_o, orthocomplement(sys.e_o), 0.5, tol));
        r = std::max(r, transition_residual(sys.e_o, sys.f_o, 0.5, tol));
        r = std::max(r, transition_residual(sys.e_o, orthocomplement(sys.f_o), 0.5, tol));
        out.push_back(CheckResult::from_residual("qubit_half_probabilities", r, t));
    }

    // Embedded copies pairwise compatible; embeddings preserve ' and <=.
    {
        double comm = 0.0;
        double morph = 0.0;
        const std::array<Subsystem, 3> all{Subsystem::A, Subsystem::B, Subsystem::C};
        for (const auto& y : sample) {
            for (Subsystem s : all) {
                const Projection py = sys.embed(s, y);
                morph = std::max(morph, max_diff(sys.embed(s, orthocomplement(y)).matrix(),
                                                 orthocomplement(py).matrix()));
                for (const auto& z : sample) {
                    if (leq(y, z, tol)) {
                        const Projection pz = sys.embed(s, z);
                        morph = std::max(morph, max_diff(pz.matrix() * py.matrix(), py.matrix()));
                    }
                    for (Subsystem s2 : all) {
                        if (s2 != s) {
                            comm = std::max(comm, commutator_norm(py, sys.embed(s2, z)));
                        }
                    }
                }
            }
        }
        out.push_back(CheckResult::from_residual("copies_pairwise_compatible", comm, t));
        out.push_back(CheckResult::from_residual("embedding_morphism", morph, t));
    }

    // (i)
    {
        double r_ab = 0.0;
        double r_ac = 0.0;
        for (const auto& y : sample) {
            r_ab = std::max(r_ab, commutator_norm(sys.d_ab, sys.embed(Subsystem::C, y)));
            r_ac = std::max(r_ac, commutator_norm(sys.d_ac, sys.embed(Subsystem::B, y)));
        }
        out.push_back(CheckResult::from_residual("condition_i_dAB_compatible_piC", r_ab, t));
        out.push_back(CheckResult::from_residual("condition_i_dAC_compatible_piB", r_ac, t));
    }

    const Projection a_e = sys.embed(Subsystem::A, sys.e_o);
    const Projection a_f = sys.embed(Subsystem::A, sys.f_o);
    const Projection b_e = sys.embed(Subsystem::B, sys.e_o);
    const Projection b_f = sys.embed(Subsystem::B, sys.f_o);
    const Projection c_e = sys.embed(Subsystem::C, sys.e_o);

    // (ii)
    {
        const double r_e =
            max_diff(s_transform(a_e, s_transform(b_e, sys.d_ab)).matrix(), sys.d_ab.matrix());
        const double r_f =
            max_diff(s_transform(a_f, s_transform(b_f, sys.d_ab)).matrix(), sys.d_ab.matrix());
        out.push_back(CheckResult::from_residual("condition_ii_e", r_e, t));
        out.push_back(CheckResult::from_residual("condition_ii_f", r_f, t));
    }

    // (iii)
    {
        const Projection a_ec = orthocomplement(a_e);
        const Projection c_ec = orthocomplement(c_e);
        double r = transition_residual(a_e, sys.d_ac, 0.5, tol);
        r = std::max(r, transition_residual(a_f, sys.d_ac, 0.5, tol));
        r = std::max(r, transition_residual(meet_compatible(a_e, c_e), sys.d_ac, 0.5, tol));
        r = std::max(r, transition_residual(meet_compatible(a_ec, c_ec), sys.d_ac, 0.5, tol));
        out.push_back(CheckResult::from_residual("condition_iii", r, t));
    }

    // (iv)
    if (x.kind() == InputProperty::Kind::Zero) {
        out.push_back(CheckResult::not_applicable("condition_iv", t));
        out.push_back(CheckResult::not_applicable("condition_iv_complement", t));
    } else {
        const Projection g = conditioning_event(sys, x);
        const Projection bx = sys.embed(Subsystem::B, x.x());
        double r = transition_residual(meet_compatible(sys.d_ac, bx), g, 0.25, tol);
        r = std::max(r, transition_residual(sys.d_ac, g, 0.25, tol));
        out.push_back(CheckResult::from_residual("condition_iv", r, t));
        const Projection bxc = sys.embed(Subsystem::B, orthocomplement(x.x()));
        out.push_back(CheckResult::from_residual(
            "condition_iv_complement",
            transition_residual(meet_compatible(sys.d_ac, bxc), g, 0.0, tol), t));
    }
    return out;
}

std::array<Projection, 4> bell_projections(const TeleportSystem& sys) {
    const Projection a_e = sys.embed(Subsystem::A, sys.e_o);
    const Projection a_f = sys.embed(Subsystem::A, sys.f_o);
    Projection b2 = s_transform_event(a_e, sys.d_ac);
    Projection b3 = s_transform_event(a_f, sys.d_ac);
    Projection b4 = s_transform(a_e, s_transform(a_f, sys.d_ac)).as_projection(sys.d_ac.tol());
    return {sys.d_ac, std::move(b2), std::move(b3), std::move(b4)};
}

std::vector<CheckResult> check_lemma3(const TeleportSystem& sys, const InputProperty& x,
                                      const Tolerance& tol) {
    const auto b = bell_projections(sys);
    double orth = 0.0;
    for (std::size_t i = 0; i < b.size(); ++i) {
        for (std::size_t j = i + 1; j < b.size(); ++j) {
            orth = std::max(orth, max_norm(b[i].matrix() * b[j].matrix()));
        }
    }
    std::vector<CheckResult> out;
    out.push_back(CheckResult::from_residual("lemma3_pairwise_orthogonal", orth, tol.abs_tol));
    if (x.kind() == InputProperty::Kind::Zero) {
        out.push_back(CheckResult::not_applicable("lemma3_quarter", tol.abs_tol));
        return out;
    }
    const Projection g = conditioning_event(sys, x);
    double quarter = 0.0;
    for (const auto& bk : b) {
        quarter = std::max(quarter, transition_residual(bk, g, 0.25, tol));
    }
    out.push_back(CheckResult::from_residual("lemma3_quarter", quarter, tol.abs_tol));
    return out;
}

Correction bob_correction(int k) {
    switch (k) {
        case 1: return Correction::Identity;
        case 2: return Correction::SE;
        case 3: return Correction::SF;
        case 4: return Correction::SESF;
        default: break;
    }
    throw InvalidArgument("bob_correction: outcome index must be 1..4, got " + std::to_string(k));
}

std::string correction_name(Correction c) {
    switch (c) {
        case Correction::Identity: return "identity";
        case Correction::SE: return "S_piB_e";
        case Correction::SF: return "S_piB_f";
        case Correction::SESF: return "S_piB_e*S_piB_f";
    }
    return "unknown";
}

ComplexMatrix correction_unitary(const TeleportSystem& sys, Correction c) {
    const ComplexMatrix ue = qubit_reflection(sys.e_o);
    const ComplexMatrix uf = qubit_reflection(sys.f_o);
    switch (c) {
        case Correction::Identity: return ComplexMatrix::identity(8);
        case Correction::SE: return embed_matrix(Subsystem::B, ue);
        case Correction::SF: return embed_matrix(Subsystem::B, uf);
        case Correction::SESF: return embed_matrix(Subsystem::B, ue * uf);
    }
    throw InvalidArgument("unknown correction");
}

HermitianOperator apply_correction(const TeleportSystem& sys, Correction c,
                                   const HermitianOperator& x) {
    const Projection b_e = sys.embed(Subsystem::B, sys.e_o);
    const Projection b_f = sys.embed(Subsystem::B, sys.f_o);
    switch (c) {
        case Correction::Identity: return x;
        case Correction::SE: return s_transform(b_e, x);
        case Correction::SF: return s_transform(b_f, x);
        case Correction::SESF: return s_transform(b_e, s_transform(b_f, x));
    }
    throw InvalidArgument("unknown correction");
}

std::string classical_bits(int k) {
    if (k < 1 || k > 4) {
        throw InvalidArgument("classical_bits: outcome index must be 1..4");
    }
    const int v = k - 1;
    return std::string{static_cast<char>('0' + ((v >> 1) & 1)), static_cast<char>('0' + (v & 1))};
}

TeleportTranscript run(const TeleportSystem& sys, const InputProperty& x, std::uint64_t seed,
                       std::optional<int> forced_outcome) {
    if (x.kind() == InputProperty::Kind::Zero) {
        throw ConditionOnNull("teleport: the zero event has no content to teleport");
    }
    if (forced_outcome) {
        bob_correction(*forced_outcome);  // validates the index
    }
    const Projection g = conditioning_event(sys, x);
    const State witness = State::normalized(g);
    const auto b = bell_projections(sys);

    std::array<double, 4> probs{};
    for (std::size_t k = 0; k < 4; ++k) {
        probs[k] = cond_prob(witness, b[k], g);
        if (std::abs(probs[k] - 0.25) > 1e-6) {
            throw ProtocolViolation("teleport: outcome " + std::to_string(k + 1) +
                                    " has probability " + std::to_string(probs[k]));
        }
    }

    int k = 0;
    if (forced_outcome) {
        k = *forced_outcome;
    } else {
        Rng rng(seed);
        const double total = std::accumulate(probs.begin(), probs.end(), 0.0);
        const double u = rng.uniform() * total;
        double acc = 0.0;
        k = 4;
        for (int i = 0; i < 4; ++i) {
            acc += probs[static_cast<std::size_t>(i)];
            if (u < acc) {
                k = i + 1;
                break;
            }
        }
    }

    const Correction c = bob_correction(k);
    const Projection& bk = b[static_cast<std::size_t>(k - 1)];
    const Projection bx = sys.embed(Subsystem::B, x.x());
    const Projection target = apply_correction(sys, c, bx).as_projection(bx.tol());
    const double final_prob = seq_cond_prob(witness, target, g, bk);

    const State after = condition_state(condition_state(witness, g), bk);
    const ComplexMatrix u = correction_unitary(sys, c);
    const State corrected = State::make(u * after.matrix() * u.adjoint(), witness.tol());
    const double bob = prob(corrected, bx);

    return TeleportTranscript{x, k, probs, classical_bits(k), c, final_prob, bob, seed};
}

double no_signalling_residual(const TeleportSystem& sys, const InputProperty& x) {
    const Projection g = conditioning_event(sys, x);
    const State witness = State::normalized(g);
    const Projection bx = sys.embed(Subsystem::B, x.x());
    const double direct = cond_prob(witness, bx, g);
    double averaged = 0.0;
    for (const auto& bk : bell_projections(sys)) {
        averaged += cond_prob(witness, bk, g) * seq_cond_prob(witness, bx, g, bk);
    }
    return std::abs(direct - averaged);
}

namespace {

nlohmann::ordered_json complex_json(Complex z) {
    nlohmann::ordered_json j;
    j["re"] = z.real();
    j["im"] = z.imag();
    return j;
}

}  // namespace

nlohmann::ordered_json to_json(const TeleportTranscript& t) {
    nlohmann::ordered_json j;
    const bool ray = t.input.kind() == InputProperty::Kind::Ray;
    j["alpha"] = ray ? complex_json(t.input.alpha()) : nlohmann::ordered_json(nullptr);
    j["beta"] = ray ? complex_json(t.input.beta()) : nlohmann::ordered_json(nullptr);
    j["outcome_index"] = t.outcome_index;
    j["classical_bits"] = t.classical_bits;
    j["correction_name"] = correction_name(t.correction);
    j["outcome_probs"] = t.outcome_probs;
    j["final_prob"] = t.final_prob;
    j["seed"] = t.seed;
    return j;
}

}  // namespace qlogic
