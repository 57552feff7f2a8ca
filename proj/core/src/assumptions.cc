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

#include "qlogic/assumptions.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "qlogic/errors.h"
#include "qlogic/matrix_io.h"
#include "qlogic/random.h"

namespace qlogic {

CheckResult CheckResult::from_residual(std::string name, double residual, double tolerance) {
    CheckResult r;
    r.name = std::move(name);
    r.max_residual = residual;
    r.tolerance = tolerance;
    r.passed = residual <= tolerance;
    return r;
}

CheckResult CheckResult::not_applicable(std::string name, double tolerance) {
    CheckResult r;
    r.name = std::move(name);
    r.tolerance = tolerance;
    r.applicable = false;
    r.applicable_cases = 0;
    return r;
}

void CheckResult::merge(const CheckResult& other) {
    if (!witness && other.witness && !other.passed) {
        witness = other.witness;
    }
    max_residual = std::max(max_residual, other.max_residual);
    tolerance = std::max(tolerance, other.tolerance);
    cases += other.cases;
    applicable_cases += other.applicable_cases;
    applicable = applicable_cases > 0;
    passed = passed && other.passed && max_residual <= tolerance;
}

nlohmann::ordered_json to_json(const CheckResult& r) {
    nlohmann::ordered_json j;
    j["name"] = r.name;
    j["passed"] = r.passed;
    j["applicable"] = r.applicable;
    j["max_residual"] = r.max_residual;
    j["tolerance"] = r.tolerance;
    j["cases"] = r.cases;
    j["applicable_cases"] = r.applicable_cases;
    j["witness"] = r.witness ? *r.witness : nlohmann::ordered_json(nullptr);
    return j;
}

nlohmann::ordered_json to_json(const std::vector<CheckResult>& rs) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rs) {
        arr.push_back(to_json(r));
    }
    return arr;
}

CheckResult with_witness(CheckResult r, const Projection& e, const Projection& f) {
    if (!r.passed) {
        nlohmann::ordered_json w;
        w["e"] = matrix_to_json(e.matrix());
        w["f"] = matrix_to_json(f.matrix());
        r.witness = std::move(w);
    }
    return r;
}

void RandomSpec::validate() const {
    if (dim < 2) throw InvalidArgument("RandomSpec: dim must be >= 2");
    if (rank_e < 1 || rank_e > dim || rank_f < 1 || rank_f > dim) {
        throw InvalidArgument("RandomSpec: ranks must lie in [1, dim]");
    }
    if (trials < 1) throw InvalidArgument("RandomSpec: trials must be >= 1");
}

namespace {

const ComplexMatrix& mat(const Projection& p) { return p.matrix(); }

}  // namespace

CheckResult check_assumption1(const Projection& e, const Projection& f, const Tolerance& tol) {
    const ComplexMatrix s = s_transform(e, f).matrix();
    const double residual = std::max(hermiticity_defect(s), idempotency_defect(s));
    return with_witness(CheckResult::from_residual("assumption1", residual, tol.abs_tol), e, f);
}

CheckResult check_assumption2(const Projection& e, const Projection& f, const Tolerance& tol) {
    const auto p = state_independent_prob(f, e, tol);
    if (!p) return CheckResult::not_applicable("assumption2", tol.abs_tol);
    const ComplexMatrix lhs = u_transform(e, u_transform(f, e)).matrix();
    const double residual = max_diff(lhs, (p->value * p->value) * mat(e));
    return with_witness(CheckResult::from_residual("assumption2", residual, tol.abs_tol), e, f);
}

CheckResult check_assumption3(const Projection& e, const Projection& f, const Tolerance& tol) {
    const Projection fc = orthocomplement(f);
    const Projection ec = orthocomplement(e);
    const ComplexMatrix lhs = u_transform(fc, u_transform(e, f)).matrix();
    const ComplexMatrix rhs = u_transform(fc, u_transform(ec, f)).matrix();
    return with_witness(
        CheckResult::from_residual("assumption3_lemma4", max_diff(lhs, rhs), tol.abs_tol), e, f);
}

CheckResult check_assumption3_state(const Projection& e, const Projection& f, const State& rho0,
                                    const Tolerance& tol) {
    const Projection fc = orthocomplement(f);
    if (fc.rank() == 0 || prob_raw(rho0, fc) <= tol.abs_tol) {
        return CheckResult::not_applicable("assumption3_state", tol.abs_tol);
    }
    const State rho = condition_state(rho0, fc);
    // rho(f|e) rho(e) = rho(U_e f); written without the division so that
    // events of probability zero need no special case.
    const double lhs = prob_raw(rho, u_transform(e, f));
    const double rhs = prob_raw(rho, u_transform(orthocomplement(e), f));
    const double residual = std::max(std::abs(lhs - rhs), std::abs(prob_raw(rho, f)));
    return with_witness(CheckResult::from_residual("assumption3_state", residual, tol.abs_tol), e,
                        f);
}

CheckResult check_lemma1(const Projection& e, const Projection& f, const Tolerance& tol) {
    const Projection ec = orthocomplement(e);
    if (e.rank() == 0 || ec.rank() == 0) {
        return CheckResult::not_applicable("lemma1", tol.abs_tol);
    }
    const auto p = state_independent_prob(f, e, tol);
    const auto q = state_independent_prob(f, ec, tol);
    if (!p || !q || std::abs(p->value - 0.5) > tol.abs_tol ||
        std::abs(q->value - 0.5) > tol.abs_tol) {
        return CheckResult::not_applicable("lemma1", tol.abs_tol);
    }
    const Projection fc = orthocomplement(f);
    const double residual = std::max(max_diff(s_transform(e, f).matrix(), mat(fc)),
                                     max_diff(s_transform(e, fc).matrix(), mat(f)));
    return with_witness(CheckResult::from_residual("lemma1", residual, tol.abs_tol), e, f);
}

CheckResult check_lemma2(const Projection& e, const Projection& f, const Tolerance& tol) {
    const auto tp = state_independent_prob(f, e, tol);
    if (!tp) return CheckResult::not_applicable("lemma2", tol.abs_tol);
    const double p = tp->value;
    const Projection ec = orthocomplement(e);
    const Projection fc = orthocomplement(f);
    const ComplexMatrix& em = mat(e);

    // (a)
    double residual = max_diff(u_transform(e, u_transform(f, e)).matrix(), (p * p) * em);
    residual = std::max(residual, max_diff(u_transform(e, u_transform(fc, e)).matrix(),
                                           ((1 - p) * (1 - p)) * em));
    residual = std::max(residual,
                        max_diff(u_transform(e, u_transform(f, ec)).matrix(), (p * (1 - p)) * em));
    residual = std::max(
        residual, max_diff(u_transform(e, u_transform(fc, ec)).matrix(), (p * (1 - p)) * em));

    // (b): U_e S_f e = (2p-1)^2 e, checked as an operator identity so that
    // existence of P(S_f e|e) is part of the residual.
    const HermitianOperator sfe = s_transform(f, e);
    const double expected = (2 * p - 1) * (2 * p - 1);
    residual = std::max(residual, max_diff(u_transform(e, sfe).matrix(), expected * em));

    // (c)
    if (std::abs(p - 0.5) <= tol.abs_tol) {
        residual = std::max(residual, max_norm(sfe.matrix() * em));
    }
    return with_witness(CheckResult::from_residual("lemma2", residual, tol.abs_tol), e, f);
}

CheckResult check_atom_symmetry(const Projection& e, const Projection& f, const Tolerance& tol) {
    if (!is_atom(e) || !is_atom(f)) {
        return CheckResult::not_applicable("atom_symmetry", tol.abs_tol);
    }
    const auto pf = state_independent_prob(f, e, tol);
    const auto pe = state_independent_prob(e, f, tol);
    if (!pf || !pe) {
        // Atoms always admit P(.|atom); a missing value is a failure.
        return with_witness(CheckResult::from_residual("atom_symmetry", 1.0, tol.abs_tol), e, f);
    }
    return with_witness(
        CheckResult::from_residual("atom_symmetry", std::abs(pf->value - pe->value), tol.abs_tol),
        e, f);
}

CheckResult check_assumption2_consequences(const Projection& e, const Projection& f,
                                           const Tolerance& tol) {
    const char* name = "assumption2_consequences";
    if (!is_atom(e)) return CheckResult::not_applicable(name, tol.abs_tol);
    const auto tp = state_independent_prob(f, e, tol);
    if (!tp) return CheckResult::not_applicable(name, tol.abs_tol);
    const double p = tp->value;
    const State rho = atomic_state(e);
    const Projection ec = orthocomplement(e);
    const Projection fc = orthocomplement(f);

    double residual = 0.0;
    bool any = false;
    // Second condition f needs p > 0, second condition f' needs p < 1.
    if (p > tol.abs_tol) {
        residual = std::max(residual, std::abs(seq_cond_prob(rho, e, e, f) - p));
        residual = std::max(residual, std::abs(seq_cond_prob(rho, ec, e, f) - (1 - p)));
        any = true;
    }
    if (1 - p > tol.abs_tol) {
        residual = std::max(residual, std::abs(seq_cond_prob(rho, e, e, fc) - (1 - p)));
        residual = std::max(residual, std::abs(seq_cond_prob(rho, ec, e, fc) - p));
        any = true;
    }
    if (!any) return CheckResult::not_applicable(name, tol.abs_tol);
    return with_witness(CheckResult::from_residual(name, residual, tol.abs_tol), e, f);
}

CheckResult check_s_involution(const Projection& e, const HermitianOperator& x,
                               const Tolerance& tol) {
    const double residual = max_diff(s_transform(e, s_transform(e, x)).matrix(), x.matrix());
    return CheckResult::from_residual("s_involution", residual, tol.abs_tol);
}

CheckResult check_u_idempotence(const Projection& e, const HermitianOperator& x,
                                const Tolerance& tol) {
    const HermitianOperator once = u_transform(e, x);
    const double residual = max_diff(u_transform(e, once).matrix(), once.matrix());
    return CheckResult::from_residual("u_idempotence", residual, tol.abs_tol);
}

CheckResult check_p_invariance(const Projection& g, const Projection& e, const Projection& f,
                               const Tolerance& tol) {
    const auto before = state_independent_prob(f, e, tol);
    if (!before) return CheckResult::not_applicable("p_invariance", tol.abs_tol);
    const Projection sge = s_transform_event(g, e);
    const Projection sgf = s_transform_event(g, f);
    const auto after = state_independent_prob(sgf, sge, tol);
    if (!after) {
        return with_witness(CheckResult::from_residual("p_invariance", 1.0, tol.abs_tol), e, f);
    }
    return with_witness(CheckResult::from_residual(
                            "p_invariance", std::abs(after->value - before->value), tol.abs_tol),
                        e, f);
}

std::pair<Projection, Projection> qubit_pair(double p, std::size_t copies, const Tolerance& tol) {
    if (!(p >= 0.0 && p <= 1.0) || copies < 1) {
        throw InvalidArgument("qubit_pair: need p in [0,1] and copies >= 1");
    }
    const auto n = static_cast<Eigen::Index>(2 * copies);
    Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(n, n);
    Eigen::MatrixXcd f = Eigen::MatrixXcd::Zero(n, n);
    const double a = std::sqrt(p);
    const double b = std::sqrt(1.0 - p);
    for (Eigen::Index c = 0; c < static_cast<Eigen::Index>(copies); ++c) {
        const Eigen::Index o = 2 * c;
        e(o, o) = 1.0;
        f(o, o) = a * a;
        f(o, o + 1) = a * b;
        f(o + 1, o) = a * b;
        f(o + 1, o + 1) = b * b;
    }
    return {Projection::make(ComplexMatrix(std::move(e)), tol),
            Projection::make(ComplexMatrix(std::move(f)), tol)};
}

std::vector<std::pair<Projection, Projection>> deterministic_corpus(const Tolerance& tol) {
    std::vector<std::pair<Projection, Projection>> corpus;
    for (std::size_t copies : {1u, 2u}) {
        for (double p : {0.0, 0.25, 0.5, 0.75, 1.0}) {
            corpus.push_back(qubit_pair(p, copies, tol));
        }
    }
    return corpus;
}

namespace {

enum CheckIndex : std::size_t {
    kAssumption1,
    kAssumption2,
    kAssumption3,
    kAssumption3State,
    kLemma1,
    kLemma2,
    kAtomSymmetry,
    kAssumption2Consequences,
    kCheckCount
};

void fold(std::vector<std::optional<CheckResult>>& acc, std::size_t index,
          const CheckResult& r) {
    if (!acc[index]) {
        acc[index] = r;
    } else {
        acc[index]->merge(r);
    }
}

void run_pair_checks(std::vector<std::optional<CheckResult>>& acc, const Projection& e,
                     const Projection& f, const State& rho0, const Tolerance& tol) {
    fold(acc, kAssumption1, check_assumption1(e, f, tol));
    fold(acc, kAssumption2, check_assumption2(e, f, tol));
    fold(acc, kAssumption3, check_assumption3(e, f, tol));
    fold(acc, kAssumption3State, check_assumption3_state(e, f, rho0, tol));
    fold(acc, kLemma1, check_lemma1(e, f, tol));
    fold(acc, kLemma2, check_lemma2(e, f, tol));
}

}  // namespace

std::vector<CheckResult> run_suite(const RandomSpec& spec, const Tolerance& tol) {
    spec.validate();
    std::vector<std::optional<CheckResult>> acc(kCheckCount);

    for (const auto& [e, f] : deterministic_corpus(tol)) {
        const State rho0 = State::maximally_mixed(e.dim(), tol);
        run_pair_checks(acc, e, f, rho0, tol);
        fold(acc, kAtomSymmetry, check_atom_symmetry(e, f, tol));
        fold(acc, kAssumption2Consequences, check_assumption2_consequences(e, f, tol));
    }

    const std::string prefix = "assumptions/d" + std::to_string(spec.dim);
    for (std::size_t t = 0; t < spec.trials; ++t) {
        Rng rng(spec.seed, prefix + "/pair", t);
        const Projection e = random_projection(spec.dim, spec.rank_e, rng, tol);
        const Projection f = random_projection(spec.dim, spec.rank_f, rng, tol);
        const State rho0 = random_state(spec.dim, rng);
        run_pair_checks(acc, e, f, rho0, tol);

        Rng atoms(spec.seed, prefix + "/atoms", t);
        const Projection a = random_projection(spec.dim, 1, atoms, tol);
        const Projection b = random_projection(spec.dim, 1, atoms, tol);
        fold(acc, kAtomSymmetry, check_atom_symmetry(a, b, tol));
        fold(acc, kAssumption2Consequences, check_assumption2_consequences(a, b, tol));
        // Atoms also exercise Assumption 2 and Lemma 2 non-vacuously.
        fold(acc, kAssumption2, check_assumption2(a, f, tol));
        fold(acc, kLemma2, check_lemma2(a, f, tol));
    }

    std::vector<CheckResult> out;
    out.reserve(kCheckCount);
    for (auto& r : acc) {
        out.push_back(*r);
    }
    return out;
}

std::vector<CheckResult> run_property_suite(std::size_t dim, std::size_t cases,
                                            std::uint64_t seed, const Tolerance& tol) {
    if (dim < 2 || cases < 1) {
        throw InvalidArgument("run_property_suite: need dim >= 2 and cases >= 1");
    }
    std::optional<CheckResult> inv, idem, pinv;
    const std::string prefix = "properties/d" + std::to_string(dim);
    for (std::size_t c = 0; c < cases; ++c) {
        Rng rng(seed, prefix, c);
        const std::size_t rank = 1 + static_cast<std::size_t>(rng.below(dim));
        const Projection e = random_projection(dim, rank, rng, tol);
        const HermitianOperator x = random_hermitian(dim, rng);
        const Projection g =
            random_projection(dim, 1 + static_cast<std::size_t>(rng.below(dim)), rng, tol);
        const Projection atom = random_projection(dim, 1, rng, tol);
        const Projection f =
            random_projection(dim, 1 + static_cast<std::size_t>(rng.below(dim)), rng, tol);

        const auto r1 = check_s_involution(e, x, tol);
        const auto r2 = check_u_idempotence(e, x, tol);
        const auto r3 = check_p_invariance(g, atom, f, tol);
        if (!inv) inv = r1; else inv->merge(r1);
        if (!idem) idem = r2; else idem->merge(r2);
        if (!pinv) pinv = r3; else pinv->merge(r3);
    }
    return {*inv, *idem, *pinv};
}

}  // namespace qlogic
