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

#include "qlogic/grover.h"

#include <cmath>
#include <numbers>
#include <string>

#include "qlogic/assumptions.h"
#include "qlogic/errors.h"
#include "qlogic/probability.h"

namespace qlogic {

namespace {

Eigen::MatrixXcd reflection(const Projection& p) {
    const auto n = static_cast<Eigen::Index>(p.dim());
    return 2.0 * p.matrix().eigen() - Eigen::MatrixXcd::Identity(n, n);
}

/// (first * second)^r x ((first * second)^r)*.
Projection conjugate_power(const Eigen::MatrixXcd& first, const Eigen::MatrixXcd& second,
                           const Projection& x, std::size_t r) {
    const Eigen::MatrixXcd step = first * second;
    Eigen::MatrixXcd w = Eigen::MatrixXcd::Identity(step.rows(), step.cols());
    for (std::size_t i = 0; i < r; ++i) {
        w = step * w;
    }
    const Eigen::MatrixXcd evolved = w * x.matrix().eigen() * w.adjoint();
    return hermitian_part(ComplexMatrix(evolved)).as_projection(x.tol());
}

double require_transition(const Projection& f, const Projection& e, const char* what) {
    const auto tp = state_independent_prob(f, e);
    if (!tp) {
        throw TransitionNotStateIndependent(std::string(what) +
                                            ": efe is not proportional to e within tolerance");
    }
    return tp->value;
}

/// Columns psi_j = (1/sqrt n) sum_k |k, j>.
Eigen::MatrixXcd uniform_basis(std::size_t n, std::size_t multiplicity) {
    const auto m = static_cast<Eigen::Index>(multiplicity);
    Eigen::MatrixXcd psi = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(n) * m, m);
    const double amp = 1.0 / std::sqrt(static_cast<double>(n));
    for (Eigen::Index j = 0; j < m; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
            psi(static_cast<Eigen::Index>(k) * m + j, j) = amp;
        }
    }
    return psi;
}

}  // namespace

GroverInstance build_instance(std::size_t n, std::size_t target, std::size_t multiplicity,
                              std::size_t max_dim, const Tolerance& tol) {
    if (n < 2) throw InvalidArgument("build_instance: n must be >= 2");
    if (multiplicity < 1) throw InvalidArgument("build_instance: multiplicity must be >= 1");
    if (target < 1 || target > n) {
        throw InvalidArgument("build_instance: target " + std::to_string(target) +
                              " outside [1, " + std::to_string(n) + "]");
    }
    if (n > max_dim / multiplicity) {
        throw DimensionOverflow("build_instance: n * multiplicity exceeds maximum dimension " +
                                std::to_string(max_dim));
    }
    const std::size_t dim = n * multiplicity;
    const auto nd = static_cast<Eigen::Index>(dim);
    const auto m = static_cast<Eigen::Index>(multiplicity);

    std::vector<Projection> f;
    f.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        const auto first = static_cast<Eigen::Index>(k) * m;
        f.push_back(Projection::onto_span(Eigen::MatrixXcd::Identity(nd, nd).middleCols(first, m),
                                          tol));
    }

    Projection e = Projection::onto_span(uniform_basis(n, multiplicity), tol);

    // The construction is exact; the defining probabilities are checked on
    // the target only, which keeps large instances affordable.
    const double expected = 1.0 / static_cast<double>(n);
    const Projection& fk = f[target - 1];
    const auto fe = state_independent_prob(fk, e, tol);
    const auto ef = state_independent_prob(e, fk, tol);
    if (!fe || !ef || std::abs(fe->value - expected) > tol.abs_tol ||
        std::abs(ef->value - expected) > tol.abs_tol) {
        throw TransitionNotStateIndependent("build_instance: P(f_k|e) = 1/n = P(e|f_k) fails");
    }
    return GroverInstance{n, multiplicity, target, std::move(e), std::move(f), dim};
}

Projection iterate(const GroverInstance& inst, std::size_t r) {
    return conjugate_power(reflection(inst.e), reflection(inst.target_event()), inst.e, r);
}

Projection iterate_s_composition(const GroverInstance& inst, std::size_t r) {
    HermitianOperator x = inst.e;
    for (std::size_t i = 0; i < r; ++i) {
        x = s_transform(inst.e, s_transform(inst.target_event(), x));
    }
    return x.as_projection(inst.e.tol());
}

double success_prob(const GroverInstance& inst, std::size_t r) {
    return require_transition(inst.target_event(), iterate(inst, r), "success_prob");
}

double dual_success_prob(const GroverInstance& inst, std::size_t r) {
    const Projection evolved_f =
        conjugate_power(reflection(inst.target_event()), reflection(inst.e), inst.target_event(), r);
    return require_transition(evolved_f, inst.e, "dual_success_prob");
}

double closed_form(double p, std::size_t r) {
    if (!(p > 0.0 && p <= 1.0)) {
        throw DomainError("closed_form: p must lie in (0, 1]");
    }
    const double s = std::sin((2.0 * static_cast<double>(r) + 1.0) * std::asin(std::sqrt(p)));
    return s * s;
}

std::size_t optimal_iterations(std::size_t n) {
    if (n < 2) throw InvalidArgument("optimal_iterations: n must be >= 2");
    const double p = 1.0 / static_cast<double>(n);
    const double theta = std::asin(std::sqrt(p));
    const double raw = std::round(std::numbers::pi / (4.0 * theta) - 0.5);
    std::size_t best = raw > 0.0 ? static_cast<std::size_t>(raw) : 0;

    // Ties (n = 2 has closed_form(1/2, 0) == closed_form(1/2, 1)) resolve
    // to the smaller count.
    constexpr double kImprovement = 1e-12;
    const std::size_t lo = best > 0 ? best - 1 : 0;
    std::size_t arg = lo;
    double value = closed_form(p, lo);
    for (std::size_t r = lo + 1; r <= best + 1; ++r) {
        const double v = closed_form(p, r);
        if (v > value + kImprovement) {
            value = v;
            arg = r;
        }
    }
    return arg;
}

std::vector<GroverRun> sweep(const GroverInstance& inst, std::size_t r_max) {
    const Eigen::MatrixXcd step = reflection(inst.e) * reflection(inst.target_event());
    const double p = 1.0 / static_cast<double>(inst.n);
    // The evolved event is the span of the rotated basis of e.
    Eigen::MatrixXcd basis = uniform_basis(inst.n, inst.multiplicity);
    std::vector<GroverRun> runs;
    runs.reserve(r_max + 1);
    for (std::size_t r = 0; r <= r_max; ++r) {
        if (r > 0) basis = step * basis;
        const Projection ev = Projection::onto_span(basis, inst.e.tol());
        const double sp = require_transition(inst.target_event(), ev, "sweep");
        const double cf = closed_form(p, r);
        runs.push_back(GroverRun{inst.n, inst.multiplicity, inst.target, r, sp, cf,
                                 std::abs(sp - cf)});
    }
    return runs;
}

nlohmann::ordered_json to_json(const GroverRun& run) {
    nlohmann::ordered_json j;
    j["n"] = run.n;
    j["multiplicity"] = run.multiplicity;
    j["target"] = run.target;
    j["r"] = run.r;
    j["success_prob"] = run.success_prob;
    j["closed_form"] = run.closed_form;
    j["deviation"] = run.deviation;
    return j;
}

PairInstance build_pair_instance(double p, std::size_t copies, const Tolerance& tol) {
    if (!(p > 0.0 && p < 1.0)) {
        throw DomainError("build_pair_instance: p must lie in (0, 1)");
    }
    auto [e, f] = qubit_pair(p, copies, tol);
    return PairInstance{p, std::move(e), std::move(f)};
}

double pair_success_prob(const PairInstance& pair, std::size_t r) {
    const Projection evolved = conjugate_power(reflection(pair.e), reflection(pair.f), pair.e, r);
    return require_transition(pair.f, evolved, "pair_success_prob");
}

}  // namespace qlogic
