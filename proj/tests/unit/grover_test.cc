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

#include "gtest/gtest.h"

#include "qlogic/errors.h"
#include "qlogic/probability.h"

using namespace qlogic;

TEST(build_instance, hadamard_case) {
    const GroverInstance inst = build_instance(2, 1);
    EXPECT_EQ(inst.dim, 2u);
    const double h = 1.0 / std::sqrt(2.0);
    Eigen::VectorXcd plus(2);
    plus << h, h;
    EXPECT_LE(max_diff(inst.e.matrix(), Projection::onto(plus).matrix()), 1e-15);
    EXPECT_NEAR(inst.f[0].matrix()(0, 0).real(), 1.0, 0.0);
    EXPECT_NEAR(inst.f[1].matrix()(1, 1).real(), 1.0, 0.0);
    EXPECT_NEAR(state_independent_prob(inst.f[0], inst.e)->value, 0.5, 1e-15);
}

TEST(build_instance, transition_probabilities_are_one_over_n) {
    for (std::size_t n : {4u, 8u}) {
        for (std::size_t m : {1u, 2u, 3u}) {
            const GroverInstance inst = build_instance(n, 1, m);
            EXPECT_EQ(inst.e.rank(), m);
            for (const Projection& fk : inst.f) {
                EXPECT_EQ(fk.rank(), m);
                const auto fe = state_independent_prob(fk, inst.e);
                const auto ef = state_independent_prob(inst.e, fk);
                ASSERT_TRUE(fe && ef);
                EXPECT_NEAR(fe->value, 1.0 / static_cast<double>(n), 1e-15);
                EXPECT_NEAR(ef->value, 1.0 / static_cast<double>(n), 1e-15);
                EXPECT_LE(fe->residual, 1e-12);
            }
        }
    }
}

TEST(build_instance, errors) {
    EXPECT_THROW(build_instance(1, 1), InvalidArgument);
    EXPECT_THROW(build_instance(4, 0), InvalidArgument);
    EXPECT_THROW(build_instance(4, 5), InvalidArgument);
    EXPECT_THROW(build_instance(4, 1, 0), InvalidArgument);
    EXPECT_THROW(build_instance(64, 1, 2, 64), DimensionOverflow);
}

TEST(iterate, examples) {
    const GroverInstance inst = build_instance(4, 2);
    EXPECT_LE(max_diff(iterate(inst, 0).matrix(), inst.e.matrix()), 1e-15);
    EXPECT_NEAR(state_independent_prob(inst.target_event(), iterate(inst, 1))->value, 1.0, 1e-12);
}

TEST(iterate, conjugation_matches_s_composition) {
    for (std::size_t m : {1u, 2u}) {
        const GroverInstance inst = build_instance(8, 3, m);
        for (std::size_t r = 0; r <= 6; ++r) {
            EXPECT_LE(max_diff(iterate(inst, r).matrix(), iterate_s_composition(inst, r).matrix()),
                      1e-10);
            EXPECT_EQ(iterate(inst, r).rank(), m);
        }
    }
}

TEST(success_prob, examples) {
    EXPECT_NEAR(success_prob(build_instance(4, 1), 1), 1.0, 1e-12);
    EXPECT_NEAR(success_prob(build_instance(2, 1), 1), 0.5, 1e-12);
    const double brute = success_prob(build_instance(16, 5), 3);
    EXPECT_NEAR(brute, 0.9613189697265625, 1e-9);
    EXPECT_NEAR(closed_form(1.0 / 16, 3), 0.9613189697265625, 1e-15);
}

TEST(success_prob, dual_form_agrees) {
    for (std::size_t n : {2u, 4u, 8u, 16u}) {
        const GroverInstance inst = build_instance(n, n / 2, 2);
        for (std::size_t r = 0; r <= 8; ++r) {
            EXPECT_NEAR(success_prob(inst, r), dual_success_prob(inst, r), 1e-10);
        }
    }
}

TEST(success_prob, outcome_probabilities_sum_to_one) {
    const GroverInstance inst = build_instance(8, 4, 2);
    for (std::size_t r = 0; r <= 5; ++r) {
        const Projection g = iterate(inst, r);
        double total = 0.0;
        for (const Projection& fk : inst.f) {
            const auto tp = state_independent_prob(fk, g);
            if (tp) {
                total += tp->value;
            } else {
                total += prob(State::normalized(g), fk);
            }
        }
        EXPECT_LE(total, 1.0 + 1e-9);
        EXPECT_NEAR(total, 1.0, 1e-9);
    }
}

TEST(closed_form, examples) {
    EXPECT_NEAR(closed_form(0.25, 1), 1.0, 1e-15);
    for (std::size_t r = 0; r < 10; ++r) EXPECT_NEAR(closed_form(1.0, r), 1.0, 1e-15);
    EXPECT_NEAR(closed_form(0.5, 2), 0.5, 1e-15);
    EXPECT_NEAR(closed_form(0.1, 2), 0.99856, 1e-12);
    EXPECT_NEAR(success_prob(build_instance(2, 2), 2), 0.5, 1e-12);
    EXPECT_THROW(closed_form(0.0, 1), DomainError);
    EXPECT_THROW(closed_form(1.5, 1), DomainError);
    EXPECT_THROW(closed_form(std::nan(""), 1), DomainError);
}

TEST(optimal_iterations, examples) {
    EXPECT_EQ(optimal_iterations(4), 1u);
    EXPECT_EQ(optimal_iterations(2), 0u);
    EXPECT_EQ(optimal_iterations(1024), 25u);
    EXPECT_THROW(optimal_iterations(1), InvalidArgument);
}

TEST(optimal_iterations, maximizes_over_first_period) {
    // The first period of r -> closed_form(1/n, r) ends at floor(pi / (2 theta)).
    for (std::size_t n : {3u, 4u, 5u, 8u, 16u, 64u, 100u, 1024u}) {
        const double p = 1.0 / static_cast<double>(n);
        const double theta = std::asin(std::sqrt(p));
        const auto period = static_cast<std::size_t>(std::floor(std::numbers::pi / (2 * theta)));
        std::size_t arg = 0;
        for (std::size_t r = 1; r <= period; ++r) {
            if (closed_form(p, r) > closed_form(p, arg) + 1e-12) arg = r;
        }
        EXPECT_EQ(optimal_iterations(n), arg) << "n=" << n;
    }
    // Over [0, 100] the n = 1024 maximum sits in the second period.
    std::size_t global = 0;
    for (std::size_t r = 1; r <= 100; ++r) {
        if (closed_form(1.0 / 1024, r) > closed_form(1.0 / 1024, global)) global = r;
    }
    EXPECT_EQ(global, 75u);
    EXPECT_NEAR(closed_form(1.0 / 1024, 25), 0.99946124, 1e-8);
}

TEST(sweep, matches_closed_form) {
    for (std::size_t n : {2u, 4u, 8u, 16u}) {
        for (std::size_t m : {1u, 2u}) {
            const auto runs = sweep(build_instance(n, 1, m), 20);
            ASSERT_EQ(runs.size(), 21u);
            for (const GroverRun& run : runs) {
                EXPECT_LE(run.deviation, 1e-9) << "n=" << n << " r=" << run.r;
                EXPECT_EQ(run.deviation, std::abs(run.success_prob - run.closed_form));
            }
        }
    }
}

TEST(sweep, agrees_with_success_prob) {
    const GroverInstance inst = build_instance(8, 5, 2);
    const auto runs = sweep(inst, 6);
    for (const GroverRun& run : runs) {
        EXPECT_NEAR(run.success_prob, success_prob(inst, run.r), 1e-12);
    }
}

TEST(sweep, json_fields) {
    const auto runs = sweep(build_instance(4, 1), 1);
    const auto j = to_json(runs[1]);
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    const std::vector<std::string> expected{"n",           "multiplicity", "target",   "r",
                                            "success_prob", "closed_form", "deviation"};
    EXPECT_EQ(keys, expected);
    EXPECT_NEAR(j["success_prob"].get<double>(), 1.0, 1e-12);
}

TEST(pair_instance, general_p) {
    for (double p : {0.1, 0.3, 0.5, 0.77}) {
        const PairInstance pair = build_pair_instance(p);
        EXPECT_EQ(pair.e.rank(), 2u);
        for (std::size_t r = 0; r <= 10; ++r) {
            EXPECT_NEAR(pair_success_prob(pair, r), closed_form(p, r), 1e-10);
        }
    }
    EXPECT_NEAR(pair_success_prob(build_pair_instance(0.1, 1), 2), 0.99856, 1e-12);
    EXPECT_THROW(build_pair_instance(0.0), DomainError);
    EXPECT_THROW(build_pair_instance(1.0), DomainError);
}
