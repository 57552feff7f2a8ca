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

#ifndef QLOGIC_RANDOM_H
#define QLOGIC_RANDOM_H

#include <cstdint>
#include <random>
#include <string_view>

#include "qlogic/logic.h"
#include "qlogic/matrix.h"
#include "qlogic/probability.h"

namespace qlogic {

// Stream semantics: every random quantity is drawn from an Rng whose seed is
// derive_seed(root, name, index). The name is hashed with 64-bit FNV-1a and
// mixed with the root seed and the index through SplitMix64, so streams are
// independent of evaluation order and identical on every platform. The
// underlying engine is std::mt19937_64, whose output sequence is fixed by the
// C++ standard; all distributions below are implemented here rather than
// taken from <random>, whose distributions are implementation-defined.

std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t derive_seed(std::uint64_t root, std::string_view name, std::uint64_t index = 0);

class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    Rng(std::uint64_t root, std::string_view name, std::uint64_t index = 0)
        : engine_(derive_seed(root, name, index)) {}

    std::uint64_t next_u64() { return engine_(); }
    /// Uniform double in [0, 1) with 53 random bits.
    double uniform();
    /// Standard normal via the Box-Muller transform.
    double normal();
    /// Circular complex Gaussian with E|z|^2 = 1.
    Complex complex_normal();
    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n);

   private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// Modified Gram-Schmidt with one re-orthogonalization pass. Throws
/// InvalidArgument if the columns are numerically dependent.
Eigen::MatrixXcd orthonormalize(const Eigen::MatrixXcd& columns);

Eigen::VectorXcd random_unit_vector(std::size_t dim, Rng& rng);

/// Haar-style random rank-r projection V V* from r orthonormalized
/// complex Gaussian columns. rank == dim yields the identity.
Projection random_projection(std::size_t dim, std::size_t rank, Rng& rng,
                             const Tolerance& tol = {});

/// G G* / trace(G G*) for a complex Gaussian G: full-rank almost surely.
State random_state(std::size_t dim, Rng& rng);

/// Random Hermitian operator (G + G*)/2.
HermitianOperator random_hermitian(std::size_t dim, Rng& rng);

}  // namespace qlogic

#endif  // QLOGIC_RANDOM_H
