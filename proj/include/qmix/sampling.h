// Copyright 2026 The qmix Authors
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

#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "qmix/complex_linalg.h"
#include "qmix/density_state.h"

namespace qmix {

/// Seeded pseudorandom source with platform-independent output.
///
/// The engine is std::mt19937_64, whose sequence the standard fixes; the
/// uniform and normal transforms are implemented here because the standard
/// library distributions are implementation-defined.
class Rng {
   public:
    explicit Rng(std::uint64_t seed);

    /// Independent stream derived from this generator's seed and `stream`.
    /// Does not advance this generator.
    Rng split(std::uint64_t stream) const;

    /// Uniform on [0, 1) with 53 bits of resolution.
    double uniform();
    double uniform(double lo, double hi);
    /// Standard normal via Box-Muller.
    double normal();

   private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

/// G G† / tr(G G†) for G with independent standard-normal real and
/// imaginary parts. Full rank almost surely.
DensityOperator random_density(std::size_t n, Rng &rng);

using StatePair = std::pair<DensityOperator, DensityOperator>;

/// Control ρ diagonal, target σ = [[1/2, b], [b, 1/2]] with real b.
StatePair sample_diagonal_control_half_target(Rng &rng);
/// Control ρ ∈ {|0><0|, |1><1|}, arbitrary target.
StatePair sample_projector_control(Rng &rng);
/// Arbitrary control, target σ = ½[[1, ±1], [±1, 1]].
StatePair sample_plus_minus_target(Rng &rng);
/// Pairs outside every preserving family: a1 ∈ (0.1, 0.9), |a| > 0.1,
/// |b1 − 1/2| > 0.1, with ρ = [[a1, a], [a*, 1−a1]], σ = [[b1, b], [b*, 1−b1]].
StatePair sample_non_preserving(Rng &rng);

}  // namespace qmix
