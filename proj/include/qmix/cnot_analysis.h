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

#include <string_view>

#include "qmix/complex_linalg.h"
#include "qmix/density_state.h"

namespace qmix {

/// Truth probabilities of CNOT acting on a two-qubit state ρ, split as
/// p(CNOT(ρ)) = p(CNOT(ρ_1 ⊗ ρ_2)) + Tr(P1 C(ρ)) where
/// C(ρ) = CNOT M(ρ) CNOT carries the non-factorizable part.
struct CnotReport {
    double p_total;    // p(CNOT(ρ))
    double p_fuzzy;    // p(CNOT(ρ_1 ⊗ ρ_2)), the fuzzy component
    double incidence;  // Tr(P1 C(ρ)), lies in [-1/2, 1/2]
};

/// Closed forms in the diagonal entries r11..r44:
///   p_total   = r22 + r33
///   p_fuzzy   = (r11 + r22)(r22 + r44) + (r11 + r33)(r33 + r44)
///   incidence = 2 (r22 r33 − r11 r44)
/// Throws DimensionMismatch unless ρ is 4×4.
CnotReport cnot_report(const DensityOperator &rho);

/// The same three quantities computed by applying the channel to ρ, to
/// ρ_1 ⊗ ρ_2, and to M(ρ), then taking probabilities.
CnotReport cnot_report_by_channel(const DensityOperator &rho);

/// The Werner state ρ_w(α) = ¼ [[1−α,0,0,0],[0,1+α,−2α,0],[0,−2α,1+α,0],[0,0,0,1−α]].
/// Throws OutOfRange unless 0 ≤ α ≤ 1.
DensityOperator werner(double alpha);

/// Closed-form M(CNOT(ρ ⊗ σ)) for single-qubit ρ = [[a1, a], [a*, 1−a1]]
/// and σ = [[b1, b], [b*, 1−b1]]:
///   x11 = a1(1−a1)(2b1−1) = −x22 = −x33 = x44
///   x12 = −2i a1(a1−1) Im b                x34 = 2i a1 Im b (a1−1)
///   x13 = −a (b* + 2 Re b (a1(2b1−1) − b1))
///   x14 = a (b1 − 2 Re b (b* + 2i a1 Im b))
///   x23 = −a (b1 − 1 + 2 Re b (b − 2i a1 Im b))
///   x24 = a (b* − 2 Re b (a1 + b1 − 2 a1 b1))
/// with the lower triangle the conjugate transpose. Throws
/// DimensionMismatch unless both inputs are 2×2.
ComplexMatrix residual_entries(const DensityOperator &rho, const DensityOperator &sigma);

/// Families of product inputs ρ ⊗ σ whose CNOT image stays factorizable.
enum class PreservationFamily {
    DiagonalControlHalfDiagTarget,  // ρ diagonal, σ = [[1/2, b], [b, 1/2]] with b real
    ControlIsP0,                    // ρ = |0><0|
    ControlIsP1,                    // ρ = |1><1|
    TargetIsPlusMinus,              // σ = ½[[1, ±1], [±1, 1]]
    NotPreserved,
};

std::string_view family_name(PreservationFamily family);

struct PreservationVerdict {
    bool preserved;
    PreservationFamily family;
    double residual_norm;
};

/// `preserved` and `residual_norm` come from factorizing CNOT(ρ ⊗ σ)
/// directly. `family` names the first matching parameter family in the
/// order control-projector, target-±, diagonal-control, and is
/// NotPreserved whenever the verdict is negative.
PreservationVerdict classify_preservation(
    const DensityOperator &rho, const DensityOperator &sigma, double tol = kDefaultTolerance);

}  // namespace qmix
