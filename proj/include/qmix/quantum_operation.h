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

#include <cstddef>
#include <vector>

#include "qmix/complex_linalg.h"
#include "qmix/density_state.h"

namespace qmix {

/// A quantum operation in Kraus form, E(ρ) = Σ A_i ρ A_i†, with
/// Σ A_i† A_i = I verified at construction by validate_kraus.
class KrausChannel {
   public:
    const std::vector<ComplexMatrix> &operators() const noexcept {
        return operators_;
    }
    std::size_t input_dim() const noexcept {
        return operators_.front().cols();
    }
    std::size_t output_dim() const noexcept {
        return operators_.front().rows();
    }

   private:
    explicit KrausChannel(std::vector<ComplexMatrix> operators) : operators_(std::move(operators)) {
    }
    friend KrausChannel validate_kraus(std::vector<ComplexMatrix> ops, double tol);

    std::vector<ComplexMatrix> operators_;
};

/// Throws ShapeMismatch if the list is empty or shapes differ,
/// IncompleteKraus (with the completeness residual) otherwise on failure.
KrausChannel validate_kraus(std::vector<ComplexMatrix> ops, double tol = kDefaultTolerance);

/// Σ A_i x A_i† on an arbitrary matrix; also used on traceless terms.
ComplexMatrix apply(const KrausChannel &channel, const ComplexMatrix &x);

/// Throws DimensionMismatch. The result is re-validated as a state.
DensityOperator apply(const KrausChannel &channel, const DensityOperator &rho);

/// O_U(ρ) = U ρ U†. Throws NotUnitary unless U†U = I within tol.
KrausChannel lift_unitary(const ComplexMatrix &u, double tol = kDefaultTolerance);

/// |i>|j> -> |i>|i xor j>, control on the first factor.
ComplexMatrix cnot_matrix();

/// lift_unitary(cnot_matrix()).
const KrausChannel &cnot_channel();

/// I ⊗ ... ⊗ I ⊗ P1 on n qubits: the truth projector on the last qubit.
class TruthProjector {
   public:
    /// Throws InvalidDimension for n == 0 or n > 30.
    explicit TruthProjector(std::size_t qubits);

    std::size_t qubits() const noexcept {
        return qubits_;
    }
    const ComplexMatrix &matrix() const noexcept {
        return matrix_;
    }

   private:
    std::size_t qubits_;
    ComplexMatrix matrix_;
};

TruthProjector truth_projector(std::size_t n);

/// p(ρ) = Tr(P1^(n) ρ): the weight on basis states whose last qubit is 1.
/// Throws NotQubitDimension if the side is not a power of two, OutOfRange if
/// the value falls more than 1e-9 outside [0, 1]; smaller excursions clamp.
double probability(const DensityOperator &rho);

}  // namespace qmix
