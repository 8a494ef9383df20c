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
#include <optional>
#include <utility>
#include <vector>

#include "qmix/complex_linalg.h"
#include "qmix/pauli_bloch.h"

namespace qmix {

/// Dimensions (m, k) of a bipartite space H_a ⊗ H_b.
struct Split {
    std::size_t m;
    std::size_t k;

    bool operator==(const Split &) const = default;
};

/// A matrix known to be Hermitian, unit-trace, and positive semidefinite
/// (within the tolerance it was validated against).
class DensityOperator {
   public:
    /// Throws NotDensity naming the failed invariant, NotSquare for
    /// non-square input, DimensionMismatch if split.m * split.k != side.
    explicit DensityOperator(
        ComplexMatrix matrix, std::optional<Split> split = std::nullopt, double tol = kDefaultTolerance);

    const ComplexMatrix &matrix() const noexcept {
        return matrix_;
    }
    std::size_t dim() const noexcept {
        return matrix_.rows();
    }
    const std::optional<Split> &split() const noexcept {
        return split_;
    }
    const Complex &operator()(std::size_t r, std::size_t c) const {
        return matrix_(r, c);
    }

   private:
    ComplexMatrix matrix_;
    std::optional<Split> split_;
};

BlochVector bloch_vector(const DensityOperator &rho, double tol = kDefaultTolerance);

/// ρ_a = tr_b(ρ) and ρ_b = tr_a(ρ).
std::pair<DensityOperator, DensityOperator> reduced_states(const DensityOperator &rho, std::size_t m, std::size_t k);

/// M(ρ) = ρ − ρ_a ⊗ ρ_b. Traceless and Hermitian, but not a state.
ComplexMatrix holistic_term(const DensityOperator &rho, std::size_t m, std::size_t k);

/// Real (m²−1)×(k²−1) grid of correlation coefficients
/// M_{j,l} = tr(ρ σ_j⊗σ_l) − tr(ρ σ_j⊗I) tr(ρ I⊗σ_l).
class CorrelationCoefficients {
   public:
    CorrelationCoefficients(std::size_t rows, std::size_t cols, std::vector<double> values);

    std::size_t rows() const noexcept {
        return rows_;
    }
    std::size_t cols() const noexcept {
        return cols_;
    }
    double operator()(std::size_t j, std::size_t l) const {
        return values_[j * cols_ + l];
    }

   private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<double> values_;
};

/// Throws DimensionMismatch, or NonRealCoefficient if any trace has an
/// imaginary part above tol.
CorrelationCoefficients m_coefficients(
    const DensityOperator &rho, std::size_t m, std::size_t k, double tol = kDefaultTolerance);

/// ¼ Σ_j Σ_l M_{j,l} (σ_j ⊗ σ_l): the holistic term rebuilt from its Pauli
/// coefficients. Independent of holistic_term's direct subtraction.
ComplexMatrix holistic_from_coefficients(const CorrelationCoefficients &coeffs, std::size_t m, std::size_t k);

struct FactorizationReport {
    DensityOperator rho_a;
    DensityOperator rho_b;
    ComplexMatrix holistic;
    double residual_norm;
    bool factorizable;
};

/// A product-form factorization is unique and must use the reduced states,
/// so comparing ρ against ρ_a ⊗ ρ_b decides factorizability.
FactorizationReport is_factorizable(
    const DensityOperator &rho, std::size_t m, std::size_t k, double tol = kDefaultTolerance);

}  // namespace qmix
