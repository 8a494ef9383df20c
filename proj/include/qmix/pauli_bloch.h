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
#include <string>
#include <vector>

#include "qmix/complex_linalg.h"

namespace qmix {

/// The n²−1 generalized Pauli matrices of an n-dimensional space.
///
/// Canonical order: the symmetric family σ1[k,j] for all k<j
/// (lexicographic in (k, j)), then the antisymmetric family σ2[k,j] in the
/// same order, then the diagonal family σ3[k] for k = 1..n−1. Every element
/// is Hermitian and traceless with tr(σi σj) = 2δij.
class PauliBasis {
   public:
    explicit PauliBasis(std::size_t dim);

    std::size_t dim() const noexcept {
        return dim_;
    }
    std::size_t size() const noexcept {
        return matrices_.size();
    }
    const ComplexMatrix &operator[](std::size_t i) const {
        return matrices_[i];
    }
    const std::vector<ComplexMatrix> &matrices() const noexcept {
        return matrices_;
    }

   private:
    std::size_t dim_;
    std::vector<ComplexMatrix> matrices_;
};

/// Throws InvalidDimension for n < 2.
PauliBasis generalized_paulis(std::size_t n);

/// Real coefficients s_j = tr(ρ σ_j) against the canonical basis order.
class BlochVector {
   public:
    /// Throws InvalidDimension unless coeffs.size() == dim² − 1 (dim ≥ 2),
    /// NonFinite for NaN or infinite coefficients.
    BlochVector(std::size_t dim, std::vector<double> coeffs);

    std::size_t dim() const noexcept {
        return dim_;
    }
    const std::vector<double> &coeffs() const noexcept {
        return coeffs_;
    }

    bool operator==(const BlochVector &) const = default;

   private:
    std::size_t dim_;
    std::vector<double> coeffs_;
};

/// Throws NonRealCoefficient if some tr(ρ σ_j) has an imaginary part above
/// tol, which happens only for non-Hermitian input.
BlochVector bloch_vector(const ComplexMatrix &rho, double tol = kDefaultTolerance);

/// (1/n) I + ½ Σ s_j σ_j. The result is Hermitian with unit trace but is
/// not necessarily positive; validate with is_density.
ComplexMatrix from_bloch(const BlochVector &v);

/// Returns a description of the first violated density-operator invariant
/// (Hermitian, unit trace, positive semidefinite), or nullopt if none.
std::optional<std::string> density_violation(const ComplexMatrix &a, double tol = kDefaultTolerance);

/// Throws NotSquare for non-square input.
bool is_density(const ComplexMatrix &a, double tol = kDefaultTolerance);

}  // namespace qmix
