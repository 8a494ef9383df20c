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

#include "qmix/pauli_bloch.h"

#include <cmath>
#include <string>

#include "qmix/error.h"

namespace qmix {

namespace {

ComplexMatrix symmetric_pauli(std::size_t n, std::size_t k, std::size_t j) {
    ComplexMatrix out(n, n);
    out.set(j, k, 1.0);
    out.set(k, j, 1.0);
    return out;
}

ComplexMatrix antisymmetric_pauli(std::size_t n, std::size_t k, std::size_t j) {
    // i(|j><k| - |k><j|)
    ComplexMatrix out(n, n);
    out.set(j, k, Complex{0, 1});
    out.set(k, j, Complex{0, -1});
    return out;
}

// k is 1-based, as in the usual definition.
ComplexMatrix diagonal_pauli(std::size_t n, std::size_t k) {
    double norm = std::sqrt(2.0 / static_cast<double>(k * (k + 1)));
    ComplexMatrix out(n, n);
    for (std::size_t d = 0; d < k; d++) {
        out.set(d, d, norm);
    }
    out.set(k, k, -static_cast<double>(k) * norm);
    return out;
}

}  // namespace

PauliBasis::PauliBasis(std::size_t dim) : dim_(dim) {
    if (dim < 2) {
        throw Error(ErrorKind::InvalidDimension, "Pauli basis needs dimension >= 2, got " + std::to_string(dim));
    }
    matrices_.reserve(dim * dim - 1);
    for (std::size_t k = 0; k < dim; k++) {
        for (std::size_t j = k + 1; j < dim; j++) {
            matrices_.push_back(symmetric_pauli(dim, k, j));
        }
    }
    for (std::size_t k = 0; k < dim; k++) {
        for (std::size_t j = k + 1; j < dim; j++) {
            matrices_.push_back(antisymmetric_pauli(dim, k, j));
        }
    }
    for (std::size_t k = 1; k < dim; k++) {
        matrices_.push_back(diagonal_pauli(dim, k));
    }
}

PauliBasis generalized_paulis(std::size_t n) {
    return PauliBasis(n);
}

BlochVector::BlochVector(std::size_t dim, std::vector<double> coeffs) : dim_(dim), coeffs_(std::move(coeffs)) {
    if (dim < 2 || coeffs_.size() != dim * dim - 1) {
        throw Error(
            ErrorKind::InvalidDimension,
            "Bloch vector of dimension " + std::to_string(dim) + " cannot have " + std::to_string(coeffs_.size()) +
                " coefficients");
    }
    for (double s : coeffs_) {
        if (!std::isfinite(s)) {
            throw Error(ErrorKind::NonFinite, "Bloch coefficients must be finite");
        }
    }
}

BlochVector bloch_vector(const ComplexMatrix &rho, double tol) {
    if (!rho.is_square()) {
        throw Error(ErrorKind::NotSquare, "bloch_vector needs a square matrix");
    }
    auto basis = generalized_paulis(rho.rows());
    std::vector<double> coeffs;
    coeffs.reserve(basis.size());
    for (std::size_t j = 0; j < basis.size(); j++) {
        Complex s = trace(matmul(rho, basis[j]));
        if (std::abs(s.imag()) > tol) {
            throw Error(
                ErrorKind::NonRealCoefficient,
                "tr(rho sigma_" + std::to_string(j + 1) + ") has imaginary part " + std::to_string(s.imag()));
        }
        coeffs.push_back(s.real());
    }
    return BlochVector(rho.rows(), std::move(coeffs));
}

ComplexMatrix from_bloch(const BlochVector &v) {
    const std::size_t n = v.dim();
    auto basis = generalized_paulis(n);
    ComplexMatrix out = ComplexMatrix::identity(n) * (1.0 / static_cast<double>(n));
    for (std::size_t j = 0; j < basis.size(); j++) {
        out += basis[j] * (0.5 * v.coeffs()[j]);
    }
    return out;
}

std::optional<std::string> density_violation(const ComplexMatrix &a, double tol) {
    if (!a.is_square()) {
        throw Error(ErrorKind::NotSquare, "density check needs a square matrix");
    }
    double defect = hermitian_defect(a);
    if (defect > tol) {
        return "not Hermitian (max |a - a^dagger| = " + std::to_string(defect) + ")";
    }
    Complex tr = trace(a);
    if (std::abs(tr - 1.0) > tol) {
        return "trace is " + std::to_string(tr.real()) + (tr.imag() != 0 ? "+" + std::to_string(tr.imag()) + "i" : "") +
               ", not 1";
    }
    double lowest = hermitian_eigenvalues(a, tol).front();
    if (lowest < -tol) {
        return "not positive semidefinite (min eigenvalue " + std::to_string(lowest) + ")";
    }
    return std::nullopt;
}

bool is_density(const ComplexMatrix &a, double tol) {
    return !density_violation(a, tol).has_value();
}

}  // namespace qmix
