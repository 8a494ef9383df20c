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

#include "qmix/density_state.h"

#include <string>

#include "qmix/error.h"

namespace qmix {

namespace {

void require_split(const DensityOperator &rho, std::size_t m, std::size_t k) {
    if (m == 0 || k == 0 || rho.dim() != m * k) {
        throw Error(
            ErrorKind::DimensionMismatch,
            "state of side " + std::to_string(rho.dim()) + " does not split as " + std::to_string(m) + "x" +
                std::to_string(k));
    }
}

double real_trace(const ComplexMatrix &a, double tol) {
    Complex t = trace(a);
    if (std::abs(t.imag()) > tol) {
        throw Error(ErrorKind::NonRealCoefficient, "expectation value has imaginary part " + std::to_string(t.imag()));
    }
    return t.real();
}

}  // namespace

DensityOperator::DensityOperator(ComplexMatrix matrix, std::optional<Split> split, double tol)
    : matrix_(std::move(matrix)), split_(split) {
    if (!matrix_.is_square()) {
        throw Error(ErrorKind::NotSquare, "density operator must be square");
    }
    if (split_ && split_->m * split_->k != matrix_.rows()) {
        throw Error(
            ErrorKind::DimensionMismatch,
            "split " + std::to_string(split_->m) + "x" + std::to_string(split_->k) + " does not match side " +
                std::to_string(matrix_.rows()));
    }
    if (auto why = density_violation(matrix_, tol)) {
        throw Error(ErrorKind::NotDensity, *why);
    }
}

BlochVector bloch_vector(const DensityOperator &rho, double tol) {
    return bloch_vector(rho.matrix(), tol);
}

std::pair<DensityOperator, DensityOperator> reduced_states(const DensityOperator &rho, std::size_t m, std::size_t k) {
    require_split(rho, m, k);
    return {
        DensityOperator(partial_trace(rho.matrix(), m, k, Keep::A)),
        DensityOperator(partial_trace(rho.matrix(), m, k, Keep::B)),
    };
}

ComplexMatrix holistic_term(const DensityOperator &rho, std::size_t m, std::size_t k) {
    require_split(rho, m, k);
    auto rho_a = partial_trace(rho.matrix(), m, k, Keep::A);
    auto rho_b = partial_trace(rho.matrix(), m, k, Keep::B);
    return rho.matrix() - kron(rho_a, rho_b);
}

CorrelationCoefficients::CorrelationCoefficients(std::size_t rows, std::size_t cols, std::vector<double> values)
    : rows_(rows), cols_(cols), values_(std::move(values)) {
    if (values_.size() != rows * cols) {
        throw Error(ErrorKind::DimensionMismatch, "coefficient grid size mismatch");
    }
}

CorrelationCoefficients m_coefficients(const DensityOperator &rho, std::size_t m, std::size_t k, double tol) {
    require_split(rho, m, k);
    auto basis_a = generalized_paulis(m);
    auto basis_b = generalized_paulis(k);
    auto id_a = ComplexMatrix::identity(m);
    auto id_b = ComplexMatrix::identity(k);

    std::vector<double> local_a;
    for (const auto &s : basis_a.matrices()) {
        local_a.push_back(real_trace(matmul(rho.matrix(), kron(s, id_b)), tol));
    }
    std::vector<double> local_b;
    for (const auto &s : basis_b.matrices()) {
        local_b.push_back(real_trace(matmul(rho.matrix(), kron(id_a, s)), tol));
    }

    std::vector<double> values;
    values.reserve(basis_a.size() * basis_b.size());
    for (std::size_t j = 0; j < basis_a.size(); j++) {
        for (std::size_t l = 0; l < basis_b.size(); l++) {
            double joint = real_trace(matmul(rho.matrix(), kron(basis_a[j], basis_b[l])), tol);
            values.push_back(joint - local_a[j] * local_b[l]);
        }
    }
    return CorrelationCoefficients(basis_a.size(), basis_b.size(), std::move(values));
}

ComplexMatrix holistic_from_coefficients(const CorrelationCoefficients &coeffs, std::size_t m, std::size_t k) {
    auto basis_a = generalized_paulis(m);
    auto basis_b = generalized_paulis(k);
    if (coeffs.rows() != basis_a.size() || coeffs.cols() != basis_b.size()) {
        throw Error(ErrorKind::DimensionMismatch, "coefficient grid does not match the split");
    }
    ComplexMatrix out(m * k, m * k);
    for (std::size_t j = 0; j < basis_a.size(); j++) {
        for (std::size_t l = 0; l < basis_b.size(); l++) {
            out += kron(basis_a[j], basis_b[l]) * (0.25 * coeffs(j, l));
        }
    }
    return out;
}

FactorizationReport is_factorizable(const DensityOperator &rho, std::size_t m, std::size_t k, double tol) {
    auto [rho_a, rho_b] = reduced_states(rho, m, k);
    auto product = kron(rho_a.matrix(), rho_b.matrix());
    double residual = max_abs_diff(rho.matrix(), product);
    return FactorizationReport{
        std::move(rho_a),
        std::move(rho_b),
        rho.matrix() - product,
        residual,
        residual <= tol,
    };
}

}  // namespace qmix
