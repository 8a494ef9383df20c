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

#include "qmix/quantum_operation.h"

#include <algorithm>
#include <bit>
#include <string>

#include "qmix/error.h"

namespace qmix {

namespace {

constexpr double kProbabilitySlack = 1e-9;

ComplexMatrix p1_matrix() {
    return ComplexMatrix{{0, 0}, {0, 1}};
}

}  // namespace

KrausChannel validate_kraus(std::vector<ComplexMatrix> ops, double tol) {
    if (ops.empty()) {
        throw Error(ErrorKind::ShapeMismatch, "a channel needs at least one Kraus operator");
    }
    const std::size_t rows = ops.front().rows();
    const std::size_t cols = ops.front().cols();
    ComplexMatrix completeness(cols, cols);
    for (const auto &a : ops) {
        if (a.rows() != rows || a.cols() != cols) {
            throw Error(ErrorKind::ShapeMismatch, "Kraus operators must share one shape");
        }
        completeness += matmul(adjoint(a), a);
    }
    double residual = max_abs_diff(completeness, ComplexMatrix::identity(cols));
    if (residual > tol) {
        throw Error(ErrorKind::IncompleteKraus, "max |sum A^dagger A - I| = " + std::to_string(residual));
    }
    return KrausChannel(std::move(ops));
}

ComplexMatrix apply(const KrausChannel &channel, const ComplexMatrix &x) {
    if (!x.is_square() || x.rows() != channel.input_dim()) {
        throw Error(
            ErrorKind::DimensionMismatch,
            "channel input side " + std::to_string(channel.input_dim()) + " vs operand " + std::to_string(x.rows()) +
                "x" + std::to_string(x.cols()));
    }
    ComplexMatrix out(channel.output_dim(), channel.output_dim());
    for (const auto &a : channel.operators()) {
        out += matmul(matmul(a, x), adjoint(a));
    }
    return out;
}

DensityOperator apply(const KrausChannel &channel, const DensityOperator &rho) {
    return DensityOperator(apply(channel, rho.matrix()));
}

KrausChannel lift_unitary(const ComplexMatrix &u, double tol) {
    if (!u.is_square()) {
        throw Error(ErrorKind::NotUnitary, "a unitary must be square");
    }
    double residual = max_abs_diff(matmul(adjoint(u), u), ComplexMatrix::identity(u.rows()));
    if (residual > tol) {
        throw Error(ErrorKind::NotUnitary, "max |U^dagger U - I| = " + std::to_string(residual));
    }
    return validate_kraus({u}, tol);
}

ComplexMatrix cnot_matrix() {
    return ComplexMatrix{
        {1, 0, 0, 0},
        {0, 1, 0, 0},
        {0, 0, 0, 1},
        {0, 0, 1, 0},
    };
}

const KrausChannel &cnot_channel() {
    static const KrausChannel channel = lift_unitary(cnot_matrix());
    return channel;
}

TruthProjector::TruthProjector(std::size_t qubits)
    : qubits_(qubits), matrix_(ComplexMatrix::identity(1)) {
    if (qubits == 0 || qubits > 30) {
        throw Error(ErrorKind::InvalidDimension, "truth projector needs 1..30 qubits, got " + std::to_string(qubits));
    }
    matrix_ = kron(ComplexMatrix::identity(std::size_t{1} << (qubits - 1)), p1_matrix());
}

TruthProjector truth_projector(std::size_t n) {
    return TruthProjector(n);
}

double probability(const DensityOperator &rho) {
    const std::size_t side = rho.dim();
    if (side < 2 || !std::has_single_bit(side)) {
        throw Error(ErrorKind::NotQubitDimension, "side " + std::to_string(side) + " is not a power of two");
    }
    // Tr(P1^(n) ρ) touches only the odd diagonal entries.
    double p = 0;
    for (std::size_t i = 1; i < side; i += 2) {
        p += rho(i, i).real();
    }
    if (p < -kProbabilitySlack || p > 1 + kProbabilitySlack) {
        throw Error(ErrorKind::OutOfRange, "probability " + std::to_string(p) + " outside [0, 1]");
    }
    return std::clamp(p, 0.0, 1.0);
}

}  // namespace qmix
