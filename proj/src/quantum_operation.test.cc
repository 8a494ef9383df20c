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

#include <cmath>

#include "gtest/gtest.h"
#include "qmix/error.h"
#include "qmix/sampling.h"
#include "test_util.h"

using namespace qmix;
using namespace qmix::testing;

namespace {

ErrorKind kind_of(const std::function<void()> &f) {
    try {
        f();
    } catch (const Error &e) {
        return e.kind();
    }
    ADD_FAILURE() << "expected qmix::Error";
    return ErrorKind::InvalidArgument;
}

/// Kraus operators sliced from a random isometry V = G (G†G)^{-1/2}.
std::vector<ComplexMatrix> random_kraus(std::size_t dim, std::size_t count, Rng &rng) {
    auto g = random_matrix(dim * count, dim, rng);
    auto eig = hermitian_eigen(matmul(adjoint(g), g));
    std::vector<Complex> inv_sqrt;
    for (double v : eig.values) {
        inv_sqrt.push_back(1 / std::sqrt(v));
    }
    auto v = matmul(g, matmul(matmul(eig.vectors, ComplexMatrix::diagonal(inv_sqrt)), adjoint(eig.vectors)));
    std::vector<ComplexMatrix> ops;
    for (std::size_t i = 0; i < count; i++) {
        ComplexMatrix a(dim, dim);
        for (std::size_t r = 0; r < dim; r++) {
            for (std::size_t c = 0; c < dim; c++) {
                a.set(r, c, v(i * dim + r, c));
            }
        }
        ops.push_back(a);
    }
    return ops;
}

ComplexMatrix basis_column(std::size_t dim, std::size_t index) {
    ComplexMatrix v(dim, 1);
    v.set(index, 0, 1);
    return v;
}

}  // namespace

TEST(quantum_operation, validate_kraus) {
    EXPECT_NO_THROW(validate_kraus({ComplexMatrix::identity(2)}));
    EXPECT_NO_THROW(validate_kraus({cnot_matrix()}));
    auto measure = validate_kraus({proj0(), proj1()});
    EXPECT_EQ(measure.operators().size(), 2u);
    EXPECT_EQ(measure.input_dim(), 2u);

    EXPECT_EQ(kind_of([] { validate_kraus({proj0()}); }), ErrorKind::IncompleteKraus);
    EXPECT_EQ(kind_of([] { validate_kraus({}); }), ErrorKind::ShapeMismatch);
    EXPECT_EQ(kind_of([] { validate_kraus({proj0(), ComplexMatrix(2, 3)}); }), ErrorKind::ShapeMismatch);
    try {
        validate_kraus({ComplexMatrix::identity(2) * 2.0});
    } catch (const Error &e) {
        EXPECT_NE(std::string(e.what()).find("3.0"), std::string::npos) << e.what();
    }
}

TEST(quantum_operation, apply_examples) {
    Rng rng(41);
    auto rho = random_density(2, rng);
    auto identity = validate_kraus({ComplexMatrix::identity(2)});
    EXPECT_LE(max_abs_diff(apply(identity, rho).matrix(), rho.matrix()), 1e-15);

    auto dephase = validate_kraus({proj0(), proj1()});
    Complex diag[] = {rho(0, 0), rho(1, 1)};
    EXPECT_LE(max_abs_diff(apply(dephase, rho).matrix(), ComplexMatrix::diagonal(diag)), 1e-15);

    auto sigma = random_density(2, rng);
    DensityOperator joint(kron(rho.matrix(), sigma.matrix()));
    auto expected = matmul(matmul(cnot_matrix(), joint.matrix()), cnot_matrix());
    EXPECT_LE(max_abs_diff(apply(cnot_channel(), joint).matrix(), expected), 1e-15);

    EXPECT_EQ(kind_of([&] { apply(cnot_channel(), rho); }), ErrorKind::DimensionMismatch);
}

TEST(quantum_operation, lift_unitary) {
    auto id = lift_unitary(ComplexMatrix::identity(2));
    EXPECT_EQ(id.operators().front(), ComplexMatrix::identity(2));
    auto cn = lift_unitary(cnot_matrix());
    EXPECT_EQ(cn.operators().front(), cnot_matrix());
    auto flip = lift_unitary(pauli_x());
    EXPECT_EQ(apply(flip, DensityOperator(proj0())).matrix(), proj1());

    EXPECT_EQ(kind_of([] { lift_unitary(proj0()); }), ErrorKind::NotUnitary);
    EXPECT_EQ(kind_of([] { lift_unitary(ComplexMatrix(2, 3)); }), ErrorKind::NotUnitary);
}

TEST(quantum_operation, cnot_matrix_action) {
    auto c = cnot_matrix();
    // Basis |ij> sits at index 2i + j.
    EXPECT_EQ(matmul(c, basis_column(4, 2)), basis_column(4, 3));
    EXPECT_EQ(matmul(c, basis_column(4, 3)), basis_column(4, 2));
    EXPECT_EQ(matmul(c, basis_column(4, 0)), basis_column(4, 0));
    EXPECT_EQ(matmul(c, basis_column(4, 1)), basis_column(4, 1));
    EXPECT_EQ(matmul(c, c), ComplexMatrix::identity(4));
    EXPECT_EQ(adjoint(c), c);
}

TEST(quantum_operation, truth_projector) {
    EXPECT_EQ(truth_projector(1).matrix(), proj1());
    Complex d2[] = {0, 1, 0, 1};
    EXPECT_EQ(truth_projector(2).matrix(), ComplexMatrix::diagonal(d2));
    Complex d3[] = {0, 1, 0, 1, 0, 1, 0, 1};
    EXPECT_EQ(truth_projector(3).matrix(), ComplexMatrix::diagonal(d3));
    auto p = truth_projector(3).matrix();
    EXPECT_EQ(matmul(p, p), p);
    EXPECT_EQ(adjoint(p), p);
    EXPECT_EQ(kind_of([] { truth_projector(0); }), ErrorKind::InvalidDimension);
}

TEST(quantum_operation, probability_examples) {
    EXPECT_EQ(probability(DensityOperator(proj0())), 0);
    EXPECT_EQ(probability(DensityOperator(proj1())), 1);
    EXPECT_EQ(probability(DensityOperator(ComplexMatrix::identity(4) * 0.25)), 0.5);

    // Pure |ψ> = c0|0> + c1|1> gives |c1|².
    Complex c0{0.6, 0}, c1{0, 0.8};
    ComplexMatrix psi{{c0}, {c1}};
    EXPECT_NEAR(probability(DensityOperator(matmul(psi, adjoint(psi)))), 0.64, 1e-15);

    for (double alpha : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        double lo = (1 - alpha) / 4, hi = (1 + alpha) / 4, off = -alpha / 2;
        DensityOperator w(ComplexMatrix{{lo, 0, 0, 0}, {0, hi, off, 0}, {0, off, hi, 0}, {0, 0, 0, lo}});
        EXPECT_NEAR(probability(apply(cnot_channel(), w)), (1 + alpha) / 2, 1e-15);
    }

    EXPECT_EQ(kind_of([] { probability(DensityOperator(ComplexMatrix::identity(3) * (1.0 / 3))); }),
              ErrorKind::NotQubitDimension);
}

TEST(quantum_operation, probability_clamps_rounding_only) {
    // Within the density tolerance, but slightly outside [0, 1] on the odd diagonal.
    DensityOperator nearly_p0(ComplexMatrix{{1 + 5e-10, 0}, {0, -5e-10}});
    EXPECT_EQ(probability(nearly_p0), 0);
}

TEST(quantum_operation, probability_is_sum_of_odd_diagonal) {
    Rng rng(42);
    for (std::size_t n : {2u, 4u, 8u}) {
        for (int trial = 0; trial < 20; trial++) {
            auto rho = random_density(n, rng);
            double odd = 0;
            for (std::size_t i = 1; i < n; i += 2) {
                odd += rho(i, i).real();
            }
            std::size_t qubits = static_cast<std::size_t>(std::log2(n));
            double definitional = trace(matmul(truth_projector(qubits).matrix(), rho.matrix())).real();
            EXPECT_EQ(probability(rho), odd);
            EXPECT_NEAR(probability(rho), definitional, 1e-15);
        }
    }
}

TEST(quantum_operation, random_channels_preserve_states) {
    Rng rng(43);
    for (int trial = 0; trial < 100; trial++) {
        std::size_t dim = 2 + trial % 3;
        auto channel = validate_kraus(random_kraus(dim, 1 + trial % 4, rng));
        auto out = apply(channel, random_density(dim, rng));
        EXPECT_LE(std::abs(trace(out.matrix()) - 1.0), 1e-9);
        EXPECT_GE(hermitian_eigenvalues(out.matrix()).front(), -1e-8);
    }
}

TEST(quantum_operation, lifted_unitary_matches_conjugation) {
    Rng rng(44);
    for (int trial = 0; trial < 50; trial++) {
        auto u = random_kraus(3, 1, rng).front();
        auto rho = random_density(3, rng);
        auto direct = matmul(matmul(u, rho.matrix()), adjoint(u));
        EXPECT_LE(max_abs_diff(apply(lift_unitary(u), rho).matrix(), direct), 1e-12);
    }
}

TEST(quantum_operation, cnot_channel_is_an_involution) {
    Rng rng(45);
    for (int trial = 0; trial < 100; trial++) {
        auto rho = random_density(4, rng);
        auto twice = apply(cnot_channel(), apply(cnot_channel(), rho));
        EXPECT_LE(max_abs_diff(twice.matrix(), rho.matrix()), 1e-12);
    }
}
