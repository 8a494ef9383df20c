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

#include "qmix/complex_linalg.h"

#include <cmath>
#include <functional>
#include <limits>

#include "gtest/gtest.h"
#include "qmix/error.h"
#include "test_util.h"

using namespace qmix;
using namespace qmix::testing;

namespace {

ComplexMatrix cnot() {
    return ComplexMatrix{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
}

ComplexMatrix werner_literal(double alpha) {
    double lo = (1 - alpha) / 4, hi = (1 + alpha) / 4, off = -alpha / 2;
    return ComplexMatrix{{lo, 0, 0, 0}, {0, hi, off, 0}, {0, off, hi, 0}, {0, 0, 0, lo}};
}

ErrorKind kind_of(const std::function<void()> &f) {
    try {
        f();
    } catch (const Error &e) {
        return e.kind();
    }
    ADD_FAILURE() << "expected qmix::Error";
    return ErrorKind::InvalidArgument;
}

}  // namespace

TEST(complex_matrix, rejects_non_finite_entries) {
    double nan = std::numeric_limits<double>::quiet_NaN();
    double inf = std::numeric_limits<double>::infinity();
    EXPECT_EQ(kind_of([&] { ComplexMatrix(1, 2, {1.0, Complex{nan, 0}}); }), ErrorKind::NonFinite);
    EXPECT_EQ(kind_of([&] { ComplexMatrix{{1, Complex{0, inf}}}; }), ErrorKind::NonFinite);
    ComplexMatrix m(2, 2);
    EXPECT_EQ(kind_of([&] { m.set(0, 0, Complex{inf, 0}); }), ErrorKind::NonFinite);
    EXPECT_EQ(kind_of([&] { ComplexMatrix(2, 2, {1.0, 2.0, 3.0}); }), ErrorKind::DimensionMismatch);
    EXPECT_EQ(kind_of([&] { ComplexMatrix(0, 2); }), ErrorKind::InvalidDimension);
}

TEST(complex_linalg, matmul) {
    EXPECT_EQ(matmul(ComplexMatrix::identity(2), pauli_x()), pauli_x());
    EXPECT_EQ(matmul(pauli_x(), pauli_x()), ComplexMatrix::identity(2));
    // Expanded by hand: the permutation swaps rows 3 and 4 twice.
    EXPECT_EQ(matmul(cnot(), cnot()), ComplexMatrix::identity(4));
    EXPECT_EQ(kind_of([] { matmul(ComplexMatrix(2, 3), ComplexMatrix(2, 3)); }), ErrorKind::DimensionMismatch);
}

TEST(complex_linalg, kron) {
    EXPECT_EQ(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2)), ComplexMatrix::identity(4));
    Complex d[] = {0, 0, 0, 1};
    EXPECT_EQ(kron(proj1(), proj1()), ComplexMatrix::diagonal(d));
    ComplexMatrix anti{{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}};
    EXPECT_EQ(kron(pauli_x(), pauli_x()), anti);

    ComplexMatrix a{{1, 2, 3}};
    ComplexMatrix b{{4}, {5}};
    auto ab = kron(a, b);
    ASSERT_EQ(ab.rows(), 2u);
    ASSERT_EQ(ab.cols(), 3u);
    EXPECT_EQ(ab, (ComplexMatrix{{4, 8, 12}, {5, 10, 15}}));
}

TEST(complex_linalg, kron_is_associative_on_integer_matrices) {
    ComplexMatrix a{{1, -2}, {3, Complex{0, 4}}};
    ComplexMatrix b{{2, 0, 1}};
    ComplexMatrix c{{5}, {Complex{-1, 1}}};
    EXPECT_EQ(kron(kron(a, b), c), kron(a, kron(b, c)));
}

TEST(complex_linalg, adjoint) {
    EXPECT_EQ(adjoint(pauli_y()), pauli_y());
    EXPECT_EQ(adjoint(cnot()), cnot());
    EXPECT_EQ(adjoint(ComplexMatrix{{0, kI}, {0, 0}}), (ComplexMatrix{{0, 0}, {-kI, 0}}));
    auto rect = adjoint(ComplexMatrix{{1, 2, 3}});
    EXPECT_EQ(rect.rows(), 3u);
    EXPECT_EQ(rect.cols(), 1u);
}

TEST(complex_linalg, trace) {
    EXPECT_EQ(trace(ComplexMatrix::identity(4)), Complex(4));
    EXPECT_EQ(trace(pauli_z()), Complex(0));
    for (double alpha : {0.0, 0.3, 0.5, 1.0}) {
        EXPECT_NEAR(std::abs(trace(werner_literal(alpha)) - 1.0), 0, 1e-15);
    }
    EXPECT_EQ(kind_of([] { trace(ComplexMatrix(2, 3)); }), ErrorKind::NotSquare);
}

TEST(complex_linalg, trace_of_kron_is_product_of_traces) {
    Rng rng(11);
    for (int trial = 0; trial < 50; trial++) {
        auto a = random_matrix(2 + trial % 3, 2 + trial % 3, rng);
        auto b = random_matrix(1 + trial % 4, 1 + trial % 4, rng);
        EXPECT_LE(std::abs(trace(kron(a, b)) - trace(a) * trace(b)), 1e-12 * (1 + std::abs(trace(a) * trace(b))));
    }
}

TEST(complex_linalg, partial_trace_examples) {
    ComplexMatrix rho{{0.7, Complex{0.1, 0.2}}, {Complex{0.1, -0.2}, 0.3}};
    ComplexMatrix sigma{{0.4, 0.25}, {0.25, 0.6}};
    EXPECT_LE(max_abs_diff(partial_trace(kron(rho, sigma), 2, 2, Keep::A), rho), 1e-15);
    EXPECT_LE(max_abs_diff(partial_trace(kron(rho, sigma), 2, 2, Keep::B), sigma), 1e-15);

    auto half_identity = ComplexMatrix::identity(2) * 0.5;
    for (double alpha : {0.0, 0.5, 1.0}) {
        EXPECT_LE(max_abs_diff(partial_trace(werner_literal(alpha), 2, 2, Keep::A), half_identity), 1e-15);
    }

    // Generic r_ij with r_ij = 10*i + j (1-based) and a distinct imaginary tag.
    std::vector<Complex> e;
    for (int i = 1; i <= 4; i++) {
        for (int j = 1; j <= 4; j++) {
            e.emplace_back(10 * i + j, i - j);
        }
    }
    ComplexMatrix r(4, 4, e);
    auto at = [&](int i, int j) { return r(i - 1, j - 1); };
    ComplexMatrix expected_a{
        {at(1, 1) + at(2, 2), at(1, 3) + at(2, 4)},
        {at(3, 1) + at(4, 2), at(3, 3) + at(4, 4)},
    };
    ComplexMatrix expected_b{
        {at(1, 1) + at(3, 3), at(1, 2) + at(3, 4)},
        {at(2, 1) + at(4, 3), at(2, 2) + at(4, 4)},
    };
    EXPECT_EQ(partial_trace(r, 2, 2, Keep::A), expected_a);
    EXPECT_EQ(partial_trace(r, 2, 2, Keep::B), expected_b);

    EXPECT_EQ(kind_of([] { partial_trace(ComplexMatrix(4, 4), 2, 3, Keep::A); }), ErrorKind::DimensionMismatch);
    EXPECT_EQ(kind_of([] { partial_trace(ComplexMatrix(6, 4), 2, 3, Keep::A); }), ErrorKind::DimensionMismatch);
}

TEST(complex_linalg, partial_trace_of_kron_scales_by_trace) {
    Rng rng(12);
    for (int trial = 0; trial < 50; trial++) {
        std::size_t m = 1 + trial % 3;
        std::size_t k = 1 + (trial / 3) % 3;
        auto a = random_matrix(m, m, rng);
        auto b = random_matrix(k, k, rng);
        auto ab = kron(a, b);
        EXPECT_LE(max_abs_diff(partial_trace(ab, m, k, Keep::A), a * trace(b)), 1e-12);
        EXPECT_LE(max_abs_diff(partial_trace(ab, m, k, Keep::B), b * trace(a)), 1e-12);
    }
}

TEST(complex_linalg, partial_trace_matches_definitional_oracle) {
    Rng rng(13);
    const std::pair<std::size_t, std::size_t> splits[] = {{2, 2}, {2, 3}, {3, 2}, {1, 4}, {4, 1}};
    for (auto [m, k] : splits) {
        for (int trial = 0; trial < 20; trial++) {
            auto rho = random_matrix(m * k, m * k, rng);
            EXPECT_LE(max_abs_diff(partial_trace(rho, m, k, Keep::A), partial_trace_oracle(rho, m, k, true)), 1e-12);
            EXPECT_LE(max_abs_diff(partial_trace(rho, m, k, Keep::B), partial_trace_oracle(rho, m, k, false)), 1e-12);
        }
    }
}

TEST(complex_linalg, hermitian_eigenvalues_examples) {
    auto half = hermitian_eigenvalues(ComplexMatrix::identity(2) * 0.5);
    ASSERT_EQ(half.size(), 2u);
    EXPECT_NEAR(half[0], 0.5, 1e-15);
    EXPECT_NEAR(half[1], 0.5, 1e-15);

    auto x = hermitian_eigenvalues(pauli_x());
    EXPECT_NEAR(x[0], -1, 1e-14);
    EXPECT_NEAR(x[1], 1, 1e-14);

    auto y = hermitian_eigenvalues(pauli_y());
    EXPECT_NEAR(y[0], -1, 1e-14);
    EXPECT_NEAR(y[1], 1, 1e-14);

    // ρ_w(1) is the singlet projector.
    auto w = hermitian_eigenvalues(werner_literal(1));
    std::vector<double> expected{0, 0, 0, 1};
    for (std::size_t i = 0; i < 4; i++) {
        EXPECT_NEAR(w[i], expected[i], 1e-14);
    }

    EXPECT_EQ(kind_of([] { hermitian_eigenvalues(ComplexMatrix{{0, 1}, {0, 0}}); }), ErrorKind::NotHermitian);
    EXPECT_EQ(kind_of([] { hermitian_eigenvalues(ComplexMatrix(2, 3)); }), ErrorKind::NotSquare);
    EXPECT_NO_THROW(hermitian_eigenvalues(ComplexMatrix{{0, 1e-3}, {0, 0}}, 1e-2));
}

TEST(complex_linalg, hermitian_eigen_sums_to_trace_and_reconstructs) {
    Rng rng(14);
    for (std::size_t n : {1u, 2u, 3u, 4u, 7u, 16u}) {
        for (int trial = 0; trial < 10; trial++) {
            auto g = random_matrix(n, n, rng);
            auto h = g + adjoint(g);
            auto eig = hermitian_eigen(h);
            double sum = 0;
            for (double v : eig.values) {
                sum += v;
            }
            EXPECT_NEAR(sum, trace(h).real(), 1e-9);
            for (std::size_t i = 1; i < n; i++) {
                EXPECT_LE(eig.values[i - 1], eig.values[i]);
            }
            std::vector<Complex> lambda(eig.values.begin(), eig.values.end());
            auto rebuilt = matmul(matmul(eig.vectors, ComplexMatrix::diagonal(lambda)), adjoint(eig.vectors));
            EXPECT_LE(max_abs_diff(rebuilt, h), 1e-8) << "n=" << n;
            EXPECT_LE(max_abs_diff(matmul(adjoint(eig.vectors), eig.vectors), ComplexMatrix::identity(n)), 1e-10);
        }
    }
}

TEST(complex_linalg, max_abs_diff) {
    EXPECT_EQ(max_abs_diff(ComplexMatrix::identity(2), ComplexMatrix::identity(2)), 0);
    EXPECT_EQ(max_abs_diff(ComplexMatrix::identity(2), pauli_z()), 2);
    EXPECT_EQ(max_abs_diff(proj0(), proj1()), 1);
    EXPECT_EQ(max_abs_diff(ComplexMatrix{{Complex{3, 4}}}, ComplexMatrix{{0}}), 5);
    EXPECT_EQ(kind_of([] { max_abs_diff(ComplexMatrix(2, 2), ComplexMatrix(2, 1)); }), ErrorKind::DimensionMismatch);
}
