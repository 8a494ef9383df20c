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

#include "qmix/complex_linalg.h"
#include "qmix/sampling.h"

namespace qmix::testing {

inline const Complex kI{0, 1};

inline ComplexMatrix pauli_x() {
    return ComplexMatrix{{0, 1}, {1, 0}};
}
inline ComplexMatrix pauli_y() {
    return ComplexMatrix{{0, -kI}, {kI, 0}};
}
inline ComplexMatrix pauli_z() {
    return ComplexMatrix{{1, 0}, {0, -1}};
}
inline ComplexMatrix proj0() {
    return ComplexMatrix{{1, 0}, {0, 0}};
}
inline ComplexMatrix proj1() {
    return ComplexMatrix{{0, 0}, {0, 1}};
}
inline ComplexMatrix plus_state() {
    return ComplexMatrix{{0.5, 0.5}, {0.5, 0.5}};
}
inline ComplexMatrix minus_state() {
    return ComplexMatrix{{0.5, -0.5}, {-0.5, 0.5}};
}

/// Dense matrix with independent standard-normal real and imaginary parts.
inline ComplexMatrix random_matrix(std::size_t rows, std::size_t cols, Rng &rng) {
    std::vector<Complex> e(rows * cols);
    for (auto &z : e) {
        double re = rng.normal();
        double im = rng.normal();
        z = {re, im};
    }
    return ComplexMatrix(rows, cols, std::move(e));
}

/// Partial trace from the definition: (tr_b ρ)_{i,i'} = Σ_j <i j|ρ|i' j>,
/// (tr_a ρ)_{j,j'} = Σ_i <i j|ρ|i j'>, with basis index |i j> = i*k + j.
inline ComplexMatrix partial_trace_oracle(const ComplexMatrix &rho, std::size_t m, std::size_t k, bool keep_a) {
    if (keep_a) {
        ComplexMatrix out(m, m);
        for (std::size_t i = 0; i < m; i++) {
            for (std::size_t ip = 0; ip < m; ip++) {
                Complex s{};
                for (std::size_t j = 0; j < k; j++) {
                    s += rho(i * k + j, ip * k + j);
                }
                out.set(i, ip, s);
            }
        }
        return out;
    }
    ComplexMatrix out(k, k);
    for (std::size_t j = 0; j < k; j++) {
        for (std::size_t jp = 0; jp < k; jp++) {
            Complex s{};
            for (std::size_t i = 0; i < m; i++) {
                s += rho(i * k + j, i * k + jp);
            }
            out.set(j, jp, s);
        }
    }
    return out;
}

inline double max_entry(const ComplexMatrix &m) {
    return max_abs_diff(m, ComplexMatrix::zeros(m.rows(), m.cols()));
}

}  // namespace qmix::testing
