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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace qmix {

using Complex = std::complex<double>;

/// Library-wide default for Hermiticity, positivity, and equality checks.
inline constexpr double kDefaultTolerance = 1e-9;

/// Dense row-major complex matrix. Every stored entry is finite; the
/// constructors reject NaN and infinity.
class ComplexMatrix {
   public:
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix zeros(std::size_t rows, std::size_t cols);
    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(std::span<const Complex> diag);

    std::size_t rows() const noexcept {
        return rows_;
    }
    std::size_t cols() const noexcept {
        return cols_;
    }
    bool is_square() const noexcept {
        return rows_ == cols_;
    }
    std::span<const Complex> entries() const noexcept {
        return entries_;
    }

    const Complex &operator()(std::size_t r, std::size_t c) const {
        return entries_[r * cols_ + c];
    }
    /// Throws NonFinite for NaN or infinite values.
    void set(std::size_t r, std::size_t c, Complex value);

    ComplexMatrix &operator+=(const ComplexMatrix &other);
    ComplexMatrix &operator-=(const ComplexMatrix &other);
    ComplexMatrix &operator*=(Complex scale);

    bool operator==(const ComplexMatrix &other) const = default;

   private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator*(ComplexMatrix a, Complex scale);
ComplexMatrix operator*(Complex scale, ComplexMatrix a);

/// Which factor of a bipartite space survives a partial trace.
enum class Keep { A, B };

ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix adjoint(const ComplexMatrix &a);
Complex trace(const ComplexMatrix &a);

/// Partial trace of an (m*k)-square matrix over H_a (dim m) ⊗ H_b (dim k).
///
/// The matrix is split into m×m blocks of size k×k; the first factor indexes
/// blocks and the second indexes entries within a block. Keep::A returns the
/// m×m matrix of block traces, Keep::B returns the sum of the diagonal blocks.
ComplexMatrix partial_trace(const ComplexMatrix &rho, std::size_t m, std::size_t k, Keep keep);

/// Largest entrywise modulus of a - b. Used as the residual norm everywhere.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

/// Largest entrywise modulus of a - a†.
double hermitian_defect(const ComplexMatrix &a);

struct HermitianEigen {
    std::vector<double> values;  // ascending
    ComplexMatrix vectors;       // column j pairs with values[j]
};

/// Cyclic complex Jacobi diagonalization. Throws NotHermitian when
/// hermitian_defect(a) exceeds tol.
HermitianEigen hermitian_eigen(const ComplexMatrix &a, double tol = kDefaultTolerance);
std::vector<double> hermitian_eigenvalues(const ComplexMatrix &a, double tol = kDefaultTolerance);

}  // namespace qmix
