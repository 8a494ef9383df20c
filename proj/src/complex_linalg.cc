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

#include <algorithm>
#include <cmath>
#include <string>

#include "qmix/error.h"

namespace qmix {

namespace {

bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

std::string shape(const ComplexMatrix &a) {
    return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

void require_same_shape(const ComplexMatrix &a, const ComplexMatrix &b, const char *op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(ErrorKind::DimensionMismatch, std::string(op) + ": " + shape(a) + " vs " + shape(b));
    }
}

void require_square(const ComplexMatrix &a, const char *op) {
    if (!a.is_square()) {
        throw Error(ErrorKind::NotSquare, std::string(op) + ": got " + shape(a));
    }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {
    if (rows == 0 || cols == 0) {
        throw Error(ErrorKind::InvalidDimension, "matrix dimensions must be positive");
    }
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows == 0 || cols == 0) {
        throw Error(ErrorKind::InvalidDimension, "matrix dimensions must be positive");
    }
    if (entries_.size() != rows * cols) {
        throw Error(
            ErrorKind::DimensionMismatch,
            "expected " + std::to_string(rows * cols) + " entries, got " + std::to_string(entries_.size()));
    }
    if (!std::all_of(entries_.begin(), entries_.end(), is_finite)) {
        throw Error(ErrorKind::NonFinite, "matrix entries must be finite");
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
    if (rows_ == 0 || cols_ == 0) {
        throw Error(ErrorKind::InvalidDimension, "matrix dimensions must be positive");
    }
    entries_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
        if (row.size() != cols_) {
            throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
        }
        for (Complex z : row) {
            if (!is_finite(z)) {
                throw Error(ErrorKind::NonFinite, "matrix entries must be finite");
            }
            entries_.push_back(z);
        }
    }
}

ComplexMatrix ComplexMatrix::zeros(std::size_t rows, std::size_t cols) {
    return ComplexMatrix(rows, cols);
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix out(n, n);
    for (std::size_t i = 0; i < n; i++) {
        out.entries_[i * n + i] = 1.0;
    }
    return out;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
    std::size_t n = diag.size();
    std::vector<Complex> entries(n * n);
    for (std::size_t i = 0; i < n; i++) {
        entries[i * n + i] = diag[i];
    }
    return ComplexMatrix(n, n, std::move(entries));
}

void ComplexMatrix::set(std::size_t r, std::size_t c, Complex value) {
    if (!is_finite(value)) {
        throw Error(ErrorKind::NonFinite, "matrix entries must be finite");
    }
    entries_[r * cols_ + c] = value;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
    require_same_shape(*this, other, "operator+");
    for (std::size_t i = 0; i < entries_.size(); i++) {
        entries_[i] += other.entries_[i];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &other) {
    require_same_shape(*this, other, "operator-");
    for (std::size_t i = 0; i < entries_.size(); i++) {
        entries_[i] -= other.entries_[i];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex scale) {
    if (!is_finite(scale)) {
        throw Error(ErrorKind::NonFinite, "scale must be finite");
    }
    for (auto &z : entries_) {
        z *= scale;
    }
    return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) {
    a += b;
    return a;
}

ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) {
    a -= b;
    return a;
}

ComplexMatrix operator*(ComplexMatrix a, Complex scale) {
    a *= scale;
    return a;
}

ComplexMatrix operator*(Complex scale, ComplexMatrix a) {
    a *= scale;
    return a;
}

ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols() != b.rows()) {
        throw Error(ErrorKind::DimensionMismatch, "matmul: " + shape(a) + " times " + shape(b));
    }
    std::vector<Complex> out(a.rows() * b.cols());
    for (std::size_t i = 0; i < a.rows(); i++) {
        for (std::size_t l = 0; l < a.cols(); l++) {
            Complex ail = a(i, l);
            if (ail == Complex{}) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols(); j++) {
                out[i * b.cols() + j] += ail * b(l, j);
            }
        }
    }
    return ComplexMatrix(a.rows(), b.cols(), std::move(out));
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    std::size_t rows = a.rows() * b.rows();
    std::size_t cols = a.cols() * b.cols();
    std::vector<Complex> out(rows * cols);
    for (std::size_t i = 0; i < a.rows(); i++) {
        for (std::size_t j = 0; j < a.cols(); j++) {
            Complex aij = a(i, j);
            for (std::size_t p = 0; p < b.rows(); p++) {
                for (std::size_t q = 0; q < b.cols(); q++) {
                    out[(i * b.rows() + p) * cols + j * b.cols() + q] = aij * b(p, q);
                }
            }
        }
    }
    return ComplexMatrix(rows, cols, std::move(out));
}

ComplexMatrix adjoint(const ComplexMatrix &a) {
    std::vector<Complex> out(a.rows() * a.cols());
    for (std::size_t i = 0; i < a.rows(); i++) {
        for (std::size_t j = 0; j < a.cols(); j++) {
            out[j * a.rows() + i] = std::conj(a(i, j));
        }
    }
    return ComplexMatrix(a.cols(), a.rows(), std::move(out));
}

Complex trace(const ComplexMatrix &a) {
    require_square(a, "trace");
    Complex sum{};
    for (std::size_t i = 0; i < a.rows(); i++) {
        sum += a(i, i);
    }
    return sum;
}

ComplexMatrix partial_trace(const ComplexMatrix &rho, std::size_t m, std::size_t k, Keep keep) {
    if (m == 0 || k == 0 || !rho.is_square() || rho.rows() != m * k) {
        throw Error(
            ErrorKind::DimensionMismatch,
            "partial_trace: " + shape(rho) + " is not (" + std::to_string(m) + "*" + std::to_string(k) + ")-square");
    }
    if (keep == Keep::A) {
        std::vector<Complex> out(m * m);
        for (std::size_t i = 0; i < m; i++) {
            for (std::size_t j = 0; j < m; j++) {
                Complex block_trace{};
                for (std::size_t d = 0; d < k; d++) {
                    block_trace += rho(i * k + d, j * k + d);
                }
                out[i * m + j] = block_trace;
            }
        }
        return ComplexMatrix(m, m, std::move(out));
    }
    std::vector<Complex> out(k * k);
    for (std::size_t i = 0; i < m; i++) {
        for (std::size_t p = 0; p < k; p++) {
            for (std::size_t q = 0; q < k; q++) {
                out[p * k + q] += rho(i * k + p, i * k + q);
            }
        }
    }
    return ComplexMatrix(k, k, std::move(out));
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_shape(a, b, "max_abs_diff");
    double worst = 0;
    auto ea = a.entries();
    auto eb = b.entries();
    for (std::size_t i = 0; i < ea.size(); i++) {
        worst = std::max(worst, std::abs(ea[i] - eb[i]));
    }
    return worst;
}

double hermitian_defect(const ComplexMatrix &a) {
    require_square(a, "hermitian_defect");
    double worst = 0;
    for (std::size_t i = 0; i < a.rows(); i++) {
        for (std::size_t j = i; j < a.cols(); j++) {
            worst = std::max(worst, std::abs(a(i, j) - std::conj(a(j, i))));
        }
    }
    return worst;
}

HermitianEigen hermitian_eigen(const ComplexMatrix &a, double tol) {
    require_square(a, "hermitian_eigen");
    double defect = hermitian_defect(a);
    if (defect > tol) {
        throw Error(ErrorKind::NotHermitian, "max |a - a^dagger| = " + std::to_string(defect));
    }
    const std::size_t n = a.rows();

    // Work on the Hermitian part so the rotations see an exactly Hermitian input.
    std::vector<Complex> h(n * n);
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = 0; j < n; j++) {
            h[i * n + j] = 0.5 * (a(i, j) + std::conj(a(j, i)));
        }
    }
    std::vector<Complex> v(n * n);
    for (std::size_t i = 0; i < n; i++) {
        v[i * n + i] = 1.0;
    }
    auto at = [n](std::vector<Complex> &m, std::size_t r, std::size_t c) -> Complex & {
        return m[r * n + c];
    };

    double scale = 0;
    for (Complex z : h) {
        scale += std::norm(z);
    }
    const double threshold = std::max(scale, 1e-300) * 1e-32;

    for (int sweep = 0; sweep < 100; sweep++) {
        double off = 0;
        for (std::size_t p = 0; p < n; p++) {
            for (std::size_t q = p + 1; q < n; q++) {
                off += std::norm(at(h, p, q));
            }
        }
        if (off <= threshold) {
            break;
        }
        for (std::size_t p = 0; p < n; p++) {
            for (std::size_t q = p + 1; q < n; q++) {
                Complex hpq = at(h, p, q);
                double beta = std::abs(hpq);
                if (beta == 0) {
                    continue;
                }
                // G = diag(1, e^{-i phi}) * [[c, s], [-s, c]] zeroes h(p, q) under h <- G† h G.
                Complex phase = std::conj(hpq) / beta;
                double alpha = at(h, p, p).real();
                double gamma = at(h, q, q).real();
                double theta = 0.5 * std::atan2(2 * beta, gamma - alpha);
                double c = std::cos(theta);
                double s = std::sin(theta);
                Complex gpp = c;
                Complex gpq = s;
                Complex gqp = -s * phase;
                Complex gqq = c * phase;

                for (std::size_t r = 0; r < n; r++) {
                    Complex hp = at(h, r, p);
                    Complex hq = at(h, r, q);
                    at(h, r, p) = hp * gpp + hq * gqp;
                    at(h, r, q) = hp * gpq + hq * gqq;
                    Complex vp = at(v, r, p);
                    Complex vq = at(v, r, q);
                    at(v, r, p) = vp * gpp + vq * gqp;
                    at(v, r, q) = vp * gpq + vq * gqq;
                }
                for (std::size_t col = 0; col < n; col++) {
                    Complex hp = at(h, p, col);
                    Complex hq = at(h, q, col);
                    at(h, p, col) = std::conj(gpp) * hp + std::conj(gqp) * hq;
                    at(h, q, col) = std::conj(gpq) * hp + std::conj(gqq) * hq;
                }
                at(h, p, q) = 0;
                at(h, q, p) = 0;
                at(h, p, p) = at(h, p, p).real();
                at(h, q, q) = at(h, q, q).real();
            }
        }
    }

    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; i++) {
        order[i] = i;
    }
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return h[x * n + x].real() < h[y * n + y].real();
    });

    HermitianEigen result{std::vector<double>(n), ComplexMatrix(n, n)};
    std::vector<Complex> sorted_vectors(n * n);
    for (std::size_t j = 0; j < n; j++) {
        result.values[j] = h[order[j] * n + order[j]].real();
        for (std::size_t r = 0; r < n; r++) {
            sorted_vectors[r * n + j] = v[r * n + order[j]];
        }
    }
    result.vectors = ComplexMatrix(n, n, std::move(sorted_vectors));
    return result;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix &a, double tol) {
    return hermitian_eigen(a, tol).values;
}

}  // namespace qmix
