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

#include "qmix/sampling.h"

#include <cmath>
#include <numbers>

namespace qmix {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

DensityOperator qubit(double top_left, Complex off_diagonal) {
    return DensityOperator(ComplexMatrix{
        {top_left, off_diagonal},
        {std::conj(off_diagonal), 1 - top_left},
    });
}

Complex polar_sample(Rng &rng, double radius) {
    return std::polar(radius, rng.uniform(0, 2 * std::numbers::pi));
}

}  // namespace

Rng::Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {
}

Rng Rng::split(std::uint64_t stream) const {
    return Rng(splitmix64(seed_ ^ splitmix64(stream + 1)));
}

double Rng::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform();
}

double Rng::normal() {
    // 1 - u keeps the log argument in (0, 1].
    double u1 = 1.0 - uniform();
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

DensityOperator random_density(std::size_t n, Rng &rng) {
    std::vector<Complex> g(n * n);
    for (auto &z : g) {
        double re = rng.normal();
        double im = rng.normal();
        z = Complex{re, im};
    }
    ComplexMatrix gm(n, n, std::move(g));
    ComplexMatrix ggt = matmul(gm, adjoint(gm));
    ggt *= 1.0 / trace(ggt).real();
    return DensityOperator(std::move(ggt));
}

StatePair sample_diagonal_control_half_target(Rng &rng) {
    double a1 = rng.uniform();
    double b = rng.uniform(-0.5, 0.5);
    return {qubit(a1, 0), qubit(0.5, b)};
}

StatePair sample_projector_control(Rng &rng) {
    double a1 = rng.uniform() < 0.5 ? 0.0 : 1.0;
    return {qubit(a1, 0), random_density(2, rng)};
}

StatePair sample_plus_minus_target(Rng &rng) {
    double sign = rng.uniform() < 0.5 ? -1.0 : 1.0;
    return {random_density(2, rng), qubit(0.5, 0.5 * sign)};
}

StatePair sample_non_preserving(Rng &rng) {
    double a1 = rng.uniform(0.1, 0.9);
    // |a|² ≤ a1(1 − a1) keeps ρ positive; the bound is at least 0.3 here.
    double a_radius = rng.uniform(0.1, std::sqrt(a1 * (1 - a1)));
    Complex a = polar_sample(rng, a_radius);
    double b1 = rng.uniform(0.0, 0.8);
    b1 = b1 < 0.4 ? b1 : b1 + 0.2;
    double b_radius = rng.uniform() * std::sqrt(b1 * (1 - b1));
    Complex b = polar_sample(rng, b_radius);
    return {qubit(a1, a), qubit(b1, b)};
}

}  // namespace qmix
