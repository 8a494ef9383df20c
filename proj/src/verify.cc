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

#include "qmix/verify.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "qmix/cnot_analysis.h"
#include "qmix/density_state.h"
#include "qmix/fuzzy_pmv.h"
#include "qmix/pauli_bloch.h"
#include "qmix/quantum_operation.h"
#include "qmix/sampling.h"

namespace qmix {

namespace {

double max_entry(const ComplexMatrix &m) {
    return max_abs_diff(m, ComplexMatrix::zeros(m.rows(), m.cols()));
}

/// Runs `samples` trials; each returns a residual, and passes when
/// residual <= tol. A throwing trial counts as a failure with infinite residual.
SuiteResult max_residual_suite(
    std::string name, std::size_t samples, double tol, Rng rng, const std::function<double(Rng &)> &trial) {
    SuiteResult result{std::move(name), "max_residual", 0, samples, 0};
    for (std::size_t s = 0; s < samples; s++) {
        double residual;
        try {
            residual = trial(rng);
        } catch (const std::exception &) {
            residual = std::numeric_limits<double>::infinity();
        }
        if (residual <= tol) {
            result.passed++;
        }
        result.metric = std::max(result.metric, residual);
    }
    return result;
}

double decomposition_trial(Rng &rng) {
    auto rho = random_density(4, rng);
    auto direct = holistic_term(rho, 2, 2);
    auto via_paulis = holistic_from_coefficients(m_coefficients(rho, 2, 2), 2, 2);
    auto [rho_a, rho_b] = reduced_states(rho, 2, 2);
    double residual = max_abs_diff(direct, via_paulis);
    residual = std::max(residual, max_abs_diff(rho.matrix(), kron(rho_a.matrix(), rho_b.matrix()) + direct));
    residual = std::max(residual, std::abs(trace(direct)));
    residual = std::max(residual, max_entry(partial_trace(direct, 2, 2, Keep::A)));
    residual = std::max(residual, max_entry(partial_trace(direct, 2, 2, Keep::B)));
    return residual;
}

double bloch_trial(Rng &rng, std::size_t dim) {
    auto rho = random_density(dim, rng);
    return max_abs_diff(from_bloch(bloch_vector(rho)), rho.matrix());
}

double fuzzy_probability_trial(Rng &rng) {
    auto rho = random_density(2, rng);
    auto sigma = random_density(2, rng);
    double p = probability(apply(cnot_channel(), DensityOperator(kron(rho.matrix(), sigma.matrix()))));
    double expected = cnot_polynomial(FuzzyValue(probability(rho)), FuzzyValue(probability(sigma))).value();
    return std::abs(p - expected);
}

double closed_forms_trial(Rng &rng) {
    auto rho = random_density(4, rng);
    auto closed = cnot_report(rho);
    auto channel = cnot_report_by_channel(rho);
    double residual = std::max(
        {std::abs(closed.p_total - channel.p_total),
         std::abs(closed.p_fuzzy - channel.p_fuzzy),
         std::abs(closed.incidence - channel.incidence),
         std::abs(closed.p_total - closed.p_fuzzy - closed.incidence)});
    // Out-of-bound incidence is a failure regardless of tolerance.
    if (std::abs(closed.incidence) > 0.5 + kDefaultTolerance) {
        return std::numeric_limits<double>::infinity();
    }
    return residual;
}

double soundness_trial(Rng &rng, std::size_t &round, double tol) {
    StatePair pair = [&] {
        switch (round++ % 3) {
            case 0:
                return sample_diagonal_control_half_target(rng);
            case 1:
                return sample_projector_control(rng);
            default:
                return sample_plus_minus_target(rng);
        }
    }();
    auto verdict = classify_preservation(pair.first, pair.second, tol);
    if (!verdict.preserved || verdict.family == PreservationFamily::NotPreserved) {
        return std::numeric_limits<double>::infinity();
    }
    return verdict.residual_norm;
}

double residual_forms_trial(Rng &rng) {
    auto rho = random_density(2, rng);
    auto sigma = random_density(2, rng);
    auto out = apply(cnot_channel(), DensityOperator(kron(rho.matrix(), sigma.matrix())));
    return max_abs_diff(residual_entries(rho, sigma), holistic_term(out, 2, 2));
}

SuiteResult completeness_suite(std::size_t samples, double tol, Rng rng) {
    constexpr double kMinimumResidual = 1e-6;
    SuiteResult result{"preservation-completeness", "min_residual", 0, samples, std::numeric_limits<double>::infinity()};
    for (std::size_t s = 0; s < samples; s++) {
        try {
            auto [rho, sigma] = sample_non_preserving(rng);
            auto verdict = classify_preservation(rho, sigma, tol);
            if (verdict.residual_norm > kMinimumResidual && !verdict.preserved &&
                verdict.family == PreservationFamily::NotPreserved) {
                result.passed++;
            }
            result.metric = std::min(result.metric, verdict.residual_norm);
        } catch (const std::exception &) {
            result.metric = 0;
        }
    }
    return result;
}

}  // namespace

std::vector<SuiteResult> run_verification(const VerifyConfig &config) {
    const Rng root(config.seed);
    const std::size_t n = config.samples;
    const double tol = config.tolerance;
    std::size_t bloch_round = 0;
    std::size_t family_round = 0;

    std::vector<SuiteResult> results;
    results.push_back(max_residual_suite("holistic-decomposition", n, tol, root.split(0), decomposition_trial));
    results.push_back(max_residual_suite("bloch-round-trip", n, tol, root.split(1), [&](Rng &rng) {
        return bloch_trial(rng, bloch_round++ % 2 == 0 ? 2 : 4);
    }));
    results.push_back(max_residual_suite("cnot-fuzzy-probability", n, tol, root.split(2), fuzzy_probability_trial));
    results.push_back(max_residual_suite("cnot-closed-forms", n, tol, root.split(3), closed_forms_trial));
    results.push_back(max_residual_suite("preservation-soundness", n, tol, root.split(4), [&](Rng &rng) {
        return soundness_trial(rng, family_round, tol);
    }));
    results.push_back(completeness_suite(n, tol, root.split(5)));
    results.push_back(max_residual_suite("residual-closed-forms", n, tol, root.split(6), residual_forms_trial));
    return results;
}

}  // namespace qmix
