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

#include "qmix/cnot_analysis.h"

#include <cmath>
#include <string>

#include "qmix/error.h"
#include "qmix/quantum_operation.h"

namespace qmix {

namespace {

void require_side(const DensityOperator &rho, std::size_t side, const char *what) {
    if (rho.dim() != side) {
        throw Error(
            ErrorKind::DimensionMismatch,
            std::string(what) + " must be " + std::to_string(side) + "x" + std::to_string(side) + ", got side " +
                std::to_string(rho.dim()));
    }
}

double diag(const DensityOperator &rho, std::size_t i) {
    return rho(i, i).real();
}

}  // namespace

CnotReport cnot_report(const DensityOperator &rho) {
    require_side(rho, 4, "cnot_report input");
    double r11 = diag(rho, 0);
    double r22 = diag(rho, 1);
    double r33 = diag(rho, 2);
    double r44 = diag(rho, 3);
    return CnotReport{
        r22 + r33,
        (r11 + r22) * (r22 + r44) + (r11 + r33) * (r33 + r44),
        2 * (r22 * r33 - r11 * r44),
    };
}

CnotReport cnot_report_by_channel(const DensityOperator &rho) {
    require_side(rho, 4, "cnot_report input");
    const auto &cnot = cnot_channel();
    auto [rho_1, rho_2] = reduced_states(rho, 2, 2);
    DensityOperator product_state(kron(rho_1.matrix(), rho_2.matrix()));
    auto correction = apply(cnot, holistic_term(rho, 2, 2));
    return CnotReport{
        probability(apply(cnot, rho)),
        probability(apply(cnot, product_state)),
        trace(matmul(truth_projector(2).matrix(), correction)).real(),
    };
}

DensityOperator werner(double alpha) {
    if (!(alpha >= 0 && alpha <= 1)) {
        throw Error(ErrorKind::OutOfRange, "Werner parameter " + std::to_string(alpha) + " outside [0, 1]");
    }
    double lo = (1 - alpha) / 4;
    double hi = (1 + alpha) / 4;
    double off = -alpha / 2;
    return DensityOperator(ComplexMatrix{
        {lo, 0, 0, 0},
        {0, hi, off, 0},
        {0, off, hi, 0},
        {0, 0, 0, lo},
    });
}

ComplexMatrix residual_entries(const DensityOperator &rho, const DensityOperator &sigma) {
    require_side(rho, 2, "control state");
    require_side(sigma, 2, "target state");
    const double a1 = rho(0, 0).real();
    const Complex a = rho(0, 1);
    const double b1 = sigma(0, 0).real();
    const Complex b = sigma(0, 1);
    const double re_b = b.real();
    const double im_b = b.imag();
    const Complex i{0, 1};

    const Complex x11 = a1 * (1 - a1) * (2 * b1 - 1);
    const Complex x12 = -2.0 * i * a1 * (a1 - 1) * im_b;
    const Complex x13 = -a * (std::conj(b) + 2 * re_b * (a1 * (2 * b1 - 1) - b1));
    const Complex x14 = a * (b1 - 2 * re_b * (std::conj(b) + 2.0 * i * a1 * im_b));
    const Complex x23 = -a * (b1 - 1 + 2 * re_b * (b - 2.0 * i * a1 * im_b));
    const Complex x24 = a * (std::conj(b) - 2 * re_b * (a1 + b1 - 2 * a1 * b1));
    const Complex x34 = 2.0 * i * a1 * im_b * (a1 - 1);

    return ComplexMatrix{
        {x11, x12, x13, x14},
        {std::conj(x12), -x11, x23, x24},
        {std::conj(x13), std::conj(x23), -x11, x34},
        {std::conj(x14), std::conj(x24), std::conj(x34), x11},
    };
}

std::string_view family_name(PreservationFamily family) {
    switch (family) {
        case PreservationFamily::DiagonalControlHalfDiagTarget:
            return "DiagonalControlHalfDiagTarget";
        case PreservationFamily::ControlIsP0:
            return "ControlIsP0";
        case PreservationFamily::ControlIsP1:
            return "ControlIsP1";
        case PreservationFamily::TargetIsPlusMinus:
            return "TargetIsPlusMinus";
        case PreservationFamily::NotPreserved:
            return "NotPreserved";
    }
    return "NotPreserved";
}

PreservationVerdict classify_preservation(const DensityOperator &rho, const DensityOperator &sigma, double tol) {
    require_side(rho, 2, "control state");
    require_side(sigma, 2, "target state");
    const double a1 = rho(0, 0).real();
    const Complex a = rho(0, 1);
    const double b1 = sigma(0, 0).real();
    const Complex b = sigma(0, 1);

    DensityOperator output = apply(cnot_channel(), DensityOperator(kron(rho.matrix(), sigma.matrix())));
    auto report = is_factorizable(output, 2, 2, tol);
    if (!report.factorizable) {
        return {false, PreservationFamily::NotPreserved, report.residual_norm};
    }

    PreservationFamily family = PreservationFamily::NotPreserved;
    bool control_diagonal = std::abs(a) <= tol;
    bool target_half_diag = std::abs(b1 - 0.5) <= tol;
    if (control_diagonal && std::abs(a1 - 1) <= tol) {
        family = PreservationFamily::ControlIsP0;
    } else if (control_diagonal && std::abs(a1) <= tol) {
        family = PreservationFamily::ControlIsP1;
    } else if (target_half_diag && (std::abs(b - 0.5) <= tol || std::abs(b + 0.5) <= tol)) {
        family = PreservationFamily::TargetIsPlusMinus;
    } else if (control_diagonal && target_half_diag && std::abs(b.imag()) <= tol) {
        family = PreservationFamily::DiagonalControlHalfDiagTarget;
    }
    return {true, family, report.residual_norm};
}

}  // namespace qmix
