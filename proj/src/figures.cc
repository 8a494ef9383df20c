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

#include "qmix/figures.h"

#include "qmix/cnot_analysis.h"
#include "qmix/error.h"
#include "qmix/fuzzy_pmv.h"

namespace qmix {

namespace {

// i / steps, with the last point pinned to exactly 1.
double grid_point(std::size_t i, std::size_t steps) {
    return i == steps ? 1.0 : static_cast<double>(i) / static_cast<double>(steps);
}

}  // namespace

std::vector<SurfacePoint> cnot_surface(std::size_t steps) {
    if (steps < 2) {
        throw Error(ErrorKind::InvalidArgument, "surface needs at least 2 steps");
    }
    std::vector<SurfacePoint> out;
    out.reserve((steps + 1) * (steps + 1));
    for (std::size_t i = 0; i <= steps; i++) {
        double x = grid_point(i, steps);
        for (std::size_t j = 0; j <= steps; j++) {
            double y = grid_point(j, steps);
            out.push_back({x, y, cnot_polynomial(FuzzyValue(x), FuzzyValue(y)).value()});
        }
    }
    return out;
}

std::vector<WernerPoint> werner_sweep(std::size_t steps) {
    if (steps < 1) {
        throw Error(ErrorKind::InvalidArgument, "Werner sweep needs at least 1 step");
    }
    std::vector<WernerPoint> out;
    out.reserve(steps + 1);
    for (std::size_t i = 0; i <= steps; i++) {
        double alpha = grid_point(i, steps);
        auto r = cnot_report(werner(alpha));
        out.push_back({alpha, r.p_total, r.p_fuzzy, r.incidence});
    }
    return out;
}

}  // namespace qmix
