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
#include <vector>

namespace qmix {

struct SurfacePoint {
    double x;
    double y;
    double p;
};

/// cnot_polynomial sampled on the uniform (steps+1)×(steps+1) grid of
/// [0, 1]², x-major. Throws InvalidArgument for steps < 2.
std::vector<SurfacePoint> cnot_surface(std::size_t steps);

struct WernerPoint {
    double alpha;
    double p_total;
    double p_fuzzy;
    double incidence;
};

/// cnot_report of werner(α) for α on the uniform (steps+1)-point grid of
/// [0, 1]. Throws InvalidArgument for steps < 1.
std::vector<WernerPoint> werner_sweep(std::size_t steps);

}  // namespace qmix
