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
#include <cstdint>
#include <string>
#include <vector>

#include "qmix/complex_linalg.h"

namespace qmix {

struct VerifyConfig {
    std::uint64_t seed = 42;
    std::size_t samples = 1000;
    double tolerance = kDefaultTolerance;
};

/// Outcome of one randomized property suite. For most suites `metric` is
/// the largest residual seen; for the completeness suite it is the smallest
/// (a pass there requires every residual to stay large).
struct SuiteResult {
    std::string name;
    std::string metric_name;
    std::size_t passed = 0;
    std::size_t total = 0;
    double metric = 0;

    bool ok() const {
        return total > 0 && passed == total;
    }
};

/// Runs every suite with its own stream split from config.seed. Output is a
/// pure function of the config.
std::vector<SuiteResult> run_verification(const VerifyConfig &config);

}  // namespace qmix
