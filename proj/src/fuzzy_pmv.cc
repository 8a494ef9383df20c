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

#include "qmix/fuzzy_pmv.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "qmix/error.h"

namespace qmix {

namespace {
constexpr double kClampSlack = 1e-12;
}

FuzzyValue::FuzzyValue(double v) {
    if (!std::isfinite(v) || v < -kClampSlack || v > 1 + kClampSlack) {
        throw Error(ErrorKind::OutOfRange, "fuzzy value " + std::to_string(v) + " outside [0, 1]");
    }
    v_ = std::clamp(v, 0.0, 1.0);
}

FuzzyValue product(FuzzyValue x, FuzzyValue y) {
    return FuzzyValue(x.value() * y.value());
}

FuzzyValue luk_neg(FuzzyValue x) {
    return FuzzyValue(1 - x.value());
}

FuzzyValue luk_sum(FuzzyValue x, FuzzyValue y) {
    return FuzzyValue(std::min(x.value() + y.value(), 1.0));
}

FuzzyValue cnot_polynomial(FuzzyValue x, FuzzyValue y) {
    return luk_sum(product(luk_neg(x), y), product(luk_neg(y), x));
}

}  // namespace qmix
