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

namespace qmix {

/// A truth value in [0, 1].
class FuzzyValue {
   public:
    /// Values within 1e-12 outside [0, 1] are clamped; anything farther out
    /// throws OutOfRange.
    explicit FuzzyValue(double v);

    double value() const noexcept {
        return v_;
    }

    bool operator==(const FuzzyValue &) const = default;

   private:
    double v_;
};

/// Product-logic conjunction x·y.
FuzzyValue product(FuzzyValue x, FuzzyValue y);

/// Łukasiewicz negation 1 − x.
FuzzyValue luk_neg(FuzzyValue x);

/// Łukasiewicz truncated sum min(x + y, 1).
FuzzyValue luk_sum(FuzzyValue x, FuzzyValue y);

/// (¬x · y) ⊕ (¬y · x), the probability that CNOT outputs truth on a product
/// input whose factors have truth probabilities x and y. The truncation
/// never binds on [0, 1]², so this equals (1 − x)y + (1 − y)x.
FuzzyValue cnot_polynomial(FuzzyValue x, FuzzyValue y);

}  // namespace qmix
