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

#include <string>

#include "json.hpp"
#include "qmix/cnot_analysis.h"
#include "qmix/complex_linalg.h"
#include "qmix/density_state.h"
#include "qmix/pauli_bloch.h"
#include "qmix/quantum_operation.h"

namespace qmix {

// Wire formats:
//   matrix   {"rows": r, "cols": c, "entries": [[re, im], ...]}   (row-major)
//   bloch    {"dim": n, "coeffs": [s1, ...]}
//   channel  {"kraus": [matrix, ...]}
//   report   {"rho_a", "rho_b", "holistic", "residual_norm", "factorizable"}
//   cnot     {"p_total", "p_fuzzy", "incidence"}
//   verdict  {"preserved", "family", "residual_norm"}
// Parsing failures throw Error(ParseError); non-finite numbers are rejected.

nlohmann::json to_json(const ComplexMatrix &m);
nlohmann::json to_json(const BlochVector &v);
nlohmann::json to_json(const KrausChannel &ch);
nlohmann::json to_json(const FactorizationReport &r);
nlohmann::json to_json(const CnotReport &r);
nlohmann::json to_json(const PreservationVerdict &v);

ComplexMatrix matrix_from_json(const nlohmann::json &j);
BlochVector bloch_from_json(const nlohmann::json &j);
KrausChannel channel_from_json(const nlohmann::json &j, double tol = kDefaultTolerance);

/// Parses text; throws ParseError on malformed JSON.
nlohmann::json parse_json(const std::string &text);

/// Reads and parses a file; throws ParseError if it cannot be read.
nlohmann::json read_json_file(const std::string &path);

}  // namespace qmix
