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

#include "qmix/json_io.h"

#include <cmath>
#include <fstream>
#include <sstream>

#include "qmix/error.h"

namespace qmix {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string &msg) {
    throw Error(ErrorKind::ParseError, msg);
}

const json &field(const json &j, const char *name) {
    if (!j.is_object()) {
        parse_fail("expected a JSON object");
    }
    auto it = j.find(name);
    if (it == j.end()) {
        parse_fail(std::string("missing field \"") + name + "\"");
    }
    return *it;
}

double finite_number(const json &j, const char *what) {
    if (!j.is_number()) {
        parse_fail(std::string(what) + " must be a number");
    }
    double v = j.get<double>();
    if (!std::isfinite(v)) {
        parse_fail(std::string(what) + " must be finite");
    }
    return v;
}

std::size_t positive_size(const json &j, const char *what) {
    if (!j.is_number_integer() || j.get<std::int64_t>() <= 0) {
        parse_fail(std::string(what) + " must be a positive integer");
    }
    return j.get<std::size_t>();
}

}  // namespace

json to_json(const ComplexMatrix &m) {
    json entries = json::array();
    for (Complex z : m.entries()) {
        entries.push_back(json::array({z.real(), z.imag()}));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

json to_json(const BlochVector &v) {
    return json{{"dim", v.dim()}, {"coeffs", v.coeffs()}};
}

json to_json(const KrausChannel &ch) {
    json ops = json::array();
    for (const auto &a : ch.operators()) {
        ops.push_back(to_json(a));
    }
    return json{{"kraus", std::move(ops)}};
}

json to_json(const FactorizationReport &r) {
    return json{
        {"rho_a", to_json(r.rho_a.matrix())},
        {"rho_b", to_json(r.rho_b.matrix())},
        {"holistic", to_json(r.holistic)},
        {"residual_norm", r.residual_norm},
        {"factorizable", r.factorizable},
    };
}

json to_json(const CnotReport &r) {
    return json{{"p_total", r.p_total}, {"p_fuzzy", r.p_fuzzy}, {"incidence", r.incidence}};
}

json to_json(const PreservationVerdict &v) {
    return json{
        {"preserved", v.preserved},
        {"family", std::string(family_name(v.family))},
        {"residual_norm", v.residual_norm},
    };
}

ComplexMatrix matrix_from_json(const json &j) {
    std::size_t rows = positive_size(field(j, "rows"), "rows");
    std::size_t cols = positive_size(field(j, "cols"), "cols");
    const json &entries = field(j, "entries");
    if (!entries.is_array() || entries.size() != rows * cols) {
        parse_fail("\"entries\" must hold rows*cols = " + std::to_string(rows * cols) + " pairs");
    }
    std::vector<Complex> values;
    values.reserve(entries.size());
    for (const auto &pair : entries) {
        if (!pair.is_array() || pair.size() != 2) {
            parse_fail("each entry must be a [re, im] pair");
        }
        values.emplace_back(finite_number(pair[0], "real part"), finite_number(pair[1], "imaginary part"));
    }
    return ComplexMatrix(rows, cols, std::move(values));
}

BlochVector bloch_from_json(const json &j) {
    std::size_t dim = positive_size(field(j, "dim"), "dim");
    const json &coeffs = field(j, "coeffs");
    if (!coeffs.is_array()) {
        parse_fail("\"coeffs\" must be an array");
    }
    std::vector<double> values;
    for (const auto &c : coeffs) {
        values.push_back(finite_number(c, "coefficient"));
    }
    if (dim < 2 || values.size() != dim * dim - 1) {
        parse_fail("a dimension-" + std::to_string(dim) + " Bloch vector needs dim^2-1 coefficients");
    }
    return BlochVector(dim, std::move(values));
}

KrausChannel channel_from_json(const json &j, double tol) {
    const json &kraus = field(j, "kraus");
    if (!kraus.is_array()) {
        parse_fail("\"kraus\" must be an array");
    }
    std::vector<ComplexMatrix> ops;
    for (const auto &m : kraus) {
        ops.push_back(matrix_from_json(m));
    }
    return validate_kraus(std::move(ops), tol);
}

json parse_json(const std::string &text) {
    try {
        return json::parse(text);
    } catch (const json::exception &e) {
        parse_fail(e.what());
    }
}

json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        parse_fail("cannot open " + path);
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_json(buffer.str());
}

}  // namespace qmix
