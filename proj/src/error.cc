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

#include "qmix/error.h"

namespace qmix {

std::string_view error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DimensionMismatch:
            return "DimensionMismatch";
        case ErrorKind::NotSquare:
            return "NotSquare";
        case ErrorKind::NotHermitian:
            return "NotHermitian";
        case ErrorKind::InvalidDimension:
            return "InvalidDimension";
        case ErrorKind::NonRealCoefficient:
            return "NonRealCoefficient";
        case ErrorKind::NotDensity:
            return "NotDensity";
        case ErrorKind::IncompleteKraus:
            return "IncompleteKraus";
        case ErrorKind::ShapeMismatch:
            return "ShapeMismatch";
        case ErrorKind::NotUnitary:
            return "NotUnitary";
        case ErrorKind::NotQubitDimension:
            return "NotQubitDimension";
        case ErrorKind::OutOfRange:
            return "OutOfRange";
        case ErrorKind::NonFinite:
            return "NonFinite";
        case ErrorKind::ParseError:
            return "ParseError";
        case ErrorKind::InvalidArgument:
            return "InvalidArgument";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string &message)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {
}

}  // namespace qmix
