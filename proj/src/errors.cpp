// SPDX-License-Identifier: Apache-2.0
//
// notchdepth: notch depth simulation and models for diagonally loaded MVDR beamformers
// Copyright (C) 2026 The notchdepth authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "notchdepth/errors.hpp"

namespace notchdepth {

const char *to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::invalid_direction:
        return "invalid direction";
    case ErrorCode::dimension:
        return "dimension mismatch";
    case ErrorCode::invalid_parameter:
        return "invalid parameter";
    case ErrorCode::singular_matrix:
        return "singular matrix";
    case ErrorCode::invalid_input:
        return "invalid input";
    case ErrorCode::degenerate_geometry:
        return "degenerate geometry";
    }
    return "unknown error";
}

} // namespace notchdepth
