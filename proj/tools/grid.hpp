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

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace notchdepth::cli {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parses an axis grid. Accepted forms:
///   "start:stop:log10"     10 points per decade, aligned to powers of ten
///   "start:stop:log10:P"   P points per decade
///   "start:stop:step"      linear steps (used for dB axes)
///   "a,b,c"                explicit list
/// Log grids always contain start and stop. Throws UsageError on malformed
/// or empty grids.
std::vector<double> parse_grid(const std::string &text);

/// Rounds a grid to integer snapshot counts, dropping duplicates.
std::vector<double> snapshot_grid(const std::vector<double> &grid);

} // namespace notchdepth::cli
