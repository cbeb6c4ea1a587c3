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

#include "grid.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

namespace notchdepth::cli {

namespace {

double parse_number(const std::string &token, const std::string &grid) {
    char *end = nullptr;
    const double value = std::strtod(token.c_str(), &end);
    if (token.empty() || end != token.c_str() + token.size() || !std::isfinite(value))
        throw UsageError("bad number '" + token + "' in grid '" + grid + "'");
    return value;
}

std::vector<std::string> split(const std::string &text, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep))
        parts.push_back(item);
    if (!text.empty() && text.back() == sep)
        parts.emplace_back();
    return parts;
}

std::vector<double> log_grid(double start, double stop, int per_decade, const std::string &grid) {
    if (!(start > 0.0) || !(stop >= start))
        throw UsageError("log grid '" + grid + "' needs 0 < start <= stop");
    if (per_decade < 1)
        throw UsageError("log grid '" + grid + "' needs at least one point per decade");
    std::vector<double> out{start};
    const double tol = 1e-9;
    const auto first = static_cast<long>(std::floor(std::log10(start) * per_decade)) + 1;
    for (long j = first;; ++j) {
        const double v = std::pow(10.0, static_cast<double>(j) / per_decade);
        if (v >= stop * (1.0 - tol))
            break;
        if (v > start * (1.0 + tol))
            out.push_back(v);
    }
    if (stop > start)
        out.push_back(stop);
    return out;
}

} // namespace

std::vector<double> parse_grid(const std::string &text) {
    if (text.empty())
        throw UsageError("empty grid");
    if (text.find(':') == std::string::npos) {
        std::vector<double> out;
        for (const auto &tok : split(text, ','))
            out.push_back(parse_number(tok, text));
        for (std::size_t i = 1; i < out.size(); ++i)
            if (!(out[i] > out[i - 1]))
                throw UsageError("grid '" + text + "' must be strictly increasing");
        return out;
    }

    const auto parts = split(text, ':');
    if (parts.size() < 3 || parts.size() > 4)
        throw UsageError("grid '" + text + "' must look like start:stop:step or start:stop:log10");
    const double start = parse_number(parts[0], text);
    const double stop = parse_number(parts[1], text);
    if (parts[2] == "log10") {
        const int per_decade = parts.size() == 4 ? static_cast<int>(parse_number(parts[3], text)) : 10;
        return log_grid(start, stop, per_decade, text);
    }
    if (parts.size() != 3)
        throw UsageError("grid '" + text + "' has too many fields");
    const double step = parse_number(parts[2], text);
    if (!(step > 0.0))
        throw UsageError("grid '" + text + "' needs a positive step");
    if (stop < start)
        throw UsageError("grid '" + text + "' is empty (stop < start)");
    std::vector<double> out;
    const auto count = static_cast<long>(std::floor((stop - start) / step + 1e-9));
    for (long k = 0; k <= count; ++k)
        out.push_back(start + static_cast<double>(k) * step);
    return out;
}

std::vector<double> snapshot_grid(const std::vector<double> &grid) {
    std::vector<double> out;
    for (double v : grid) {
        const double rounded = std::round(v);
        if (rounded < 1.0)
            throw UsageError("snapshot counts must be at least 1");
        if (out.empty() || rounded > out.back())
            out.push_back(rounded);
    }
    return out;
}

} // namespace notchdepth::cli
