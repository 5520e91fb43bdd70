// Copyright 2026 The spinsq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "spinsq/grid.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string>

#include "spinsq/error.hpp"

namespace spinsq {

namespace {

double round12(double x) { return std::round(x * 1e12) / 1e12; }

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

double parse_real(std::string_view token) {
    const std::string_view t = trim(token);
    double value = 0.0;
    const auto* end = t.data() + t.size();
    const auto [ptr, ec] = std::from_chars(t.data(), end, value);
    if (t.empty() || ec != std::errc{} || ptr != end || !std::isfinite(value)) {
        throw DomainError("invalid number '" + std::string(token) + "' in grid");
    }
    return value;
}

}  // namespace

std::vector<double> inclusive_range(double start, double stop, double step) {
    if (!(step > 0.0)) throw DomainError("grid step must be positive");
    if (!(stop > start)) throw DomainError("grid range is empty (stop must exceed start)");
    const double span = stop - start;
    const double steps = span / step;
    auto count = static_cast<long long>(std::floor(steps));
    const double rounded = std::round(steps);
    if (std::abs(stop - (start + rounded * step)) <= 1e-12 * std::max(1.0, std::abs(stop))) {
        count = static_cast<long long>(rounded);
    }
    if (count > 10'000'000) throw DomainError("grid has too many points");
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(count) + 1);
    for (long long k = 0; k <= count; ++k) out.push_back(round12(start + static_cast<double>(k) * step));
    return out;
}

std::vector<double> parse_grid(std::string_view text) {
    const std::string_view t = trim(text);
    if (t.empty()) throw DomainError("empty grid");
    if (t.find(':') != std::string_view::npos) {
        const auto first = t.find(':');
        const auto second = t.find(':', first + 1);
        if (second == std::string_view::npos || t.find(':', second + 1) != std::string_view::npos) {
            throw DomainError("range '" + std::string(t) + "' must have the form start:stop:step");
        }
        const double start = parse_real(t.substr(0, first));
        const double stop = parse_real(t.substr(first + 1, second - first - 1));
        const double step = parse_real(t.substr(second + 1));
        try {
            return inclusive_range(start, stop, step);
        } catch (const DomainError& e) {
            throw DomainError(std::string(e.what()) + ": '" + std::string(t) + "'");
        }
    }
    std::vector<double> out;
    std::size_t pos = 0;
    while (true) {
        const auto comma = t.find(',', pos);
        out.push_back(parse_real(t.substr(pos, comma == std::string_view::npos ? t.npos : comma - pos)));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

}  // namespace spinsq
