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

#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spinsq/sweep.hpp"

namespace spinsq {

enum class OutputFormat { Csv, Json };

inline constexpr std::string_view kCsvHeader =
    "channel,alpha,theta_deg,phi_deg,gamma_t,epsilon,vmin,phi_star_rad,jx,jy,jz,degenerate_mean";

// %.17g, which round-trips every finite double; NaN prints as "nan".
std::string format_real(double value);

void write_csv(std::ostream& out, std::span<const SweepRecord> records);
void write_json(std::ostream& out, std::span<const SweepRecord> records);

// Parsers for the two formats above. Throw DomainError on malformed input.
std::vector<SweepRecord> read_csv(std::istream& in);
std::vector<SweepRecord> read_json(std::istream& in);

// Serialises to a temporary file beside `path`, then renames it into place,
// so a failure never leaves a partial file. Throws IoError with the path.
void emit_results(std::span<const SweepRecord> records, OutputFormat format,
                  const std::string& path);

// Same atomic write for arbitrary text.
void write_text_file(const std::string& path, std::string_view text);

}  // namespace spinsq
