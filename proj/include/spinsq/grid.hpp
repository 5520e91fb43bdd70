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

#include <string_view>
#include <vector>

namespace spinsq {

// start, start + step, ... up to stop. stop is included when (stop - start)
// is an integer multiple of step to within 1e-12. Values are rounded to 12
// decimals so decimal steps land on the nearest double. Requires step > 0
// and stop > start; throws DomainError otherwise.
std::vector<double> inclusive_range(double start, double stop, double step);

// Either `start:stop:step` or a comma separated list of reals. Throws
// DomainError quoting the offending token.
std::vector<double> parse_grid(std::string_view text);

}  // namespace spinsq
