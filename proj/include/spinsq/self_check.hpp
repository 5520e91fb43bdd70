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

#include <string>
#include <vector>

namespace spinsq {

struct CheckResult {
    std::string name;
    bool passed = false;
    double deviation = 0.0;
    double threshold = 0.0;
    std::string detail;
};

struct CheckOptions {
    // Adds the amplitude-damping set with sqrt(e^{+gt}) in the first operator
    // to the completeness check, which must then fail.
    bool inject_growing_amplitude_kraus = false;
};

// Embedded invariant suite: Kraus completeness over gamma_t in [0, 5],
// closed-form vs brute-force perpendicular variance, coherent-state
// epsilon = 1, identity channel at gamma_t = 0, depolarizing fixed point.
std::vector<CheckResult> run_self_checks(const CheckOptions& options = {});

}  // namespace spinsq
