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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "spinsq/sweep.hpp"

namespace spinsq {

// (theta, phi) pair in degrees.
struct AnglePair {
    double theta_deg = 0.0;
    double phi_deg = 0.0;
};

// Published reproduction targets the report compares against.
struct ReferenceClaims {
    // Directions reported as never squeezing for amplitude and phase damping.
    std::vector<AnglePair> no_squeezing_rows;
    // Directions along z (theta = 0) at which depolarizing noise is reported
    // to squeeze for every alpha.
    std::vector<AnglePair> depolarizing_squeezing_rows;
    double probe_alpha = kProbeAlpha;
};

ReferenceClaims reference_claims();

// Everything computed for one channel kind.
struct ChannelFindings {
    ChannelKind channel = ChannelKind::AmplitudeDamping;
    double tol = kNoSqueezeTolerance;
    std::vector<NoSqueezeVerdict> verdicts;
    std::vector<AlphaScan> alpha_scans;
    std::optional<PersistenceSummary> persistence;  // depolarizing kinds only
};

// Runs detect_no_squeezing over `base`'s grids, the alpha-sensitivity scan
// at every (theta, phi) of `base` and, for the depolarizing kinds, the
// persistence analysis. `base.channel` is replaced by `channel`.
ChannelFindings study_channel(ChannelKind channel, const SweepSpec& base,
                              double tol = kNoSqueezeTolerance, unsigned threads = 0);

// Plain-text report with one MATCH / MISMATCH / NOT-RUN line per claim item.
// Every claim section is always present.
std::string discrepancy_report(std::span<const ChannelFindings> findings,
                               const ReferenceClaims& claims = reference_claims());

}  // namespace spinsq
