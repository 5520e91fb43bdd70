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

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "spinsq/channels.hpp"
#include "spinsq/collective_spin.hpp"

namespace spinsq {

// Sweeps always use the tripartite register.
inline constexpr std::size_t kSweepQubits = 3;

// A (theta, phi) is "no squeezing" iff epsilon >= 1 - tol over the grid.
inline constexpr double kNoSqueezeTolerance = 1e-9;

// Superposition weight probed by the alpha-sensitivity scan.
inline constexpr double kProbeAlpha = 0.9;

enum class DirectionMode {
    Given,  // variance minimised perpendicular to the swept (theta, phi)
    Mean,   // ... perpendicular to the state's own mean spin vector
};

struct SweepSpec {
    ChannelKind channel = ChannelKind::AmplitudeDamping;
    std::vector<double> alpha_grid;
    std::vector<double> theta_grid_deg;
    std::vector<double> phi_grid_deg;
    std::vector<double> gamma_t_grid;
    DirectionMode direction_mode = DirectionMode::Given;

    // alpha 0:1:0.1, theta 0:90:30, phi 0:180:30, gamma_t 0:5:0.05.
    static SweepSpec defaults(ChannelKind channel);
};

// Throws DomainError naming the offending grid: empty grids, alpha outside
// [0, 1], angles outside the Direction ranges, gamma_t not strictly
// ascending from 0.
void validate_sweep_spec(const SweepSpec& spec);

struct SweepRecord {
    ChannelKind channel = ChannelKind::AmplitudeDamping;
    double alpha = 0.0;
    double theta_deg = 0.0;
    double phi_deg = 0.0;
    double gamma_t = 0.0;
    double epsilon = 0.0;
    double v_min = 0.0;
    double phi_star_rad = 0.0;
    double jx = 0.0;
    double jy = 0.0;
    double jz = 0.0;
    bool degenerate_mean = false;
};

// Bitwise equality of every field (NaN == NaN when the payloads match).
bool identical(const SweepRecord& a, const SweepRecord& b);

// One record per grid point, ordered by (alpha, theta, phi, gamma_t). In
// Mean mode the angle grids are ignored: one record per (alpha, gamma_t)
// whose theta/phi hold the mean-spin direction, or NaN when degenerate.
// threads == 0 uses the hardware concurrency; output does not depend on it.
std::vector<SweepRecord> run_sweep(const SweepSpec& spec, unsigned threads = 0);

// Single grid point; gamma_t may be any value >= 0. In Mean mode the angles
// are ignored. Throws DomainError for out-of-range inputs.
SweepRecord evaluate_point(ChannelKind channel, double alpha, double theta_deg, double phi_deg,
                           double gamma_t, DirectionMode mode = DirectionMode::Given);

struct NoSqueezeVerdict {
    double theta_deg = 0.0;
    double phi_deg = 0.0;
    bool flagged = false;
    double min_epsilon_over_grid = 0.0;
};

// Groups Given-mode records by (theta, phi), in first-seen order.
std::vector<NoSqueezeVerdict> summarize_no_squeezing(std::span<const SweepRecord> records,
                                                     double tol);

// Requires DirectionMode::Given and tol > 0.
std::vector<NoSqueezeVerdict> detect_no_squeezing(const SweepSpec& spec, double tol,
                                                  unsigned threads = 0);

struct AlphaSummary {
    double alpha = 0.0;
    double min_epsilon = 0.0;  // over the gamma_t grid
    bool unsqueezed = false;   // min_epsilon >= 1 - tol
};

struct AlphaScan {
    Direction direction;
    std::vector<AlphaSummary> per_alpha;
    double probe_min_epsilon = 0.0;  // at kProbeAlpha
    bool probe_unsqueezed = false;
};

// 0, 0.05, ..., 1
std::vector<double> alpha_scan_grid();

AlphaScan alpha_sensitivity_scan(ChannelKind channel, const Direction& dir,
                                 std::span<const double> gamma_t_grid,
                                 double tol = kNoSqueezeTolerance, unsigned threads = 0);

// Same scan for many directions from a single sweep.
std::vector<AlphaScan> alpha_sensitivity_scans(ChannelKind channel,
                                               std::span<const Direction> directions,
                                               std::span<const double> gamma_t_grid,
                                               double tol = kNoSqueezeTolerance,
                                               unsigned threads = 0);

// Squeezed at gamma_t = 0 and still squeezed (epsilon < 1) at every later
// grid point.
struct PersistenceSummary {
    std::size_t series = 0;      // (alpha, theta, phi) series examined
    std::size_t candidates = 0;  // epsilon(0) < 1
    std::size_t persistent = 0;
    struct Example {
        double alpha = 0.0;
        double theta_deg = 0.0;
        double phi_deg = 0.0;
        double epsilon_initial = 0.0;
        double epsilon_final = 0.0;
        double max_epsilon_after_start = 0.0;
    };
    std::optional<Example> strongest;  // persistent series with lowest final epsilon
};

// Expects Given-mode records in run_sweep order.
PersistenceSummary find_persistent_squeezing(std::span<const SweepRecord> records);

}  // namespace spinsq
