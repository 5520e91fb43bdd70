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

#include "spinsq/sweep.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "parallel.hpp"
#include "spinsq/error.hpp"
#include "spinsq/grid.hpp"

namespace spinsq {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct LabelledDirection {
    double theta_deg;
    double phi_deg;
    Vec3 normal;
};

DensityMatrix evolve(ChannelKind channel, double alpha, double gamma_t) {
    const DensityMatrix rho0 = density_from_pure(superposition_state({alpha}));
    return apply_channel_all_qubits(rho0, make_kraus(channel, {gamma_t}), kSweepQubits);
}

// Given-mode evaluation over an explicit direction list. Records are laid
// out as [alpha][direction][gamma_t].
std::vector<SweepRecord> evaluate_given(ChannelKind channel, std::span<const double> alphas,
                                        std::span<const LabelledDirection> directions,
                                        std::span<const double> gammas, unsigned threads) {
    const SpinEnsemble ensemble(kSweepQubits);
    const std::size_t nd = directions.size();
    const std::size_t ng = gammas.size();
    std::vector<SweepRecord> records(alphas.size() * nd * ng);

    detail::parallel_for(alphas.size() * ng, threads, [&](std::size_t task) {
        const std::size_t ia = task / ng;
        const std::size_t ig = task % ng;
        const SpinMoments moments =
            spin_moments(evolve(channel, alphas[ia], gammas[ig]), ensemble);
        for (std::size_t id = 0; id < nd; ++id) {
            const auto& dir = directions[id];
            const SqueezingResult r = squeezing_from_moments(moments, dir.normal, kSweepQubits);
            SweepRecord& rec = records[(ia * nd + id) * ng + ig];
            rec = {channel,      alphas[ia], dir.theta_deg, dir.phi_deg,      gammas[ig],
                   r.epsilon,    r.v_min,    r.phi_star_rad, r.mean_spin.jx, r.mean_spin.jy,
                   r.mean_spin.jz, false};
        }
    });
    return records;
}

std::vector<SweepRecord> evaluate_mean(ChannelKind channel, std::span<const double> alphas,
                                       std::span<const double> gammas, unsigned threads) {
    const SpinEnsemble ensemble(kSweepQubits);
    const std::size_t ng = gammas.size();
    std::vector<SweepRecord> records(alphas.size() * ng);

    detail::parallel_for(records.size(), threads, [&](std::size_t task) {
        const std::size_t ia = task / ng;
        const std::size_t ig = task % ng;
        const SpinMoments moments =
            spin_moments(evolve(channel, alphas[ia], gammas[ig]), ensemble);
        SweepRecord& rec = records[task];
        rec.channel = channel;
        rec.alpha = alphas[ia];
        rec.gamma_t = gammas[ig];
        rec.jx = moments.mean.jx;
        rec.jy = moments.mean.jy;
        rec.jz = moments.mean.jz;
        const auto dir = mean_spin_direction(moments.mean);
        if (!dir) {
            rec.theta_deg = rec.phi_deg = rec.epsilon = rec.v_min = rec.phi_star_rad = kNaN;
            rec.degenerate_mean = true;
            return;
        }
        const Vec3 m = moments.mean.vector();
        const SqueezingResult r = squeezing_from_moments(moments, (1.0 / norm(m)) * m, kSweepQubits);
        rec.theta_deg = dir->theta_deg();
        rec.phi_deg = dir->phi_deg();
        rec.epsilon = r.epsilon;
        rec.v_min = r.v_min;
        rec.phi_star_rad = r.phi_star_rad;
    });
    return records;
}

void require_nonempty(const std::vector<double>& grid, const char* name) {
    if (grid.empty()) throw DomainError(std::string(name) + " grid is empty");
}

}  // namespace

SweepSpec SweepSpec::defaults(ChannelKind channel) {
    SweepSpec spec;
    spec.channel = channel;
    spec.alpha_grid = inclusive_range(0.0, 1.0, 0.1);
    spec.theta_grid_deg = inclusive_range(0.0, 90.0, 30.0);
    spec.phi_grid_deg = inclusive_range(0.0, 180.0, 30.0);
    spec.gamma_t_grid = inclusive_range(0.0, 5.0, 0.05);
    return spec;
}

void validate_sweep_spec(const SweepSpec& spec) {
    require_nonempty(spec.alpha_grid, "alpha");
    require_nonempty(spec.theta_grid_deg, "theta");
    require_nonempty(spec.phi_grid_deg, "phi");
    require_nonempty(spec.gamma_t_grid, "gamma_t");
    for (double a : spec.alpha_grid) {
        if (!(a >= 0.0 && a <= 1.0)) {
            throw DomainError("alpha grid value " + std::to_string(a) + " outside [0, 1]");
        }
    }
    for (double t : spec.theta_grid_deg) {
        if (!(t >= 0.0 && t <= 180.0)) {
            throw DomainError("theta grid value " + std::to_string(t) + " outside [0, 180]");
        }
    }
    for (double p : spec.phi_grid_deg) {
        if (!(p >= 0.0 && p < 360.0)) {
            throw DomainError("phi grid value " + std::to_string(p) + " outside [0, 360)");
        }
    }
    if (spec.gamma_t_grid.front() != 0.0) throw DomainError("gamma_t grid must start at 0");
    for (std::size_t i = 1; i < spec.gamma_t_grid.size(); ++i) {
        const double g = spec.gamma_t_grid[i];
        if (!std::isfinite(g) || !(g > spec.gamma_t_grid[i - 1])) {
            throw DomainError("gamma_t grid must be finite and strictly ascending");
        }
    }
}

bool identical(const SweepRecord& a, const SweepRecord& b) {
    const auto same = [](double x, double y) {
        return std::bit_cast<std::uint64_t>(x) == std::bit_cast<std::uint64_t>(y);
    };
    return a.channel == b.channel && same(a.alpha, b.alpha) && same(a.theta_deg, b.theta_deg) &&
           same(a.phi_deg, b.phi_deg) && same(a.gamma_t, b.gamma_t) &&
           same(a.epsilon, b.epsilon) && same(a.v_min, b.v_min) &&
           same(a.phi_star_rad, b.phi_star_rad) && same(a.jx, b.jx) && same(a.jy, b.jy) &&
           same(a.jz, b.jz) && a.degenerate_mean == b.degenerate_mean;
}

std::vector<SweepRecord> run_sweep(const SweepSpec& spec, unsigned threads) {
    validate_sweep_spec(spec);
    if (spec.direction_mode == DirectionMode::Mean) {
        return evaluate_mean(spec.channel, spec.alpha_grid, spec.gamma_t_grid, threads);
    }

    std::vector<LabelledDirection> directions;
    directions.reserve(spec.theta_grid_deg.size() * spec.phi_grid_deg.size());
    for (double t : spec.theta_grid_deg)
        for (double p : spec.phi_grid_deg) directions.push_back({t, p, Direction(t, p).unit_vector()});
    return evaluate_given(spec.channel, spec.alpha_grid, directions, spec.gamma_t_grid, threads);
}

SweepRecord evaluate_point(ChannelKind channel, double alpha, double theta_deg, double phi_deg,
                           double gamma_t, DirectionMode mode) {
    const double alphas[] = {alpha};
    const double gammas[] = {gamma_t};
    if (mode == DirectionMode::Mean) return evaluate_mean(channel, alphas, gammas, 1).front();
    const Direction dir(theta_deg, phi_deg);
    const LabelledDirection dirs[] = {{theta_deg, phi_deg, dir.unit_vector()}};
    return evaluate_given(channel, alphas, dirs, gammas, 1).front();
}

std::vector<NoSqueezeVerdict> summarize_no_squeezing(std::span<const SweepRecord> records,
                                                     double tol) {
    std::vector<NoSqueezeVerdict> verdicts;
    for (const auto& r : records) {
        if (r.degenerate_mean) continue;
        auto it = std::find_if(verdicts.begin(), verdicts.end(), [&](const NoSqueezeVerdict& v) {
            return v.theta_deg == r.theta_deg && v.phi_deg == r.phi_deg;
        });
        if (it == verdicts.end()) {
            verdicts.push_back({r.theta_deg, r.phi_deg, false, r.epsilon});
        } else {
            it->min_epsilon_over_grid = std::min(it->min_epsilon_over_grid, r.epsilon);
        }
    }
    for (auto& v : verdicts) v.flagged = v.min_epsilon_over_grid >= 1.0 - tol;
    return verdicts;
}

std::vector<NoSqueezeVerdict> detect_no_squeezing(const SweepSpec& spec, double tol,
                                                  unsigned threads) {
    if (!(tol > 0.0)) throw DomainError("no-squeezing tolerance must be positive");
    if (spec.direction_mode != DirectionMode::Given) {
        throw DomainError("no-squeezing detection needs the given direction mode");
    }
    return summarize_no_squeezing(run_sweep(spec, threads), tol);
}

std::vector<double> alpha_scan_grid() {
    std::vector<double> grid;
    for (int k = 0; k <= 20; ++k) grid.push_back(static_cast<double>(k) / 20.0);
    return grid;
}

std::vector<AlphaScan> alpha_sensitivity_scans(ChannelKind channel,
                                               std::span<const Direction> directions,
                                               std::span<const double> gamma_t_grid, double tol,
                                               unsigned threads) {
    if (!(tol > 0.0)) throw DomainError("alpha scan tolerance must be positive");
    SweepSpec check = SweepSpec::defaults(channel);
    check.gamma_t_grid.assign(gamma_t_grid.begin(), gamma_t_grid.end());
    validate_sweep_spec(check);

    const std::vector<double> alphas = alpha_scan_grid();
    std::vector<LabelledDirection> labelled;
    for (const auto& d : directions) labelled.push_back({d.theta_deg(), d.phi_deg(), d.unit_vector()});
    const auto records = evaluate_given(channel, alphas, labelled, gamma_t_grid, threads);

    const std::size_t nd = labelled.size();
    const std::size_t ng = gamma_t_grid.size();
    std::vector<AlphaScan> scans;
    for (std::size_t id = 0; id < nd; ++id) {
        AlphaScan scan;
        scan.direction = directions[id];
        for (std::size_t ia = 0; ia < alphas.size(); ++ia) {
            double lowest = std::numeric_limits<double>::infinity();
            for (std::size_t ig = 0; ig < ng; ++ig) {
                lowest = std::min(lowest, records[(ia * nd + id) * ng + ig].epsilon);
            }
            const bool unsqueezed = lowest >= 1.0 - tol;
            scan.per_alpha.push_back({alphas[ia], lowest, unsqueezed});
            if (std::abs(alphas[ia] - kProbeAlpha) < 1e-12) {
                scan.probe_min_epsilon = lowest;
                scan.probe_unsqueezed = unsqueezed;
            }
        }
        scans.push_back(std::move(scan));
    }
    return scans;
}

AlphaScan alpha_sensitivity_scan(ChannelKind channel, const Direction& dir,
                                 std::span<const double> gamma_t_grid, double tol,
                                 unsigned threads) {
    const Direction dirs[] = {dir};
    return alpha_sensitivity_scans(channel, dirs, gamma_t_grid, tol, threads).front();
}

PersistenceSummary find_persistent_squeezing(std::span<const SweepRecord> records) {
    PersistenceSummary summary;
    std::size_t begin = 0;
    while (begin < records.size()) {
        const auto& head = records[begin];
        std::size_t end = begin + 1;
        while (end < records.size() && records[end].alpha == head.alpha &&
               records[end].theta_deg == head.theta_deg && records[end].phi_deg == head.phi_deg) {
            ++end;
        }
        ++summary.series;
        if (!head.degenerate_mean && head.epsilon < 1.0 && end - begin > 1) {
            ++summary.candidates;
            double worst = -std::numeric_limits<double>::infinity();
            bool holds = true;
            for (std::size_t i = begin + 1; i < end; ++i) {
                worst = std::max(worst, records[i].epsilon);
                holds = holds && !records[i].degenerate_mean && records[i].epsilon < 1.0;
            }
            if (holds) {
                ++summary.persistent;
                const double final_eps = records[end - 1].epsilon;
                if (!summary.strongest || final_eps < summary.strongest->epsilon_final) {
                    summary.strongest = PersistenceSummary::Example{
                        head.alpha, head.theta_deg, head.phi_deg, head.epsilon, final_eps, worst};
                }
            }
        }
        begin = end;
    }
    return summary;
}

}  // namespace spinsq
