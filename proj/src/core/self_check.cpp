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

#include "spinsq/self_check.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <random>

#include "spinsq/channels.hpp"
#include "spinsq/collective_spin.hpp"
#include "spinsq/grid.hpp"
#include "spinsq/state.hpp"

namespace spinsq {

namespace {

constexpr std::size_t kQubits = 3;

std::string describe(const char* fmt, double value) {
    char buf[160];
    std::snprintf(buf, sizeof buf, fmt, value);
    return buf;
}

CheckResult make_result(std::string name, double deviation, double threshold, std::string detail) {
    return {std::move(name), deviation < threshold, deviation, threshold, std::move(detail)};
}

DensityMatrix random_density(std::mt19937_64& rng, std::size_t dim) {
    std::normal_distribution<double> gauss;
    ComplexMatrix g(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) g(i, j) = {gauss(rng), gauss(rng)};
    ComplexMatrix m = g * g.adjoint();
    m *= 1.0 / m.trace().real();
    return DensityMatrix::from_matrix(std::move(m));
}

Direction random_direction(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double theta = std::acos(std::clamp(1.0 - 2.0 * u(rng), -1.0, 1.0)) * 180.0 / std::numbers::pi;
    double phi = 360.0 * u(rng);
    if (phi >= 360.0) phi = 0.0;
    return {theta, phi};
}

// Var(J(phi)) built from the explicit operator J(phi) = cos(phi) J_e1 + sin(phi) J_e2.
double explicit_variance(const DensityMatrix& rho, const SpinEnsemble& ens, const Vec3& e1,
                         const Vec3& e2, double phi) {
    const Vec3 n = std::cos(phi) * e1 + std::sin(phi) * e2;
    ComplexMatrix jn = n.x * ens.op(Axis::X);
    jn += n.y * ens.op(Axis::Y);
    jn += n.z * ens.op(Axis::Z);
    const double mean = expectation(rho, jn);
    return expectation(rho, jn * jn) - mean * mean;
}

double brute_force_min(const DensityMatrix& rho, const SpinEnsemble& ens, const Vec3& e1,
                       const Vec3& e2) {
    constexpr int kSteps = 3600;
    const double step = std::numbers::pi / kSteps;
    int best = 0;
    double best_value = explicit_variance(rho, ens, e1, e2, 0.0);
    for (int k = 1; k < kSteps; ++k) {
        const double v = explicit_variance(rho, ens, e1, e2, k * step);
        if (v < best_value) {
            best_value = v;
            best = k;
        }
    }
    // Golden-section refinement inside the bracketing grid cells.
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = (best - 1) * step;
    double hi = (best + 1) * step;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = explicit_variance(rho, ens, e1, e2, x1);
    double f2 = explicit_variance(rho, ens, e1, e2, x2);
    for (int it = 0; it < 80; ++it) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = explicit_variance(rho, ens, e1, e2, x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = explicit_variance(rho, ens, e1, e2, x2);
        }
    }
    return std::min({best_value, f1, f2});
}

DensityMatrix aligned_product_state(const Direction& dir) {
    const double t = dir.theta_deg() * std::numbers::pi / 180.0;
    const double p = dir.phi_deg() * std::numbers::pi / 180.0;
    const Complex up = std::cos(t / 2.0);
    const Complex down = std::polar(std::sin(t / 2.0), p);
    std::vector<Complex> amps(8);
    for (std::size_t idx = 0; idx < 8; ++idx) {
        Complex a = 1.0;
        for (std::size_t q = 0; q < kQubits; ++q) a *= ((idx >> q) & 1u) ? down : up;
        amps[idx] = a;
    }
    return density_from_pure(PureState(std::move(amps)));
}

CheckResult check_completeness(const CheckOptions& options) {
    double worst = 0.0;
    std::string where = "all channels";
    for (double g : inclusive_range(0.0, 5.0, 0.1)) {
        for (ChannelKind kind : kAllChannels) {
            const double d = validate_kraus(make_kraus(kind, {g})).completeness_deviation;
            if (d > worst) {
                worst = d;
                where = std::string(channel_name(kind)) + describe(" at gamma_t = %g", g);
            }
        }
        if (options.inject_growing_amplitude_kraus) {
            KrausSet growing{ChannelKind::AmplitudeDamping, g, {}};
            growing.operators = {ComplexMatrix{{1.0, 0.0}, {0.0, std::sqrt(std::exp(g))}},
                                 ComplexMatrix{{0.0, std::sqrt(1.0 - std::exp(-g))}, {0.0, 0.0}}};
            const double d = validate_kraus(growing).completeness_deviation;
            if (d > worst) {
                worst = d;
                where = describe("injected sqrt(e^{+gt}) amplitude set at gamma_t = %g", g);
            }
        }
    }
    return make_result("kraus_completeness", worst, kExactTolerance, "worst: " + where);
}

CheckResult check_variance_oracle() {
    std::mt19937_64 rng(20260416);
    const SpinEnsemble ens(kQubits);
    double worst = 0.0;
    for (int s = 0; s < 4; ++s) {
        const DensityMatrix rho = random_density(rng, 8);
        for (int d = 0; d < 3; ++d) {
            const Direction dir = random_direction(rng);
            const auto basis = perpendicular_basis(dir.unit_vector());
            const double closed = min_perpendicular_variance(rho, dir, ens).v_min;
            worst = std::max(worst, std::abs(closed - brute_force_min(rho, ens, basis.e1, basis.e2)));
        }
    }
    return make_result("variance_closed_form_vs_grid", worst, 1e-9,
                       "4 random states x 3 random directions");
}

CheckResult check_css_baseline() {
    const SpinEnsemble ens(kQubits);
    const DensityMatrix up = density_from_pure(PureState::basis(8, 0));
    double worst = std::abs(squeezing_parameter(up, Direction(0.0, 0.0), ens).epsilon - 1.0);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 10; ++i) {
        const Direction dir = random_direction(rng);
        const DensityMatrix rho = aligned_product_state(dir);
        const auto own = mean_spin_direction(rho, ens);
        const Direction along = own ? *own : dir;
        worst = std::max(worst, std::abs(squeezing_parameter(rho, along, ens).epsilon - 1.0));
    }
    return make_result("coherent_state_epsilon_one", worst, 1e-10,
                       "|000> plus 10 aligned product states");
}

CheckResult check_identity_channel() {
    double worst = 0.0;
    std::mt19937_64 rng(11);
    std::vector<DensityMatrix> states;
    for (double a : {0.0, 0.5, 1.0}) states.push_back(density_from_pure(superposition_state({a})));
    for (int i = 0; i < 5; ++i) states.push_back(random_density(rng, 8));
    for (ChannelKind kind : kAllChannels) {
        const KrausSet set = make_kraus(kind, {0.0});
        for (const auto& rho : states) {
            const auto out = apply_channel_all_qubits(rho, set, kQubits);
            worst = std::max(worst, max_abs_difference(out.matrix(), rho.matrix()));
        }
    }
    return make_result("identity_at_zero_gamma_t", worst, 1e-14, "all channels, 8 states");
}

CheckResult check_depolarizing_fixed_point() {
    double worst = 0.0;
    const ComplexMatrix mixed8 = (1.0 / 8.0) * ComplexMatrix::identity(8);
    const DensityMatrix rho8 = DensityMatrix::from_matrix(mixed8);
    const DensityMatrix rho2 = DensityMatrix::from_matrix((0.5) * ComplexMatrix::identity(2));
    for (ChannelKind kind : {ChannelKind::Depolarizing, ChannelKind::PauliDepolarizing}) {
        for (double g : {0.1, 0.5, 2.0, 5.0, 20.0}) {
            const KrausSet set = make_kraus(kind, {g});
            worst = std::max(worst,
                             max_abs_difference(apply_channel_all_qubits(rho8, set, 3).matrix(), mixed8));
            worst = std::max(worst, max_abs_difference(apply_channel_all_qubits(rho2, set, 1).matrix(),
                                                       rho2.matrix()));
        }
    }
    return make_result("depolarizing_fixed_point", worst, kExactTolerance,
                       "I/2 and I/8 invariant for both depolarizing kinds");
}

template <class Fn>
CheckResult guarded(const char* name, Fn&& fn) {
    try {
        return fn();
    } catch (const std::exception& e) {
        return {name, false, std::numeric_limits<double>::infinity(), 0.0,
                std::string("threw: ") + e.what()};
    }
}

}  // namespace

std::vector<CheckResult> run_self_checks(const CheckOptions& options) {
    return {
        guarded("kraus_completeness", [&] { return check_completeness(options); }),
        guarded("variance_closed_form_vs_grid", [] { return check_variance_oracle(); }),
        guarded("coherent_state_epsilon_one", [] { return check_css_baseline(); }),
        guarded("identity_at_zero_gamma_t", [] { return check_identity_channel(); }),
        guarded("depolarizing_fixed_point", [] { return check_depolarizing_fixed_point(); }),
    };
}

}  // namespace spinsq
