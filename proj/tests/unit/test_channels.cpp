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

#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "oracle.hpp"
#include "spinsq/channels.hpp"
#include "spinsq/error.hpp"
#include "spinsq/state.hpp"

using namespace spinsq;

namespace {

const double kInf = std::numeric_limits<double>::infinity();

DensityMatrix lib(const oracle::Mat& m) { return DensityMatrix::from_matrix(oracle::to_library(m)); }

DensityMatrix superposition_density(double alpha) {
    return density_from_pure(superposition_state({alpha}));
}

char oracle_label(ChannelKind k) {
    switch (k) {
        case ChannelKind::AmplitudeDamping: return 'a';
        case ChannelKind::PhaseDamping: return 'p';
        default: return 'd';
    }
}

std::vector<double> gamma_grid(double step, double stop) {
    std::vector<double> g;
    for (int k = 0; k * step <= stop + 1e-12; ++k) g.push_back(k * step);
    return g;
}

}  // namespace

TEST_CASE("channel names") {
    CHECK(parse_channel("amplitude") == ChannelKind::AmplitudeDamping);
    CHECK(parse_channel("amplitude_damping") == ChannelKind::AmplitudeDamping);
    CHECK(parse_channel("phase") == ChannelKind::PhaseDamping);
    CHECK(parse_channel("depolarizing") == ChannelKind::Depolarizing);
    CHECK(parse_channel("pauli-depolarizing") == ChannelKind::PauliDepolarizing);
    CHECK_FALSE(parse_channel("bitflip"));
    for (auto k : kAllChannels) CHECK(parse_channel(channel_name(k)) == k);
}

TEST_CASE("amplitude damping operators") {
    const auto zero = amplitude_damping_kraus({0.0});
    REQUIRE(zero.operators.size() == 2);
    CHECK(zero.operators[0] == ComplexMatrix::identity(2));
    CHECK(zero.operators[1] == ComplexMatrix(2));

    const auto full = amplitude_damping_kraus({kInf});
    CHECK(full.operators[0] == ComplexMatrix::diagonal({1.0, 0.0}));
    CHECK(full.operators[1] == ComplexMatrix({{0.0, 1.0}, {0.0, 0.0}}));

    const auto half = amplitude_damping_kraus({std::log(2.0)});
    CHECK(std::abs(half.operators[0](1, 1) - 1.0 / std::sqrt(2.0)) < 1e-15);
    CHECK(std::abs(half.operators[1](0, 1) - 1.0 / std::sqrt(2.0)) < 1e-15);
    CHECK(validate_kraus(amplitude_damping_kraus({0.3})).passed);
}

TEST_CASE("phase damping operators") {
    const auto zero = phase_damping_kraus({0.0});
    REQUIRE(zero.operators.size() == 3);
    CHECK(zero.operators[0] == ComplexMatrix::identity(2));
    CHECK(zero.operators[1] == ComplexMatrix(2));
    CHECK(zero.operators[2] == ComplexMatrix(2));

    const double r = 1.0 / std::sqrt(2.0);
    const auto half = phase_damping_kraus({std::log(2.0)});
    CHECK(max_abs_difference(half.operators[0], ComplexMatrix::diagonal({r, r})) < 1e-15);
    CHECK(max_abs_difference(half.operators[1], ComplexMatrix::diagonal({r, 0.0})) < 1e-15);
    CHECK(max_abs_difference(half.operators[2], ComplexMatrix::diagonal({0.0, r})) < 1e-15);
    CHECK(validate_kraus(phase_damping_kraus({0.7})).completeness_deviation < 1e-15);
}

TEST_CASE("depolarizing operators") {
    for (auto make : {depolarizing_kraus, pauli_depolarizing_kraus}) {
        const auto zero = make({0.0});
        REQUIRE(zero.operators.size() == 4);
        CHECK(zero.operators[0] == ComplexMatrix::identity(2));
        for (int k = 1; k < 4; ++k) CHECK(zero.operators[k] == ComplexMatrix(2));
        CHECK(validate_kraus(make({5.0})).passed);
    }
    // Fourth operator is proportional to sigma_z.
    const auto d = depolarizing_kraus({1.0});
    const double wk = std::sqrt((1.0 - std::exp(-1.0)) / 4.0);
    CHECK(max_abs_difference(d.operators[3], Complex(wk) * pauli_z()) < 1e-15);
}

TEST_CASE("completeness across the gamma_t grid") {
    for (auto k : kAllChannels)
        for (double gt : gamma_grid(0.1, 5.0)) CHECK(validate_kraus(make_kraus(k, {gt})).completeness_deviation < 1e-12);
}

TEST_CASE("growing exponent breaks completeness") {
    const double gt = 1.0;
    KrausSet literal;
    literal.kind = ChannelKind::AmplitudeDamping;
    literal.gamma_t = gt;
    literal.operators = {ComplexMatrix::diagonal({1.0, std::sqrt(std::exp(gt))}),
                         ComplexMatrix({{0.0, std::sqrt(1.0 - std::exp(-gt))}, {0.0, 0.0}})};
    const auto report = validate_kraus(literal);
    CHECK_FALSE(report.passed);
    // sum E^dagger E = diag(1, e^gt + 1 - e^-gt).
    CHECK(report.completeness_deviation == doctest::Approx(std::exp(gt) - std::exp(-gt)));
    CHECK_THROWS_AS(apply_channel_all_qubits(superposition_density(0.5), literal, 3), DomainError);
}

TEST_CASE("invalid parameters") {
    for (auto k : kAllChannels) {
        CHECK_THROWS_AS(make_kraus(k, {-0.1}), DomainError);
        CHECK_THROWS_AS(make_kraus(k, {std::nan("")}), DomainError);
    }
    const auto set = depolarizing_kraus({0.5});
    CHECK_THROWS_AS(apply_channel_all_qubits(superposition_density(0.5), set, 2), DomainError);
    CHECK_THROWS_AS(apply_channel_to_qubit(superposition_density(0.5), set, 3), DomainError);
}

TEST_CASE("zero gamma_t leaves states unchanged") {
    std::mt19937_64 rng(1);
    for (int s = 0; s < 5; ++s) {
        const auto rho = lib(oracle::random_density(rng, 8));
        for (auto k : kAllChannels) {
            const auto out = apply_channel_all_qubits(rho, make_kraus(k, {0.0}), 3);
            CHECK(max_abs_difference(out.matrix(), rho.matrix()) < 1e-14);
        }
    }
}

TEST_CASE("long-time limits") {
    const auto ghz = apply_channel_all_qubits(density_from_pure(ghz_state()),
                                              amplitude_damping_kraus({kInf}), 3);
    CHECK(max_abs_difference(ghz.matrix(), density_from_pure(PureState::basis(8, 0)).matrix()) < 1e-15);

    const auto w = apply_channel_all_qubits(density_from_pure(w_state()), depolarizing_kraus({kInf}), 3);
    CHECK(max_abs_difference(w.matrix(), Complex(1.0 / 8.0) * ComplexMatrix::identity(8)) < 1e-15);

    // The Pauli-weighted form settles elsewhere: each Bloch vector keeps -1/3.
    const auto p = apply_channel_all_qubits(density_from_pure(PureState::basis(8, 0)),
                                            pauli_depolarizing_kraus({kInf}), 3);
    CHECK(max_abs_difference(p.matrix(), Complex(1.0 / 8.0) * ComplexMatrix::identity(8)) > 1e-2);
}

TEST_CASE("evolution agrees with the sequential oracle") {
    std::mt19937_64 rng(2);
    for (int s = 0; s < 4; ++s) {
        const auto rho = oracle::random_density(rng, 8);
        for (auto k : {ChannelKind::AmplitudeDamping, ChannelKind::PhaseDamping, ChannelKind::Depolarizing}) {
            for (double gt : {0.05, 0.7, 2.3}) {
                const auto expected = oracle::evolve(rho, oracle_label(k), gt, 3);
                const auto got = apply_channel_all_qubits(lib(rho), make_kraus(k, {gt}), 3);
                CHECK(oracle::max_diff(oracle::from_library(got.matrix()), expected) < 1e-14);
            }
        }
    }
}

TEST_CASE("simultaneous Kraus sum equals qubit-by-qubit application") {
    std::mt19937_64 rng(3);
    for (auto k : kAllChannels) {
        const auto rho = lib(oracle::random_density(rng, 8));
        const auto set = make_kraus(k, {0.9});
        auto sequential = rho;
        for (std::size_t q : {2u, 0u, 1u}) sequential = apply_channel_to_qubit(sequential, set, q);
        const auto joint = apply_channel_all_qubits(rho, set, 3);
        CHECK(max_abs_difference(joint.matrix(), sequential.matrix()) < 1e-12);
    }
}

TEST_CASE("evolved states stay physical") {
    for (auto k : kAllChannels)
        for (double alpha : {0.0, 0.5, 1.0})
            for (double gt : gamma_grid(0.25, 5.0)) {
                const auto out = apply_channel_all_qubits(superposition_density(alpha), make_kraus(k, {gt}), 3);
                const auto report = validate_density(out.matrix());
                CHECK(report.trace_deviation < 1e-10);
                CHECK(report.min_eigenvalue >= -1e-10);
                CHECK(report.hermiticity_deviation < 1e-10);
            }
}

TEST_CASE("purity never increases under depolarizing noise") {
    std::mt19937_64 rng(4);
    const auto inputs = {superposition_density(0.3), lib(oracle::random_density(rng, 8))};
    for (const auto& rho : inputs) {
        double previous = rho.purity();
        for (double gt : gamma_grid(0.05, 5.0)) {
            const double p = apply_channel_all_qubits(rho, depolarizing_kraus({gt}), 3).purity();
            CHECK(p <= previous + 1e-12);
            previous = p;
        }
    }
}

TEST_CASE("semigroup composition in gamma_t") {
    std::mt19937_64 rng(5);
    const auto rho = lib(oracle::random_density(rng, 8));
    for (auto k : {ChannelKind::AmplitudeDamping, ChannelKind::PhaseDamping, ChannelKind::Depolarizing}) {
        for (auto [t1, t2] : {std::pair{0.3, 0.9}, {1.2, 2.5}, {0.0, 4.0}}) {
            const auto stepped = apply_channel_all_qubits(
                apply_channel_all_qubits(rho, make_kraus(k, {t1}), 3), make_kraus(k, {t2}), 3);
            const auto direct = apply_channel_all_qubits(rho, make_kraus(k, {t1 + t2}), 3);
            CHECK(max_abs_difference(stepped.matrix(), direct.matrix()) < 1e-10);
        }
    }
    // The Pauli-weighted parameterisation does not compose.
    const auto stepped = apply_channel_all_qubits(
        apply_channel_all_qubits(rho, pauli_depolarizing_kraus({0.5}), 3), pauli_depolarizing_kraus({0.5}), 3);
    const auto direct = apply_channel_all_qubits(rho, pauli_depolarizing_kraus({1.0}), 3);
    CHECK(max_abs_difference(stepped.matrix(), direct.matrix()) > 1e-4);
}
