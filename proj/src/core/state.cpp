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

#include "spinsq/state.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "spinsq/error.hpp"

namespace spinsq {

PureState PureState::basis(std::size_t dim, std::size_t index) {
    if (index >= dim) throw DomainError("PureState::basis: index out of range");
    std::vector<Complex> amps(dim);
    amps[index] = 1.0;
    return PureState(std::move(amps));
}

double PureState::norm() const {
    double s = 0.0;
    for (const auto& a : amplitudes_) s += std::norm(a);
    return std::sqrt(s);
}

Complex inner_product(const PureState& a, const PureState& b) {
    if (a.dim() != b.dim()) throw DomainError("inner_product: dimension mismatch");
    Complex s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

DensityReport validate_density(const ComplexMatrix& m) {
    DensityReport report;
    if (m.dim() == 0) return report;
    report.hermiticity_deviation = hermiticity_deviation(m);
    report.trace_deviation = std::abs(m.trace() - Complex(1.0, 0.0));
    report.min_eigenvalue = hermitian_eigenvalues(m).front();
    report.passed = report.hermiticity_deviation < kPhysicalTolerance &&
                    report.trace_deviation < kPhysicalTolerance &&
                    report.min_eigenvalue >= -kPhysicalTolerance;
    return report;
}

DensityMatrix DensityMatrix::from_matrix(ComplexMatrix m) {
    if (m.dim() == 0 || !std::has_single_bit(m.dim())) {
        throw DomainError("density matrix dimension must be a power of two, got " +
                          std::to_string(m.dim()));
    }
    const DensityReport report = validate_density(m);
    if (!report.passed) {
        throw DomainError("not a valid density matrix (hermiticity deviation " +
                          std::to_string(report.hermiticity_deviation) + ", trace deviation " +
                          std::to_string(report.trace_deviation) + ", min eigenvalue " +
                          std::to_string(report.min_eigenvalue) + ")");
    }
    const auto n_qubits = static_cast<std::size_t>(std::countr_zero(m.dim()));
    return DensityMatrix(std::move(m), n_qubits);
}

double DensityMatrix::purity() const { return (matrix_ * matrix_).trace().real(); }

PureState ghz_state() {
    std::vector<Complex> amps(8);
    amps[0b000] = amps[0b111] = 1.0 / std::sqrt(2.0);
    return PureState(std::move(amps));
}

PureState w_state() {
    std::vector<Complex> amps(8);
    amps[0b100] = amps[0b010] = amps[0b001] = 1.0 / std::sqrt(3.0);
    return PureState(std::move(amps));
}

PureState superposition_state(SuperpositionSpec spec) {
    if (!(spec.alpha >= 0.0 && spec.alpha <= 1.0)) {
        throw DomainError("alpha must lie in [0, 1], got " + std::to_string(spec.alpha));
    }
    const double cg = std::sqrt(spec.alpha);
    const double cw = std::sqrt(1.0 - spec.alpha);
    const PureState ghz = ghz_state();
    const PureState w = w_state();
    std::vector<Complex> amps(8);
    for (std::size_t i = 0; i < amps.size(); ++i) amps[i] = cg * ghz[i] + cw * w[i];
    return PureState(std::move(amps));
}

DensityMatrix density_from_pure(const PureState& psi) {
    const double n = psi.norm();
    if (std::abs(n - 1.0) > kExactTolerance) {
        throw DomainError("density_from_pure: state is not normalised (norm " +
                          std::to_string(n) + ")");
    }
    const std::size_t dim = psi.dim();
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) m(i, j) = psi[i] * std::conj(psi[j]);
    return DensityMatrix::from_matrix(std::move(m));
}

double expectation(const DensityMatrix& rho, const ComplexMatrix& obs) {
    if (obs.dim() != rho.dim()) {
        throw DomainError("expectation: observable dimension " + std::to_string(obs.dim()) +
                          " does not match state dimension " + std::to_string(rho.dim()));
    }
    if (hermiticity_deviation(obs) > kPhysicalTolerance) {
        throw DomainError("expectation: observable is not Hermitian");
    }
    // tr(rho obs) = sum_ij rho_ij obs_ji
    const ComplexMatrix& m = rho.matrix();
    Complex t = 0.0;
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) t += m(i, j) * obs(j, i);
    return t.real();
}

}  // namespace spinsq
