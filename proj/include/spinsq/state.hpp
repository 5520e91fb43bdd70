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
#include <span>
#include <vector>

#include "spinsq/matrix.hpp"

namespace spinsq {

// Tolerances shared by the state and channel layers.
inline constexpr double kExactTolerance = 1e-12;     // closed-form identities
inline constexpr double kPhysicalTolerance = 1e-10;  // after channel evolution

class PureState {
public:
    PureState() = default;
    explicit PureState(std::vector<Complex> amplitudes) : amplitudes_(std::move(amplitudes)) {}

    // Computational basis state |index> in a register of dimension dim.
    static PureState basis(std::size_t dim, std::size_t index);

    std::size_t dim() const noexcept { return amplitudes_.size(); }
    std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
    const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }

    double norm() const;

private:
    std::vector<Complex> amplitudes_;
};

// <a|b>
Complex inner_product(const PureState& a, const PureState& b);

struct DensityReport {
    double hermiticity_deviation = 0.0;
    double trace_deviation = 0.0;
    double min_eigenvalue = 0.0;
    bool passed = false;
};

// Report-only physicality check: Hermitian, unit trace and positive
// semidefinite, each within kPhysicalTolerance.
DensityReport validate_density(const ComplexMatrix& m);

// Physical state of a 2^N register. Construction validates; an instance is
// always Hermitian, unit-trace and PSD within kPhysicalTolerance.
class DensityMatrix {
public:
    // Throws DomainError if `m` fails validate_density or its dimension is
    // not a power of two.
    static DensityMatrix from_matrix(ComplexMatrix m);

    const ComplexMatrix& matrix() const noexcept { return matrix_; }
    std::size_t dim() const noexcept { return matrix_.dim(); }
    std::size_t n_qubits() const noexcept { return n_qubits_; }

    double purity() const;

private:
    DensityMatrix(ComplexMatrix m, std::size_t n_qubits)
        : matrix_(std::move(m)), n_qubits_(n_qubits) {}

    ComplexMatrix matrix_;
    std::size_t n_qubits_ = 0;
};

// Weight alpha of the GHZ component in sqrt(alpha)|GHZ> + sqrt(1-alpha)|W>.
struct SuperpositionSpec {
    double alpha = 1.0;
};

// (|000> + |111>)/sqrt(2); qubit 1 is the most significant bit, |0> is spin up.
PureState ghz_state();
// (|100> + |010> + |001>)/sqrt(3)
PureState w_state();
// Throws DomainError unless alpha is in [0, 1].
PureState superposition_state(SuperpositionSpec spec);

// |psi><psi|. Throws DomainError if |psi| deviates from 1 by more than
// kExactTolerance.
DensityMatrix density_from_pure(const PureState& psi);

// Re tr(rho * obs). Throws DomainError on dimension mismatch or a
// non-Hermitian observable.
double expectation(const DensityMatrix& rho, const ComplexMatrix& obs);

}  // namespace spinsq
