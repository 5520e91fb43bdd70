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
#include <string_view>
#include <vector>

#include "spinsq/matrix.hpp"
#include "spinsq/state.hpp"

namespace spinsq {

enum class ChannelKind {
    AmplitudeDamping,
    PhaseDamping,
    // rho -> e^{-gt} rho + (1 - e^{-gt}) I/2: Bloch vector shrinks by e^{-gt}.
    Depolarizing,
    // rho -> e^{-gt} rho + ((1 - e^{-gt})/3) sum_k sigma_k rho sigma_k.
    // Bloch vector shrinks by (4e^{-gt} - 1)/3, so the long-time state is
    // not maximally mixed and the family is not a semigroup in gt.
    PauliDepolarizing,
};

inline constexpr ChannelKind kAllChannels[] = {
    ChannelKind::AmplitudeDamping,
    ChannelKind::PhaseDamping,
    ChannelKind::Depolarizing,
    ChannelKind::PauliDepolarizing,
};

// Canonical names: amplitude_damping, phase_damping, depolarizing,
// pauli_depolarizing.
std::string_view channel_name(ChannelKind kind);
// Accepts canonical names plus the short forms amplitude, phase,
// pauli-depolarizing (dashes and underscores are interchangeable).
std::optional<ChannelKind> parse_channel(std::string_view name);

struct ChannelParam {
    double gamma_t = 0.0;
};

struct KrausSet {
    ChannelKind kind = ChannelKind::AmplitudeDamping;
    double gamma_t = 0.0;
    std::vector<ComplexMatrix> operators;
};

// Each constructor throws DomainError for negative or NaN gamma_t;
// gamma_t = +inf gives the fully decayed limit.
KrausSet amplitude_damping_kraus(ChannelParam p);
KrausSet phase_damping_kraus(ChannelParam p);
KrausSet depolarizing_kraus(ChannelParam p);
KrausSet pauli_depolarizing_kraus(ChannelParam p);
KrausSet make_kraus(ChannelKind kind, ChannelParam p);

struct KrausReport {
    double completeness_deviation = 0.0;  // max |sum E^dagger E - I|
    bool passed = false;                  // deviation < kExactTolerance
};

KrausReport validate_kraus(const KrausSet& set);

// sum_k E_k(q) rho E_k(q)^dagger with E_k acting on a single qubit.
DensityMatrix apply_channel_to_qubit(const DensityMatrix& rho, const KrausSet& set,
                                     std::size_t qubit);

// Independent identical noise on every qubit, evaluated as the full sum over
// tensor products E_k1 x ... x E_kN. Throws DomainError on a dimension
// mismatch or a Kraus set that fails validate_kraus.
DensityMatrix apply_channel_all_qubits(const DensityMatrix& rho, const KrausSet& set,
                                       std::size_t n_qubits);

}  // namespace spinsq
