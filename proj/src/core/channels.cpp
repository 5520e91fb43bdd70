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

#include "spinsq/channels.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <string>

#include "spinsq/error.hpp"

namespace spinsq {

namespace {

// e^{-gt}; throws for negative or NaN input.
double survival(ChannelParam p, const char* what) {
    if (!(p.gamma_t >= 0.0)) {
        throw DomainError(std::string(what) + ": gamma_t must be >= 0, got " +
                          std::to_string(p.gamma_t));
    }
    return std::exp(-p.gamma_t);
}

std::string normalise(std::string_view name) {
    std::string s(name);
    for (auto& c : s) {
        if (c == '-') c = '_';
        else c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    return s;
}

// Identity weight w0 and per-Pauli weight wk: E0 = sqrt(w0) I, Ek = sqrt(wk) sigma_k.
KrausSet pauli_channel(ChannelKind kind, double gamma_t, double w0, double wk) {
    KrausSet set{kind, gamma_t, {}};
    const double a = std::sqrt(w0);
    const double b = std::sqrt(wk);
    set.operators = {a * ComplexMatrix::identity(2), b * pauli_x(), b * pauli_y(), b * pauli_z()};
    return set;
}

}  // namespace

std::string_view channel_name(ChannelKind kind) {
    switch (kind) {
        case ChannelKind::AmplitudeDamping: return "amplitude_damping";
        case ChannelKind::PhaseDamping: return "phase_damping";
        case ChannelKind::Depolarizing: return "depolarizing";
        case ChannelKind::PauliDepolarizing: return "pauli_depolarizing";
    }
    return "unknown";
}

std::optional<ChannelKind> parse_channel(std::string_view name) {
    const std::string n = normalise(name);
    if (n == "amplitude" || n == "amplitude_damping") return ChannelKind::AmplitudeDamping;
    if (n == "phase" || n == "phase_damping") return ChannelKind::PhaseDamping;
    if (n == "depolarizing") return ChannelKind::Depolarizing;
    if (n == "pauli_depolarizing") return ChannelKind::PauliDepolarizing;
    return std::nullopt;
}

KrausSet amplitude_damping_kraus(ChannelParam p) {
    const double s = survival(p, "amplitude_damping_kraus");
    KrausSet set{ChannelKind::AmplitudeDamping, p.gamma_t, {}};
    set.operators = {
        ComplexMatrix{{1.0, 0.0}, {0.0, std::sqrt(s)}},
        ComplexMatrix{{0.0, std::sqrt(1.0 - s)}, {0.0, 0.0}},
    };
    return set;
}

KrausSet phase_damping_kraus(ChannelParam p) {
    const double s = survival(p, "phase_damping_kraus");
    const double lost = std::sqrt(1.0 - s);
    KrausSet set{ChannelKind::PhaseDamping, p.gamma_t, {}};
    set.operators = {
        std::sqrt(s) * ComplexMatrix::identity(2),
        ComplexMatrix::diagonal({lost, 0.0}),
        ComplexMatrix::diagonal({0.0, lost}),
    };
    return set;
}

KrausSet depolarizing_kraus(ChannelParam p) {
    const double s = survival(p, "depolarizing_kraus");
    return pauli_channel(ChannelKind::Depolarizing, p.gamma_t, (1.0 + 3.0 * s) / 4.0,
                         (1.0 - s) / 4.0);
}

KrausSet pauli_depolarizing_kraus(ChannelParam p) {
    const double s = survival(p, "pauli_depolarizing_kraus");
    return pauli_channel(ChannelKind::PauliDepolarizing, p.gamma_t, s, (1.0 - s) / 3.0);
}

KrausSet make_kraus(ChannelKind kind, ChannelParam p) {
    switch (kind) {
        case ChannelKind::AmplitudeDamping: return amplitude_damping_kraus(p);
        case ChannelKind::PhaseDamping: return phase_damping_kraus(p);
        case ChannelKind::Depolarizing: return depolarizing_kraus(p);
        case ChannelKind::PauliDepolarizing: return pauli_depolarizing_kraus(p);
    }
    throw DomainError("make_kraus: unknown channel kind");
}

KrausReport validate_kraus(const KrausSet& set) {
    KrausReport report;
    if (set.operators.empty()) {
        report.completeness_deviation = 1.0;
        return report;
    }
    ComplexMatrix sum(2);
    for (const auto& e : set.operators) {
        if (e.dim() != 2) {
            report.completeness_deviation = std::numeric_limits<double>::infinity();
            return report;
        }
        sum += e.adjoint() * e;
    }
    report.completeness_deviation = max_abs_difference(sum, ComplexMatrix::identity(2));
    report.passed = report.completeness_deviation < kExactTolerance;
    return report;
}

namespace {

void require_valid(const KrausSet& set) {
    const auto report = validate_kraus(set);
    if (!report.passed) {
        throw DomainError(std::string("Kraus set for ") + std::string(channel_name(set.kind)) +
                          " is not trace preserving (deviation " +
                          std::to_string(report.completeness_deviation) + ")");
    }
}

}  // namespace

DensityMatrix apply_channel_to_qubit(const DensityMatrix& rho, const KrausSet& set,
                                     std::size_t qubit) {
    require_valid(set);
    const std::size_t n = rho.n_qubits();
    ComplexMatrix out(rho.dim());
    for (const auto& e : set.operators) out += conjugate_by(embed_single_qubit(e, qubit, n), rho.matrix());
    return DensityMatrix::from_matrix(std::move(out));
}

DensityMatrix apply_channel_all_qubits(const DensityMatrix& rho, const KrausSet& set,
                                       std::size_t n_qubits) {
    if (rho.n_qubits() != n_qubits) {
        throw DomainError("apply_channel_all_qubits: state has " + std::to_string(rho.n_qubits()) +
                          " qubits, expected " + std::to_string(n_qubits));
    }
    require_valid(set);
    const std::size_t k = set.operators.size();
    std::vector<std::size_t> digits(n_qubits, 0);
    ComplexMatrix out(rho.dim());
    // Odometer over (k_1, ..., k_N) in [0, k)^N.
    while (true) {
        ComplexMatrix op = ComplexMatrix::identity(1);
        bool zero = false;
        for (std::size_t q = 0; q < n_qubits; ++q) {
            const auto& e = set.operators[digits[q]];
            if (std::all_of(e.entries().begin(), e.entries().end(),
                            [](const Complex& c) { return c == Complex{}; })) {
                zero = true;
                break;
            }
            op = tensor(op, e);
        }
        if (!zero) out += conjugate_by(op, rho.matrix());

        std::size_t q = n_qubits;
        while (q > 0 && ++digits[q - 1] == k) digits[--q] = 0;
        if (q == 0) break;
    }
    return DensityMatrix::from_matrix(std::move(out));
}

}  // namespace spinsq
