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

#include "spinsq/collective_spin.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "spinsq/error.hpp"

namespace spinsq {

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;
constexpr double kUnitTolerance = 1e-12;
constexpr double kIsotropicTolerance = 1e-12;

constexpr Axis kAxes[] = {Axis::X, Axis::Y, Axis::Z};

ComplexMatrix pauli(Axis axis) {
    switch (axis) {
        case Axis::X: return pauli_x();
        case Axis::Y: return pauli_y();
        case Axis::Z: return pauli_z();
    }
    return {};
}

ComplexMatrix build_collective(Axis axis, std::size_t n_qubits) {
    const ComplexMatrix sigma = pauli(axis);
    ComplexMatrix sum(std::size_t{1} << n_qubits);
    for (std::size_t q = 0; q < n_qubits; ++q) sum += embed_single_qubit(sigma, q, n_qubits);
    return 0.5 * std::move(sum);
}

void require_unit(const Vec3& v, const char* what) {
    const double n = norm(v);
    if (n == 0.0) throw DomainError(std::string(what) + ": zero direction vector");
    if (std::abs(n - 1.0) > kUnitTolerance) {
        throw DomainError(std::string(what) + ": direction is not a unit vector (norm " +
                          std::to_string(n) + ")");
    }
}

}  // namespace

double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

Vec3 operator*(double s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }
Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }

Direction::Direction(double theta_deg, double phi_deg) : theta_deg_(theta_deg), phi_deg_(phi_deg) {
    if (!(theta_deg >= 0.0 && theta_deg <= 180.0)) {
        throw DomainError("theta must lie in [0, 180] degrees, got " + std::to_string(theta_deg));
    }
    if (!(phi_deg >= 0.0 && phi_deg < 360.0)) {
        throw DomainError("phi must lie in [0, 360) degrees, got " + std::to_string(phi_deg));
    }
}

Vec3 Direction::unit_vector() const {
    const double t = theta_deg_ * kDegToRad;
    const double p = phi_deg_ * kDegToRad;
    return {std::sin(t) * std::cos(p), std::sin(t) * std::sin(p), std::cos(t)};
}

SpinEnsemble::SpinEnsemble(std::size_t n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits == 0 || n_qubits > 12) {
        throw DomainError("SpinEnsemble: qubit count must be in [1, 12], got " +
                          std::to_string(n_qubits));
    }
    for (Axis a : kAxes) ops_[index(a)] = build_collective(a, n_qubits);
    for (Axis a : kAxes) {
        for (Axis b : kAxes) {
            const auto& ja = ops_[index(a)];
            const auto& jb = ops_[index(b)];
            products_[index(a)][index(b)] = 0.5 * (ja * jb + jb * ja);
        }
    }
}

ComplexMatrix collective_operator(Axis axis, const SpinEnsemble& ensemble) {
    return ensemble.op(axis);
}

double SpinMoments::covariance(const Vec3& a, const Vec3& b) const {
    double c = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
        const double mi = mean.vector()[i];
        for (std::size_t j = 0; j < 3; ++j) {
            c += a[i] * b[j] * (second[i][j] - mi * mean.vector()[j]);
        }
    }
    return c;
}

SpinMoments spin_moments(const DensityMatrix& rho, const SpinEnsemble& ensemble) {
    if (rho.dim() != ensemble.dim()) {
        throw DomainError("state dimension " + std::to_string(rho.dim()) +
                          " does not match a " + std::to_string(ensemble.n_qubits()) +
                          "-spin ensemble");
    }
    SpinMoments m;
    m.mean = {expectation(rho, ensemble.op(Axis::X)), expectation(rho, ensemble.op(Axis::Y)),
              expectation(rho, ensemble.op(Axis::Z))};
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = i; j < 3; ++j) {
            const double v = expectation(rho, ensemble.symmetric_product(kAxes[i], kAxes[j]));
            m.second[i][j] = m.second[j][i] = v;
        }
    }
    return m;
}

MeanSpinVector mean_spin_vector(const DensityMatrix& rho, const SpinEnsemble& ensemble) {
    if (rho.dim() != ensemble.dim()) throw DomainError("mean_spin_vector: dimension mismatch");
    return {expectation(rho, ensemble.op(Axis::X)), expectation(rho, ensemble.op(Axis::Y)),
            expectation(rho, ensemble.op(Axis::Z))};
}

double variance_along(const DensityMatrix& rho, const Vec3& unit_dir,
                      const SpinEnsemble& ensemble) {
    require_unit(unit_dir, "variance_along");
    return spin_moments(rho, ensemble).variance_along(unit_dir);
}

PerpendicularBasis perpendicular_basis(const Vec3& unit_dir) {
    require_unit(unit_dir, "perpendicular_basis");
    const Vec3 z{0.0, 0.0, 1.0};
    Vec3 e1{1.0, 0.0, 0.0};
    if (std::abs(dot(unit_dir, z)) < 1.0 - 1e-9) {
        const Vec3 c = cross(z, unit_dir);
        e1 = (1.0 / norm(c)) * c;
    }
    return {e1, cross(unit_dir, e1)};
}

PerpendicularMinimum min_variance_in_plane(const SpinMoments& moments, const Vec3& e1,
                                           const Vec3& e2) {
    const double c11 = moments.covariance(e1, e1);
    const double c22 = moments.covariance(e2, e2);
    const double c12 = moments.covariance(e1, e2);
    const double diff = c11 - c22;

    PerpendicularMinimum out;
    out.v_min = 0.5 * ((c11 + c22) - std::sqrt(diff * diff + 4.0 * c12 * c12));
    if (out.v_min < 0.0) {
        if (out.v_min < -1e-10) {
            throw DomainError("negative perpendicular variance " + std::to_string(out.v_min) +
                              "; state is not physical");
        }
        out.v_min = 0.0;
    }

    // Var(phi) = (c11 + c22)/2 + R cos(2 phi - psi) with psi = atan2(2 c12, c11 - c22),
    // minimal at 2 phi = psi + pi.
    if (std::abs(diff) <= kIsotropicTolerance && std::abs(c12) <= kIsotropicTolerance) {
        out.phi_star_rad = 0.0;
    } else {
        double phi = 0.5 * (std::atan2(2.0 * c12, diff) + std::numbers::pi);
        if (phi >= std::numbers::pi) phi -= std::numbers::pi;
        out.phi_star_rad = phi;
    }
    return out;
}

PerpendicularMinimum min_perpendicular_variance(const DensityMatrix& rho, const Direction& dir,
                                                const SpinEnsemble& ensemble) {
    const auto basis = perpendicular_basis(dir.unit_vector());
    return min_variance_in_plane(spin_moments(rho, ensemble), basis.e1, basis.e2);
}

SqueezingResult squeezing_from_moments(const SpinMoments& moments, const Vec3& normal,
                                       std::size_t n_qubits) {
    const auto basis = perpendicular_basis(normal);
    const auto minimum = min_variance_in_plane(moments, basis.e1, basis.e2);
    SqueezingResult r;
    r.v_min = minimum.v_min;
    r.phi_star_rad = minimum.phi_star_rad;
    r.epsilon = 4.0 * minimum.v_min / static_cast<double>(n_qubits);
    r.mean_spin = moments.mean;
    return r;
}

SqueezingResult squeezing_parameter(const DensityMatrix& rho, const Direction& dir,
                                    const SpinEnsemble& ensemble) {
    return squeezing_from_moments(spin_moments(rho, ensemble), dir.unit_vector(),
                                  ensemble.n_qubits());
}

std::optional<Direction> mean_spin_direction(const MeanSpinVector& mean) {
    const double length = norm(mean.vector());
    if (length < kDegenerateMeanSpin) return std::nullopt;
    const double transverse = std::hypot(mean.jx, mean.jy);
    const double theta = std::atan2(transverse, mean.jz) / kDegToRad;
    double phi = 0.0;
    if (transverse > 1e-12 * length) {
        phi = std::atan2(mean.jy, mean.jx) / kDegToRad;
        if (phi < 0.0) phi += 360.0;
        if (phi >= 360.0) phi = 0.0;
    }
    return Direction(std::clamp(theta, 0.0, 180.0), phi);
}

std::optional<Direction> mean_spin_direction(const DensityMatrix& rho,
                                             const SpinEnsemble& ensemble) {
    return mean_spin_direction(mean_spin_vector(rho, ensemble));
}

}  // namespace spinsq
