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

#include <array>
#include <cstddef>
#include <optional>

#include "spinsq/matrix.hpp"
#include "spinsq/state.hpp"

namespace spinsq {

// |J_mean| below this is treated as "no mean spin direction".
inline constexpr double kDegenerateMeanSpin = 1e-9;

enum class Axis { X, Y, Z };

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double operator[](std::size_t i) const { return i == 0 ? x : (i == 1 ? y : z); }
    friend bool operator==(const Vec3&, const Vec3&) = default;
};

double dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);
double norm(const Vec3& v);
Vec3 operator*(double s, const Vec3& v);
Vec3 operator+(const Vec3& a, const Vec3& b);

// Reference direction in degrees: theta from +z in [0, 180], phi from +x in
// [0, 360).
class Direction {
public:
    Direction() = default;
    // Throws DomainError when either angle is outside its range.
    Direction(double theta_deg, double phi_deg);

    double theta_deg() const noexcept { return theta_deg_; }
    double phi_deg() const noexcept { return phi_deg_; }

    // (sin t cos p, sin t sin p, cos t)
    Vec3 unit_vector() const;

private:
    double theta_deg_ = 0.0;
    double phi_deg_ = 0.0;
};

struct MeanSpinVector {
    double jx = 0.0;
    double jy = 0.0;
    double jz = 0.0;

    Vec3 vector() const { return {jx, jy, jz}; }
};

struct SqueezingResult {
    double epsilon = 0.0;
    double v_min = 0.0;
    double phi_star_rad = 0.0;
    MeanSpinVector mean_spin;

    bool squeezed() const { return epsilon < 1.0; }
};

// N spin-1/2 particles with total spin J = N/2. Holds the collective
// operators J_a = (1/2) sum_i sigma_a^(i) and their symmetrised products,
// built once at construction; read-only afterwards.
class SpinEnsemble {
public:
    explicit SpinEnsemble(std::size_t n_qubits);

    std::size_t n_qubits() const noexcept { return n_qubits_; }
    double j_total() const noexcept { return 0.5 * static_cast<double>(n_qubits_); }
    std::size_t dim() const noexcept { return std::size_t{1} << n_qubits_; }

    const ComplexMatrix& op(Axis axis) const { return ops_[index(axis)]; }
    // (J_a J_b + J_b J_a) / 2
    const ComplexMatrix& symmetric_product(Axis a, Axis b) const {
        return products_[index(a)][index(b)];
    }

private:
    static std::size_t index(Axis a) { return static_cast<std::size_t>(a); }

    std::size_t n_qubits_;
    std::array<ComplexMatrix, 3> ops_;
    std::array<std::array<ComplexMatrix, 3>, 3> products_;
};

ComplexMatrix collective_operator(Axis axis, const SpinEnsemble& ensemble);

// First and symmetrised second moments of (Jx, Jy, Jz) in a state. Every
// variance and covariance of a linear combination n.J follows from these.
struct SpinMoments {
    MeanSpinVector mean;
    std::array<std::array<double, 3>, 3> second{};  // <{J_a, J_b}>/2

    double covariance(const Vec3& a, const Vec3& b) const;
    double variance_along(const Vec3& n) const { return covariance(n, n); }
};

// Throws DomainError on a dimension mismatch.
SpinMoments spin_moments(const DensityMatrix& rho, const SpinEnsemble& ensemble);

MeanSpinVector mean_spin_vector(const DensityMatrix& rho, const SpinEnsemble& ensemble);

// <J_n^2> - <J_n>^2. Throws DomainError if |unit_dir| differs from 1 by
// more than 1e-12.
double variance_along(const DensityMatrix& rho, const Vec3& unit_dir,
                      const SpinEnsemble& ensemble);

struct PerpendicularBasis {
    Vec3 e1;
    Vec3 e2;
};

// e1 = normalize(z x n) unless n is (anti)parallel to z, where e1 = x;
// e2 = n x e1. Throws DomainError for a zero or non-unit vector.
PerpendicularBasis perpendicular_basis(const Vec3& unit_dir);

struct PerpendicularMinimum {
    double v_min = 0.0;
    double phi_star_rad = 0.0;  // in [0, pi), measured from e1 towards e2
};

// Minimum of Var(cos(phi) J_e1 + sin(phi) J_e2) over phi, from the 2x2
// in-plane covariance matrix. Small negative round-off (>= -1e-10) is
// clamped to zero; anything lower throws DomainError.
PerpendicularMinimum min_variance_in_plane(const SpinMoments& moments, const Vec3& e1,
                                           const Vec3& e2);

PerpendicularMinimum min_perpendicular_variance(const DensityMatrix& rho, const Direction& dir,
                                                const SpinEnsemble& ensemble);

// epsilon = 4 v_min / N against the plane perpendicular to `normal`.
SqueezingResult squeezing_from_moments(const SpinMoments& moments, const Vec3& normal,
                                       std::size_t n_qubits);

SqueezingResult squeezing_parameter(const DensityMatrix& rho, const Direction& dir,
                                    const SpinEnsemble& ensemble);

// Direction of the mean spin vector; nullopt when |J_mean| < kDegenerateMeanSpin.
std::optional<Direction> mean_spin_direction(const MeanSpinVector& mean);
std::optional<Direction> mean_spin_direction(const DensityMatrix& rho,
                                             const SpinEnsemble& ensemble);

}  // namespace spinsq
