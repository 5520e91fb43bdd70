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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace spinsq {

using Complex = std::complex<double>;

// Dense square complex matrix, row-major. Sized for small registers
// (2^N with N up to ~12); no expression templates, every product allocates.
class ComplexMatrix {
public:
    ComplexMatrix() = default;

    // Zero matrix of the given dimension.
    explicit ComplexMatrix(std::size_t dim);

    // Takes ownership of dim*dim row-major entries; throws DomainError on a
    // size mismatch.
    ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

    // Row-major nested initializer, e.g. {{0, 1}, {1, 0}}.
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix diagonal(std::span<const Complex> diag);
    static ComplexMatrix diagonal(std::initializer_list<Complex> diag);

    std::size_t dim() const noexcept { return dim_; }

    Complex& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
    const Complex& operator()(std::size_t row, std::size_t col) const {
        return data_[row * dim_ + col];
    }

    std::span<const Complex> entries() const noexcept { return data_; }

    ComplexMatrix adjoint() const;
    Complex trace() const;

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(Complex scale);

    friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scale, ComplexMatrix m);
ComplexMatrix operator*(ComplexMatrix m, Complex scale);

// Kronecker product: result[(i*db + k), (j*db + l)] = a[i, j] * b[k, l].
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

// a * b * a^dagger without materialising a^dagger.
ComplexMatrix conjugate_by(const ComplexMatrix& a, const ComplexMatrix& b);

// Largest entrywise modulus of a - b. Dimensions must agree.
double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b);

// max |M - M^dagger|
double hermiticity_deviation(const ComplexMatrix& m);

// Eigenvalues of a Hermitian matrix in ascending order. Only the lower
// triangle is read.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

// Applies `m` to a column vector of amplitudes.
std::vector<Complex> apply(const ComplexMatrix& m, std::span<const Complex> v);

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

// Single-qubit operator acting on `qubit` (0 = most significant bit) of an
// n_qubits register, identity elsewhere.
ComplexMatrix embed_single_qubit(const ComplexMatrix& op, std::size_t qubit,
                                 std::size_t n_qubits);

}  // namespace spinsq
