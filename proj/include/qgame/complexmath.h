// Copyright 2026 The qgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Dense complex linear algebra for one- and two-qubit objects.
//
// Only dimensions 2 and 4 are admitted. Storage is row-major and two-qubit
// basis states are indexed as 2 * (first qubit bit) + (second qubit bit).

#ifndef QGAME_COMPLEXMATH_H_
#define QGAME_COMPLEXMATH_H_

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>

namespace qgame {

using Complex = std::complex<double>;

inline constexpr double kStructuralTol = 1e-12;
inline constexpr double kPayoffTol = 1e-9;

class ComplexVector {
 public:
  static constexpr std::size_t kMaxDim = 4;

  // Zero vector of the given dimension.
  explicit ComplexVector(std::size_t dim);
  ComplexVector(std::initializer_list<Complex> entries);
  explicit ComplexVector(std::span<const Complex> entries);

  // Computational basis vector e_index.
  static ComplexVector Basis(std::size_t dim, std::size_t index);

  std::size_t dim() const { return dim_; }
  const Complex& operator[](std::size_t i) const { return data_[i]; }
  std::span<const Complex> entries() const { return {data_.data(), dim_}; }

 private:
  std::size_t dim_;
  std::array<Complex, kMaxDim> data_{};
};

class ComplexMatrix {
 public:
  static constexpr std::size_t kMaxDim = 4;

  // Zero matrix of the given dimension.
  explicit ComplexMatrix(std::size_t dim);
  // Row-major entries; the count must be 4 or 16.
  ComplexMatrix(std::initializer_list<Complex> row_major);
  explicit ComplexMatrix(std::span<const Complex> row_major);

  static ComplexMatrix Identity(std::size_t dim);
  static ComplexMatrix Diagonal(std::span<const Complex> diag);

  std::size_t dim() const { return dim_; }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return data_[row * dim_ + col];
  }
  std::span<const Complex> entries() const { return {data_.data(), dim_ * dim_}; }

  ComplexMatrix operator*(const ComplexMatrix& other) const;
  ComplexMatrix operator+(const ComplexMatrix& other) const;
  ComplexMatrix operator-(const ComplexMatrix& other) const;
  ComplexMatrix Scaled(Complex factor) const;

 private:
  std::size_t dim_;
  std::array<Complex, kMaxDim * kMaxDim> data_{};
};

ComplexMatrix MatMul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector MatVec(const ComplexMatrix& a, const ComplexVector& v);

// Kronecker products; both factors must be of dimension 2.
ComplexMatrix Tensor(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector Tensor(const ComplexVector& a, const ComplexVector& b);

ComplexMatrix Adjoint(const ComplexMatrix& a);

// Largest entry modulus.
double MaxAbs(const ComplexMatrix& a);
double MaxAbsDiff(const ComplexMatrix& a, const ComplexMatrix& b);
double MaxAbsDiff(const ComplexVector& a, const ComplexVector& b);

// True iff max |(a^dagger a - I)_ij| <= tol. Requires tol > 0.
bool IsUnitary(const ComplexMatrix& a, double tol);

// exp(a) by scaling and squaring around a truncated Taylor series. The series
// is cut once the next term falls below tol (scaled for the squaring steps).
// Throws ErrorCode::kConvergence if the term budget is exhausted.
ComplexMatrix MatExpSeries(const ComplexMatrix& a, double tol);

double Norm(const ComplexVector& v);

}  // namespace qgame

#endif  // QGAME_COMPLEXMATH_H_
