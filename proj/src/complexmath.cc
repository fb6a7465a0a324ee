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

#include "qgame/complexmath.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "qgame/error.h"

namespace qgame {
namespace {

void CheckDim(std::size_t dim) {
  if (dim != 2 && dim != 4) {
    throw Error(ErrorCode::kDimension,
                "unsupported dimension " + std::to_string(dim) +
                    " (only 2 and 4 are supported)");
  }
}

void CheckFinite(const Complex& z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw Error(ErrorCode::kInvalidArgument, "non-finite complex entry");
  }
}

std::size_t SqrtDim(std::size_t count) {
  if (count == 4) return 2;
  if (count == 16) return 4;
  throw Error(ErrorCode::kDimension,
              "matrix needs 4 or 16 entries, got " + std::to_string(count));
}

void CheckSameDim(std::size_t a, std::size_t b, const char* op) {
  if (a != b) {
    throw Error(ErrorCode::kDimension, std::string(op) + ": dimension mismatch (" +
                                           std::to_string(a) + " vs " +
                                           std::to_string(b) + ")");
  }
}

// Max absolute row sum; submultiplicative, so it bounds Taylor terms.
double InfNorm(const ComplexMatrix& a) {
  double best = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < a.dim(); ++j) row += std::abs(a(i, j));
    best = std::max(best, row);
  }
  return best;
}

}  // namespace

ComplexVector::ComplexVector(std::size_t dim) : dim_(dim) { CheckDim(dim); }

ComplexVector::ComplexVector(std::initializer_list<Complex> entries)
    : ComplexVector(std::span<const Complex>(entries.begin(), entries.size())) {}

ComplexVector::ComplexVector(std::span<const Complex> entries) : dim_(entries.size()) {
  CheckDim(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    CheckFinite(entries[i]);
    data_[i] = entries[i];
  }
}

ComplexVector ComplexVector::Basis(std::size_t dim, std::size_t index) {
  CheckDim(dim);
  if (index >= dim) {
    throw Error(ErrorCode::kOutOfRange, "basis index out of range");
  }
  std::array<Complex, kMaxDim> e{};
  e[index] = 1.0;
  return ComplexVector(std::span<const Complex>(e.data(), dim));
}

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim) { CheckDim(dim); }

ComplexMatrix::ComplexMatrix(std::initializer_list<Complex> row_major)
    : ComplexMatrix(std::span<const Complex>(row_major.begin(), row_major.size())) {}

ComplexMatrix::ComplexMatrix(std::span<const Complex> row_major)
    : dim_(SqrtDim(row_major.size())) {
  for (std::size_t i = 0; i < row_major.size(); ++i) {
    CheckFinite(row_major[i]);
    data_[i] = row_major[i];
  }
}

ComplexMatrix ComplexMatrix::Identity(std::size_t dim) {
  CheckDim(dim);
  std::array<Complex, kMaxDim * kMaxDim> e{};
  for (std::size_t i = 0; i < dim; ++i) e[i * dim + i] = 1.0;
  return ComplexMatrix(std::span<const Complex>(e.data(), dim * dim));
}

ComplexMatrix ComplexMatrix::Diagonal(std::span<const Complex> diag) {
  const std::size_t dim = diag.size();
  CheckDim(dim);
  std::array<Complex, kMaxDim * kMaxDim> e{};
  for (std::size_t i = 0; i < dim; ++i) e[i * dim + i] = diag[i];
  return ComplexMatrix(std::span<const Complex>(e.data(), dim * dim));
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& other) const {
  return MatMul(*this, other);
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& other) const {
  CheckSameDim(dim_, other.dim_, "add");
  std::array<Complex, kMaxDim * kMaxDim> e{};
  for (std::size_t i = 0; i < dim_ * dim_; ++i) e[i] = data_[i] + other.data_[i];
  return ComplexMatrix(std::span<const Complex>(e.data(), dim_ * dim_));
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& other) const {
  return *this + other.Scaled(-1.0);
}

ComplexMatrix ComplexMatrix::Scaled(Complex factor) const {
  std::array<Complex, kMaxDim * kMaxDim> e{};
  for (std::size_t i = 0; i < dim_ * dim_; ++i) e[i] = factor * data_[i];
  return ComplexMatrix(std::span<const Complex>(e.data(), dim_ * dim_));
}

ComplexMatrix MatMul(const ComplexMatrix& a, const ComplexMatrix& b) {
  CheckSameDim(a.dim(), b.dim(), "mat_mul");
  const std::size_t n = a.dim();
  std::array<Complex, ComplexMatrix::kMaxDim * ComplexMatrix::kMaxDim> e{};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      for (std::size_t j = 0; j < n; ++j) e[i * n + j] += aik * b(k, j);
    }
  }
  return ComplexMatrix(std::span<const Complex>(e.data(), n * n));
}

ComplexVector MatVec(const ComplexMatrix& a, const ComplexVector& v) {
  CheckSameDim(a.dim(), v.dim(), "mat_vec");
  const std::size_t n = a.dim();
  std::array<Complex, ComplexVector::kMaxDim> e{};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) e[i] += a(i, j) * v[j];
  }
  return ComplexVector(std::span<const Complex>(e.data(), n));
}

ComplexMatrix Tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != 2 || b.dim() != 2) {
    throw Error(ErrorCode::kDimension, "tensor: both factors must have dimension 2");
  }
  std::array<Complex, 16> e{};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l)
          e[(2 * i + k) * 4 + (2 * j + l)] = a(i, j) * b(k, l);
  return ComplexMatrix(std::span<const Complex>(e));
}

ComplexVector Tensor(const ComplexVector& a, const ComplexVector& b) {
  if (a.dim() != 2 || b.dim() != 2) {
    throw Error(ErrorCode::kDimension, "tensor: both factors must have dimension 2");
  }
  return ComplexVector{a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1]};
}

ComplexMatrix Adjoint(const ComplexMatrix& a) {
  const std::size_t n = a.dim();
  std::array<Complex, ComplexMatrix::kMaxDim * ComplexMatrix::kMaxDim> e{};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) e[j * n + i] = std::conj(a(i, j));
  return ComplexMatrix(std::span<const Complex>(e.data(), n * n));
}

double MaxAbs(const ComplexMatrix& a) {
  double best = 0.0;
  for (const Complex& z : a.entries()) best = std::max(best, std::abs(z));
  return best;
}

double MaxAbsDiff(const ComplexMatrix& a, const ComplexMatrix& b) {
  CheckSameDim(a.dim(), b.dim(), "compare");
  return MaxAbs(a - b);
}

double MaxAbsDiff(const ComplexVector& a, const ComplexVector& b) {
  CheckSameDim(a.dim(), b.dim(), "compare");
  double best = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) best = std::max(best, std::abs(a[i] - b[i]));
  return best;
}

bool IsUnitary(const ComplexMatrix& a, double tol) {
  if (!(tol > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "is_unitary: tolerance must be positive");
  }
  return MaxAbsDiff(Adjoint(a) * a, ComplexMatrix::Identity(a.dim())) <= tol;
}

ComplexMatrix MatExpSeries(const ComplexMatrix& a, double tol) {
  if (!(tol > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "mat_exp_series: tolerance must be positive");
  }
  constexpr int kTermBudget = 64;

  // Scale so that ||a / 2^s|| <= 1/2.
  int squarings = 0;
  double norm = InfNorm(a);
  while (norm > 0.5) {
    norm /= 2.0;
    ++squarings;
  }
  const ComplexMatrix scaled = a.Scaled(std::ldexp(1.0, -squarings));
  // Each squaring can roughly double the absolute error.
  const double term_tol = std::max(std::ldexp(tol, -squarings - 1), 1e-300);

  const std::size_t n = a.dim();
  ComplexMatrix sum = ComplexMatrix::Identity(n);
  ComplexMatrix term = ComplexMatrix::Identity(n);
  bool converged = false;
  for (int k = 1; k <= kTermBudget; ++k) {
    term = (term * scaled).Scaled(1.0 / k);
    sum = sum + term;
    // With ||scaled|| <= 1/2 the remaining tail is bounded by the last term.
    if (InfNorm(term) < term_tol) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    throw Error(ErrorCode::kConvergence, "mat_exp_series: term budget exhausted");
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

double Norm(const ComplexVector& v) {
  double acc = 0.0;
  for (const Complex& z : v.entries()) acc += std::norm(z);
  return std::sqrt(acc);
}

}  // namespace qgame
