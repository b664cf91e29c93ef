// Copyright 2026 The qlval Authors
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

#include <cmath>
#include <complex>
#include <vector>

#include "qlval/errors.hpp"

namespace qlval {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

/** Dense row-major complex matrix. Small dimensions; no views, no aliasing. */
class CMatrix {
 public:
  CMatrix() : rows_(0), cols_(0) {}
  CMatrix(int rows, int cols)
      : rows_(rows), cols_(cols),
        data_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {
    if (rows < 0 || cols < 0) throw DimensionMismatch("negative matrix shape");
  }

  static CMatrix identity(int n) {
    CMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Complex& operator()(int i, int j) { return data_[idx(i, j)]; }
  const Complex& operator()(int i, int j) const { return data_[idx(i, j)]; }

  const CVector& data() const { return data_; }

  CVector column(int j) const {
    CVector c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  CMatrix adjoint() const {
    CMatrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
  }

  CMatrix operator*(const CMatrix& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape mismatch");
    CMatrix out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const Complex a = (*this)(i, k);
        if (a == Complex{}) continue;
        for (int j = 0; j < o.cols_; ++j) out(i, j) += a * o(k, j);
      }
    return out;
  }

  CMatrix operator+(const CMatrix& o) const {
    require_same_shape(o, "matrix sum");
    CMatrix out(rows_, cols_);
    for (size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k] + o.data_[k];
    return out;
  }

  CMatrix operator-(const CMatrix& o) const {
    require_same_shape(o, "matrix difference");
    CMatrix out(rows_, cols_);
    for (size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k] - o.data_[k];
    return out;
  }

  /** Entrywise max-modulus norm; the repo-wide comparison norm. */
  double max_abs() const {
    double m = 0.0;
    for (const Complex& z : data_) m = std::max(m, std::abs(z));
    return m;
  }

  bool approx_equal(const CMatrix& o, double eps) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    return (*this - o).max_abs() <= eps;
  }

 private:
  size_t idx(int i, int j) const {
    return static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j);
  }
  void require_same_shape(const CMatrix& o, const char* op) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw DimensionMismatch(std::string(op) + ": shape mismatch");
  }

  int rows_, cols_;
  CVector data_;
};

/** Outer product v v† (rank one whenever v is nonzero). */
inline CMatrix outer(const CVector& v) {
  CMatrix m(static_cast<int>(v.size()), static_cast<int>(v.size()));
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j)
      m(static_cast<int>(i), static_cast<int>(j)) = v[i] * std::conj(v[j]);
  return m;
}

/** Stack a on top of b (same column count). */
inline CMatrix vstack(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.cols()) throw DimensionMismatch("vstack: column count mismatch");
  CMatrix out(a.rows() + b.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) out(a.rows() + i, j) = b(i, j);
  return out;
}

inline CVector apply(const CMatrix& m, const CVector& v) {
  if (m.cols() != static_cast<int>(v.size()))
    throw DimensionMismatch("matrix-vector product shape mismatch");
  CVector out(static_cast<size_t>(m.rows()));
  for (int i = 0; i < m.rows(); ++i) {
    Complex acc{};
    for (int j = 0; j < m.cols(); ++j) acc += m(i, j) * v[static_cast<size_t>(j)];
    out[static_cast<size_t>(i)] = acc;
  }
  return out;
}

/** Hermitian inner product, conjugate-linear in the first argument. */
inline Complex inner(const CVector& a, const CVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("inner product length mismatch");
  Complex acc{};
  for (size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

inline double norm2(const CVector& v) {
  double acc = 0.0;
  for (const Complex& z : v) acc += std::norm(z);
  return std::sqrt(acc);
}

inline double max_abs(const CVector& v) {
  double m = 0.0;
  for (const Complex& z : v) m = std::max(m, std::abs(z));
  return m;
}

inline bool all_finite(const CVector& v) {
  for (const Complex& z : v)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

}  // namespace qlval
