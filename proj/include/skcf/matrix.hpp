#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "skcf/scalar.hpp"

namespace skcf {

/// Dense row-major matrix with value semantics.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == T{}) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("matrix shape mismatch");
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
    return out;
  }

  friend Matrix operator*(const T& s, const Matrix& a) {
    Matrix out = a;
    for (auto& v : out.data_) v = s * v;
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using ScalarMatrix = Matrix<Scalar>;
using ScalarVector = std::vector<Scalar>;

bool all_exact(const ScalarMatrix& m);

/// Rank over Q(i). Throws InputError when an entry is approximate.
std::size_t rank_exact(const ScalarMatrix& m);

/// Basis of {v : M v = 0} over Q(i), one vector per free column of the
/// reduced row echelon form (free variable set to 1, others to 0), in
/// increasing free-column order. Throws InputError on approximate entries.
std::vector<ScalarVector> right_nullspace_exact(const ScalarMatrix& m);

/// Numerical rank: singular values above tol * sigma_max.
std::size_t rank_numeric(const ScalarMatrix& m, double tol);
/// Same, with singular values also compared against tol * scale, so a
/// matrix that is small relative to `scale` counts as rank deficient.
std::size_t rank_numeric(const ScalarMatrix& m, double tol, double scale);

/// Exact rank when every entry is exact, numerical rank otherwise.
std::size_t rank(const ScalarMatrix& m, double tol = kDefaultTol);

/// Determinant of a square matrix (exact when all entries are).
Scalar determinant(const ScalarMatrix& m);

}  // namespace skcf
