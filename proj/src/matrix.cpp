#include "skcf/matrix.hpp"

#include <Eigen/Dense>

#include <algorithm>

namespace skcf {

bool all_exact(const ScalarMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_exact()) return false;
  return true;
}

namespace {

using GMatrix = Matrix<GaussRational>;

GMatrix to_gauss(const ScalarMatrix& m) {
  if (!all_exact(m)) throw InputError("exact routine given approximate entries");
  GMatrix g(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) g(r, c) = m(r, c).exact();
  return g;
}

// In-place reduction to reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(GMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && a(p, col).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != row)
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(p, c), a(row, c));
    GaussRational inv = a(row, col).inverse();
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col).is_zero()) continue;
      GaussRational f = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) {
        if (!a(row, c).is_zero()) a(r, c) -= f * a(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

// Forward elimination only; enough for rank.
std::size_t echelon_rank(GMatrix a) {
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && a(p, col).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != row)
      for (std::size_t c = col; c < a.cols(); ++c) std::swap(a(p, c), a(row, c));
    GaussRational inv = a(row, col).inverse();
    for (std::size_t r = row + 1; r < a.rows(); ++r) {
      if (a(r, col).is_zero()) continue;
      GaussRational f = a(r, col) * inv;
      for (std::size_t c = col; c < a.cols(); ++c) {
        if (!a(row, c).is_zero()) a(r, c) -= f * a(row, c);
      }
    }
    ++row;
  }
  return row;
}

}  // namespace

std::size_t rank_exact(const ScalarMatrix& m) { return echelon_rank(to_gauss(m)); }

std::vector<ScalarVector> right_nullspace_exact(const ScalarMatrix& m) {
  GMatrix a = to_gauss(m);
  auto pivots = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<ScalarVector> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    ScalarVector v(a.cols(), Scalar(0));
    v[free] = Scalar(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = Scalar(-a(i, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank_numeric(const ScalarMatrix& m, double tol) { return rank_numeric(m, tol, 0.0); }

std::size_t rank_numeric(const ScalarMatrix& m, double tol, double scale) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::MatrixXcd e(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) e(r, c) = m(r, c).to_complex();
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(e);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  const double cut = tol * std::max(sv(0), scale);
  std::size_t k = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cut) ++k;
  return k;
}

std::size_t rank(const ScalarMatrix& m, double tol) {
  return all_exact(m) ? rank_exact(m) : rank_numeric(m, tol);
}

Scalar determinant(const ScalarMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (all_exact(m)) {
    GMatrix a = to_gauss(m);
    GaussRational det(1);
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t p = col;
      while (p < n && a(p, col).is_zero()) ++p;
      if (p == n) return Scalar(0);
      if (p != col) {
        for (std::size_t c = 0; c < n; ++c) std::swap(a(p, c), a(col, c));
        det = -det;
      }
      det *= a(col, col);
      GaussRational inv = a(col, col).inverse();
      for (std::size_t r = col + 1; r < n; ++r) {
        if (a(r, col).is_zero()) continue;
        GaussRational f = a(r, col) * inv;
        for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
      }
    }
    return det;
  }
  Eigen::MatrixXcd e(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) e(r, c) = m(r, c).to_complex();
  return Scalar(e.determinant());
}

}  // namespace skcf
