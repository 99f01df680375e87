#pragma once

#include <array>
#include <map>
#include <string>
#include <tuple>

#include "skcf/matrix.hpp"

namespace skcf {

/// Matrix pencil mu*R + lambda*S with R, S of shape m x n.
struct Pencil {
  ScalarMatrix r;
  ScalarMatrix s;

  Pencil() = default;
  Pencil(ScalarMatrix r_, ScalarMatrix s_);
  static Pencil zero(std::size_t m, std::size_t n) { return {ScalarMatrix(m, n), ScalarMatrix(m, n)}; }

  std::size_t rows() const { return r.rows(); }
  std::size_t cols() const { return r.cols(); }
  bool is_exact() const { return all_exact(r) && all_exact(s); }

  friend bool operator==(const Pencil& a, const Pencil& b) { return a.r == b.r && a.s == b.s; }
};

/// Unnormalized pure state in C^2 (x) C^m (x) C^n with sparse amplitudes.
class State {
 public:
  using Index = std::array<std::size_t, 3>;

  State(std::size_t m, std::size_t n);

  std::size_t m() const { return m_; }
  std::size_t n() const { return n_; }
  /// Zero amplitudes are dropped, so iteration visits only stored entries.
  void set(const Index& idx, const Scalar& amp);
  Scalar get(const Index& idx) const;
  void add(const Index& idx, const Scalar& amp) { set(idx, get(idx) + amp); }
  const std::map<Index, Scalar>& amplitudes() const { return amps_; }
  bool is_zero() const { return amps_.empty(); }
  bool is_exact() const;

  /// Parses kets such as "|001> + |100> - 2|112>" or "(1+i)|011>".
  static State from_ket(const std::string& ket, std::size_t m, std::size_t n);

  friend bool operator==(const State& a, const State& b) {
    return a.m_ == b.m_ && a.n_ == b.n_ && a.amps_ == b.amps_;
  }

 private:
  std::size_t m_;
  std::size_t n_;
  std::map<Index, Scalar> amps_;
};

/// SLOCC operator A (x) B (x) C.
struct LocalOps {
  ScalarMatrix a;  // 2 x 2
  ScalarMatrix b;  // m x m
  ScalarMatrix c;  // n x n

  static LocalOps identity(std::size_t m, std::size_t n) {
    return {ScalarMatrix::identity(2), ScalarMatrix::identity(m), ScalarMatrix::identity(n)};
  }
};

Pencil pencil_of_state(const State& s);
State state_of_pencil(const Pencil& p);
/// Throws InputError on shape mismatch or a singular factor.
State apply_local_ops(const State& s, const LocalOps& ops, double tol = kDefaultTol);
std::tuple<std::size_t, std::size_t, std::size_t> local_ranks(const State& s,
                                                               double tol = kDefaultTol);
Pencil transpose_pencil(const Pencil& p);
/// Appends zero columns on party C until the state has n columns.
State pad_state(const State& s, std::size_t n);

/// "|001> + |100> + |112>", coefficients other than 1 prefixed.
std::string to_ket(const State& s);
/// One bracketed row per line, e.g. "[λ, μ, ·]".
std::string to_pencil_text(const Pencil& p);

}  // namespace skcf
