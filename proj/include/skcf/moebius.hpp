#pragma once

#include <array>

#include "skcf/matrix.hpp"

namespace skcf {

/// Linear fractional transformation z -> (a z + b) / (c z + d) on C*,
/// with ad - bc != 0. Coefficients are kept canonical: the first nonzero of
/// (a, b, c, d) is 1, so equal maps have equal coefficients.
class Lft {
 public:
  /// Throws InputError when ad - bc = 0.
  Lft(Scalar a, Scalar b, Scalar c, Scalar d);
  static Lft identity() { return {1, 0, 0, 1}; }

  const Scalar& a() const { return a_; }
  const Scalar& b() const { return b_; }
  const Scalar& c() const { return c_; }
  const Scalar& d() const { return d_; }
  bool is_exact() const;

  /// Poles map to inf; inf maps to a/c (inf when c = 0).
  ExtScalar operator()(const ExtScalar& z) const;

  friend bool operator==(const Lft& l, const Lft& r) {
    return l.a_ == r.a_ && l.b_ == r.b_ && l.c_ == r.c_ && l.d_ == r.d_;
  }

 private:
  Scalar a_, b_, c_, d_;
};

using Triple = std::array<ExtScalar, 3>;

/// The unique map sending x[i] to y[i]. Throws InputError on repeated points.
Lft from_three_points(const Triple& x, const Triple& y);

ExtScalar apply(const Lft& l, const ExtScalar& z);
/// compose(l1, l2)(z) = l1(l2(z)).
Lft compose(const Lft& l1, const Lft& l2);
Lft inverse(const Lft& l);

/// How the eigenvalue coordinate x = lambda/mu of a pencil moves when the
/// qubit factor acts by A, i.e. (R, S) -> (A00 R + A01 S, A10 R + A11 S):
/// x -> (A00 x - A01) / (A11 - A10 x). Throws InputError for singular A.
Lft lft_of_qubit_op(const ScalarMatrix& a);

}  // namespace skcf
