#include "skcf/moebius.hpp"

#include <cmath>

namespace skcf {

namespace {

bool near_zero(const Scalar& s, double scale) {
  if (s.is_exact()) return s.is_zero();
  return s.abs() <= 1e-300 || s.abs() <= 1e-15 * scale;
}

}  // namespace

Lft::Lft(Scalar a, Scalar b, Scalar c, Scalar d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  Scalar det = a_ * d_ - b_ * c_;
  double scale = std::max(a_.abs() * d_.abs(), b_.abs() * c_.abs());
  if (det.is_zero() || (!det.is_exact() && det.abs() <= 1e-14 * scale))
    throw InputError("linear fractional transformation with ad - bc = 0");
  Scalar* coeffs[] = {&a_, &b_, &c_, &d_};
  for (Scalar* p : coeffs) {
    if (p->is_zero()) continue;
    Scalar inv = p->inverse();
    for (Scalar* q : coeffs) *q = *q * inv;
    *p = Scalar(1);  // exact 1 even on the approximate path
    break;
  }
}

bool Lft::is_exact() const {
  return a_.is_exact() && b_.is_exact() && c_.is_exact() && d_.is_exact();
}

ExtScalar Lft::operator()(const ExtScalar& z) const {
  if (z.is_inf()) {
    if (c_.is_zero()) return ExtScalar::infinity();
    return ExtScalar(a_ / c_);
  }
  const Scalar& v = z.value();
  Scalar num = a_ * v + b_;
  Scalar den = c_ * v + d_;
  double scale = c_.abs() * v.abs() + d_.abs();
  if (near_zero(den, scale)) return ExtScalar::infinity();
  return ExtScalar(num / den);
}

ExtScalar apply(const Lft& l, const ExtScalar& z) { return l(z); }

Lft compose(const Lft& l1, const Lft& l2) {
  // Matrix product [[a1 b1][c1 d1]] * [[a2 b2][c2 d2]].
  return {l1.a() * l2.a() + l1.b() * l2.c(), l1.a() * l2.b() + l1.b() * l2.d(),
          l1.c() * l2.a() + l1.d() * l2.c(), l1.c() * l2.b() + l1.d() * l2.d()};
}

Lft inverse(const Lft& l) { return {l.d(), -l.b(), -l.c(), l.a()}; }

namespace {

// Homogeneous coordinates (u : v) with z = u / v; inf = (1 : 0).
std::pair<Scalar, Scalar> homogeneous(const ExtScalar& z) {
  if (z.is_inf()) return {Scalar(1), Scalar(0)};
  return {z.value(), Scalar(1)};
}

// Map sending x0 -> 0, x1 -> 1, x2 -> inf as a coefficient quadruple.
std::array<Scalar, 4> to_standard(const Triple& x) {
  auto [u0, v0] = homogeneous(x[0]);
  auto [u1, v1] = homogeneous(x[1]);
  auto [u2, v2] = homogeneous(x[2]);
  // z -> k (v0 z - u0) / (v2 z - u2), with k fixing x1 -> 1.
  Scalar at1_num = v0 * u1 - u0 * v1;
  Scalar at1_den = v2 * u1 - u2 * v1;
  return {at1_den * v0, -(at1_den * u0), at1_num * v2, -(at1_num * u2)};
}

bool distinct(const Triple& t) {
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (approx_eq(t[i], t[j], 0.0)) return false;
  return true;
}

}  // namespace

Lft from_three_points(const Triple& x, const Triple& y) {
  if (!distinct(x) || !distinct(y)) throw InputError("from_three_points needs distinct points");
  auto sx = to_standard(x);
  auto sy = to_standard(y);
  Lft to_std(sx[0], sx[1], sx[2], sx[3]);
  Lft from_std = inverse(Lft(sy[0], sy[1], sy[2], sy[3]));
  return compose(from_std, to_std);
}

Lft lft_of_qubit_op(const ScalarMatrix& a) {
  if (a.rows() != 2 || a.cols() != 2) throw InputError("qubit operator must be 2x2");
  Scalar det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  if (det.is_zero()) throw InputError("qubit operator is singular");
  return {a(0, 0), -a(0, 1), -a(1, 0), a(1, 1)};
}

}  // namespace skcf
