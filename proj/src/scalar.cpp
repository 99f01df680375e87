#include "skcf/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>

namespace skcf {

GaussRational GaussRational::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  mpq_class n = norm();
  return {re / n, -im / n};
}

mpq_class Scalar::parse_rational(const std::string& s) {
  mpq_class q;
  std::string t = s;
  if (!t.empty() && t.front() == '+') t.erase(0, 1);
  if (t.empty() || q.set_str(t, 10) != 0 || q.get_den() == 0) {
    throw InputError("malformed rational '" + s + "'");
  }
  q.canonicalize();
  return q;
}

const GaussRational& Scalar::exact() const {
  if (const auto* q = std::get_if<GaussRational>(&v_)) return *q;
  throw std::domain_error("exact value requested from approximate scalar");
}

Scalar::Approx Scalar::to_complex() const {
  if (const auto* q = std::get_if<GaussRational>(&v_)) return q->to_complex();
  return std::get<Approx>(v_);
}

bool Scalar::is_zero() const {
  if (const auto* q = std::get_if<GaussRational>(&v_)) return q->is_zero();
  return std::get<Approx>(v_) == Approx(0.0, 0.0);
}

Scalar Scalar::conj() const {
  if (is_exact()) return exact().conj();
  return std::conj(std::get<Approx>(v_));
}

Scalar Scalar::inverse() const {
  if (is_exact()) return exact().inverse();
  if (is_zero()) throw std::domain_error("division by zero");
  return Approx(1.0) / std::get<Approx>(v_);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return a.exact() + b.exact();
  return a.to_complex() + b.to_complex();
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return a.exact() - b.exact();
  return a.to_complex() - b.to_complex();
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return a.exact() * b.exact();
  return a.to_complex() * b.to_complex();
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

Scalar operator-(const Scalar& a) {
  if (a.is_exact()) return -a.exact();
  return -a.to_complex();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return a.exact() == b.exact();
  if (a.is_exact() != b.is_exact()) return false;
  return a.to_complex() == b.to_complex();
}

namespace {

std::string format_double(double d) {
  std::ostringstream os;
  os.precision(17);
  os << d;
  return os.str();
}

}  // namespace

std::string Scalar::to_string() const {
  if (is_exact()) {
    const auto& q = exact();
    if (q.is_real()) return q.re.get_str();
    std::string im_part;
    if (q.im == 1) {
      im_part = "i";
    } else if (q.im == -1) {
      im_part = "-i";
    } else {
      im_part = q.im.get_str() + "i";
    }
    if (sgn(q.re) == 0) return im_part;
    return q.re.get_str() + (sgn(q.im) > 0 ? "+" : "") + im_part;
  }
  auto z = to_complex();
  if (z.imag() == 0.0) return format_double(z.real());
  return format_double(z.real()) + (z.imag() >= 0 ? "+" : "") +
         format_double(z.imag()) + "i";
}

const Scalar& ExtScalar::value() const {
  if (inf_) throw std::domain_error("finite value requested from infinity");
  return value_;
}

bool approx_eq(const ExtScalar& a, const ExtScalar& b, double tol) {
  if (a.is_inf() || b.is_inf()) return a.is_inf() && b.is_inf();
  if (a.value().is_exact() && b.value().is_exact()) {
    if (a.value() == b.value()) return true;
  }
  auto za = a.value().to_complex();
  auto zb = b.value().to_complex();
  double scale = std::max({1.0, std::abs(za), std::abs(zb)});
  return std::abs(za - zb) <= tol * scale;
}

int compare(const ExtScalar& a, const ExtScalar& b, double tol) {
  if (a.is_inf() || b.is_inf()) {
    if (a.is_inf() && b.is_inf()) return 0;
    return a.is_inf() ? 1 : -1;
  }
  const Scalar& x = a.value();
  const Scalar& y = b.value();
  if (x.is_exact() && y.is_exact()) {
    int c = cmp(x.exact().re, y.exact().re);
    if (c == 0) c = cmp(x.exact().im, y.exact().im);
    return (c > 0) - (c < 0);
  }
  auto za = x.to_complex();
  auto zb = y.to_complex();
  double eps = tol * std::max({1.0, std::abs(za), std::abs(zb)});
  if (std::abs(za.real() - zb.real()) > eps) return za.real() < zb.real() ? -1 : 1;
  if (std::abs(za.imag() - zb.imag()) > eps) return za.imag() < zb.imag() ? -1 : 1;
  return 0;
}

namespace {

std::optional<mpq_class> snap_component(double x, double tol, long max_den) {
  double eps = tol * std::max(1.0, std::abs(x));
  if (!std::isfinite(x) || std::abs(x) > 1e15) return std::nullopt;
  for (long q = 1; q <= max_den; ++q) {
    double p = std::round(x * static_cast<double>(q));
    if (std::abs(p / static_cast<double>(q) - x) <= eps) {
      mpq_class r{mpz_class(p), mpz_class(q)};
      r.canonicalize();
      return r;
    }
  }
  return std::nullopt;
}

}  // namespace

ExtScalar snap(const ExtScalar& z, double tol, long max_den, bool* snapped) {
  if (z.is_exact()) return z;
  auto c = z.value().to_complex();
  auto re = snap_component(c.real(), tol, max_den);
  auto im = snap_component(c.imag(), tol, max_den);
  if (!re || !im) return z;
  if (snapped != nullptr) *snapped = true;
  return ExtScalar(Scalar(GaussRational(*re, *im)));
}

}  // namespace skcf
