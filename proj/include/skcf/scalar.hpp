#pragma once

#include <gmpxx.h>

#include <complex>
#include <stdexcept>
#include <string>
#include <variant>

namespace skcf {

/// Thrown for malformed or out-of-contract input (CLI exit code 2).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr double kDefaultTol = 1e-9;

/// Exact element of Q(i): re + i*im with canonical GMP rationals.
struct GaussRational {
  mpq_class re;
  mpq_class im;

  GaussRational() = default;
  GaussRational(long v) : re(v), im(0) {}  // NOLINT
  GaussRational(mpq_class r, mpq_class i = 0) : re(std::move(r)), im(std::move(i)) {
    re.canonicalize();
    im.canonicalize();
  }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_one() const { return re == 1 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }
  GaussRational conj() const { return {re, -im}; }
  mpq_class norm() const { return re * re + im * im; }
  GaussRational inverse() const;
  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

  friend GaussRational operator+(const GaussRational& a, const GaussRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussRational operator-(const GaussRational& a, const GaussRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussRational operator-(const GaussRational& a) { return {-a.re, -a.im}; }
  friend GaussRational operator*(const GaussRational& a, const GaussRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussRational operator/(const GaussRational& a, const GaussRational& b) {
    return a * b.inverse();
  }
  GaussRational& operator+=(const GaussRational& o) { return *this = *this + o; }
  GaussRational& operator-=(const GaussRational& o) { return *this = *this - o; }
  GaussRational& operator*=(const GaussRational& o) { return *this = *this * o; }
  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

/// Field element that is either exact (Q(i)) or approximate (complex double).
/// Arithmetic between exacts stays exact; anything touching an approx is approx.
class Scalar {
 public:
  using Approx = std::complex<double>;

  Scalar() : v_(GaussRational{}) {}
  Scalar(long v) : v_(GaussRational(v)) {}  // NOLINT
  Scalar(GaussRational q) : v_(std::move(q)) {}  // NOLINT
  Scalar(Approx z) : v_(z) {}  // NOLINT

  static Scalar rational(long num, long den = 1) {
    return GaussRational(mpq_class(num, den));
  }
  static Scalar gauss(long re, long im) { return GaussRational(re, im); }
  static Scalar approx(double re, double im = 0.0) { return Approx(re, im); }
  /// Parses "p/q" or "p" into an exact rational; throws InputError otherwise.
  static mpq_class parse_rational(const std::string& s);

  bool is_exact() const { return std::holds_alternative<GaussRational>(v_); }
  const GaussRational& exact() const;
  Approx to_complex() const;
  double abs() const { return std::abs(to_complex()); }
  bool is_zero() const;

  Scalar conj() const;
  Scalar inverse() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a);
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  /// Exact equality for exact pairs; bitwise complex equality otherwise.
  friend bool operator==(const Scalar& a, const Scalar& b);

  std::string to_string() const;

 private:
  std::variant<GaussRational, Approx> v_;
};

/// A point of the extended complex plane C u {inf}.
class ExtScalar {
 public:
  ExtScalar() = default;
  ExtScalar(Scalar s) : value_(std::move(s)) {}  // NOLINT
  ExtScalar(long v) : value_(v) {}  // NOLINT
  static ExtScalar infinity() {
    ExtScalar e;
    e.inf_ = true;
    return e;
  }

  bool is_inf() const { return inf_; }
  bool is_exact() const { return inf_ || value_.is_exact(); }
  const Scalar& value() const;

  friend bool operator==(const ExtScalar& a, const ExtScalar& b) {
    if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
    return a.value_ == b.value_;
  }

  std::string to_string() const { return inf_ ? "inf" : value_.to_string(); }

 private:
  bool inf_ = false;
  Scalar value_;
};

/// True iff both are inf, or |a-b| <= tol * max(1, |a|, |b|).
bool approx_eq(const ExtScalar& a, const ExtScalar& b, double tol = kDefaultTol);

/// Total order on C*: finite values by (re, im) lexicographically, inf greatest.
/// Exact pairs compare exactly. Pairs involving an approx value treat real
/// (then imaginary) parts within tol*max(1,|a|,|b|) as tied. Returns -1, 0, 1.
int compare(const ExtScalar& a, const ExtScalar& b, double tol = kDefaultTol);

/// Replaces an approx value by the Gaussian rational with denominators
/// <= max_den lying within tol of it, if any. Exact values pass through.
/// Sets *snapped when a replacement happened.
ExtScalar snap(const ExtScalar& z, double tol, long max_den = 64,
               bool* snapped = nullptr);

}  // namespace skcf
