#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "skcf/scalar.hpp"

namespace skcf {

/// Univariate polynomial over Q(i), coefficients in ascending degree.
/// Trailing zeros are always trimmed, so the zero polynomial is empty.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<GaussRational> coeffs);
  Poly(GaussRational c);  // NOLINT
  static Poly monomial(GaussRational c, std::size_t deg);
  /// t - root
  static Poly linear_factor(const GaussRational& root);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<GaussRational>& coeffs() const { return c_; }
  const GaussRational& lead() const { return c_.back(); }
  GaussRational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : GaussRational(); }

  GaussRational eval(const GaussRational& x) const;
  std::complex<double> eval(std::complex<double> x) const;
  Poly derivative() const;
  Poly monic() const;
  /// Multiplicity of t = 0 as a root.
  std::size_t valuation() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Euclidean division; throws std::domain_error on a zero divisor.
  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
  friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

 private:
  void trim();
  std::vector<GaussRational> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(Poly a, Poly b);

/// Square-free decomposition f = lead * prod_i factors[i].first^factors[i].second
/// with pairwise coprime, monic, square-free, non-constant factors.
std::vector<std::pair<Poly, int>> squarefree_factorization(const Poly& f);

/// Polynomial with Scalar coefficients, ascending degree.
struct UniPoly {
  std::vector<Scalar> coeffs;

  bool is_exact() const;
  bool is_zero() const;
  int degree() const;
  Poly to_exact() const;
};

struct RootMult {
  ExtScalar value;
  int multiplicity = 0;
};

/// All roots of p with multiplicities summing to deg p. Gaussian-rational
/// roots of exact inputs are returned exactly; the rest are approximated to
/// about 1e-12 and roots closer than tol are merged. Order: exact roots
/// first in C* order, then approximate ones in C* order.
std::vector<RootMult> poly_roots(const UniPoly& p, double tol = kDefaultTol);

/// Same, for an exact polynomial.
std::vector<RootMult> poly_roots(const Poly& p, double tol = kDefaultTol);

/// Numerical roots of a polynomial given by complex coefficients (ascending),
/// polished by Newton iteration. Degree-0 input yields no roots.
std::vector<std::complex<double>> numeric_roots(const std::vector<std::complex<double>>& coeffs);

}  // namespace skcf
