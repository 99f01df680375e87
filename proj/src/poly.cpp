#include "skcf/poly.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace skcf {

Poly::Poly(std::vector<GaussRational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(GaussRational c) {
  if (!c.is_zero()) c_.push_back(std::move(c));
}

Poly Poly::monomial(GaussRational c, std::size_t deg) {
  std::vector<GaussRational> v(deg + 1);
  v[deg] = std::move(c);
  return Poly(std::move(v));
}

Poly Poly::linear_factor(const GaussRational& root) { return Poly({-root, GaussRational(1)}); }

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

GaussRational Poly::eval(const GaussRational& x) const {
  GaussRational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::complex<double> Poly::eval(std::complex<double> x) const {
  std::complex<double> acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_complex();
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<GaussRational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i)
    d[i - 1] = c_[i] * GaussRational(static_cast<long>(i));
  return Poly(std::move(d));
}

Poly Poly::monic() const {
  if (is_zero() || lead().is_one()) return *this;
  GaussRational inv = lead().inverse();
  std::vector<GaussRational> v = c_;
  for (auto& x : v) x *= inv;
  return Poly(std::move(v));
}

std::size_t Poly::valuation() const {
  std::size_t k = 0;
  while (k < c_.size() && c_[k].is_zero()) ++k;
  return k;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<GaussRational> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
  return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<GaussRational> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
  return Poly(std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GaussRational> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(v));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<GaussRational> rem = a.c_;
  std::vector<GaussRational> quo(a.c_.size() - b.c_.size() + 1);
  GaussRational inv = b.lead().inverse();
  const std::size_t db = b.c_.size() - 1;
  for (std::size_t k = quo.size(); k-- > 0;) {
    GaussRational q = rem[k + db] * inv;
    if (q.is_zero()) continue;
    quo[k] = q;
    for (std::size_t j = 0; j <= db; ++j) {
      if (!b.c_[j].is_zero()) rem[k + j] -= q * b.c_[j];
    }
  }
  rem.resize(db);
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

std::vector<std::pair<Poly, int>> squarefree_factorization(const Poly& f) {
  std::vector<std::pair<Poly, int>> out;
  if (f.degree() <= 0) return out;
  Poly fm = f.monic();
  Poly d = fm.derivative();
  Poly a0 = gcd(fm, d);
  Poly b = fm / a0;
  Poly c = d / a0;
  Poly dd = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    Poly ai = gcd(b, dd);
    b = b / ai;
    c = dd / ai;
    dd = c - b.derivative();
    if (ai.degree() > 0) out.emplace_back(ai, i);
  }
  return out;
}

bool UniPoly::is_exact() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Scalar& s) { return s.is_exact(); });
}

bool UniPoly::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Scalar& s) { return s.is_zero(); });
}

int UniPoly::degree() const {
  for (std::size_t i = coeffs.size(); i-- > 0;)
    if (!coeffs[i].is_zero()) return static_cast<int>(i);
  return -1;
}

Poly UniPoly::to_exact() const {
  std::vector<GaussRational> v;
  v.reserve(coeffs.size());
  for (const auto& s : coeffs) v.push_back(s.exact());
  return Poly(std::move(v));
}

namespace {

using CLD = std::complex<long double>;

CLD horner(const std::vector<CLD>& c, CLD x, CLD* deriv) {
  CLD p = 0, dp = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    dp = dp * x + p;
    p = p * x + c[i];
  }
  *deriv = dp;
  return p;
}

struct ComplexF {
  mpf_class re, im;
};

ComplexF mul(const ComplexF& a, const ComplexF& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

// Newton refinement of a simple root r of q at `bits` bits of precision.
ComplexF refine(const Poly& q, std::complex<double> r, mp_bitcnt_t bits) {
  std::vector<ComplexF> c;
  for (const auto& x : q.coeffs()) c.push_back({mpf_class(x.re, bits), mpf_class(x.im, bits)});
  ComplexF z{mpf_class(r.real(), bits), mpf_class(r.imag(), bits)};
  const int iterations = 8 + static_cast<int>(std::log2(static_cast<double>(bits)));
  for (int it = 0; it < iterations; ++it) {
    ComplexF p{mpf_class(0, bits), mpf_class(0, bits)}, dp = p;
    for (std::size_t i = c.size(); i-- > 0;) {
      dp = mul(dp, z);
      dp.re += p.re;
      dp.im += p.im;
      p = mul(p, z);
      p.re += c[i].re;
      p.im += c[i].im;
    }
    mpf_class den = dp.re * dp.re + dp.im * dp.im;
    if (den == 0) break;
    z.re -= (p.re * dp.re + p.im * dp.im) / den;
    z.im -= (p.im * dp.re - p.re * dp.im) / den;
  }
  return z;
}

mpz_class round_to_int(const mpf_class& x) {
  mpf_class shifted = x + 0.5;
  return mpz_class(floor(shifted));
}

// Candidate exact root z/L where L clears all denominators of the monic q:
// a Gaussian-rational root of q has L times it in Z[i].
std::vector<GaussRational> exact_candidates(const Poly& q, std::complex<double> r) {
  std::vector<GaussRational> out;
  mpz_class l = 1;
  std::size_t coeff_bits = 0;
  for (const auto& c : q.coeffs()) {
    l = lcm(l, mpz_class(c.re.get_den()));
    l = lcm(l, mpz_class(c.im.get_den()));
    coeff_bits = std::max({coeff_bits, mpz_sizeinbase(c.re.get_num_mpz_t(), 2),
                           mpz_sizeinbase(c.im.get_num_mpz_t(), 2)});
  }
  const std::size_t l_bits = mpz_sizeinbase(l.get_mpz_t(), 2);
  const auto bits = static_cast<mp_bitcnt_t>(128 + 2 * (l_bits + coeff_bits));
  ComplexF z = refine(q, r, bits);
  mpf_class lf(l, bits);
  out.emplace_back(mpq_class(round_to_int(z.re * lf), l), mpq_class(round_to_int(z.im * lf), l));
  out.back().re.canonicalize();
  out.back().im.canonicalize();
  bool snapped = false;
  ExtScalar s = snap(ExtScalar(Scalar(r)), 1e-7, 64, &snapped);
  if (snapped) out.push_back(s.value().exact());
  return out;
}

void merge_roots(std::vector<RootMult>& roots, double tol) {
  std::vector<RootMult> merged;
  for (auto& r : roots) {
    auto it = std::find_if(merged.begin(), merged.end(), [&](const RootMult& m) {
      return approx_eq(m.value, r.value, tol);
    });
    if (it == merged.end()) {
      merged.push_back(r);
    } else {
      it->multiplicity += r.multiplicity;
      if (!it->value.is_exact() && r.value.is_exact()) it->value = r.value;
    }
  }
  roots = std::move(merged);
}

void sort_roots(std::vector<RootMult>& roots) {
  std::stable_sort(roots.begin(), roots.end(), [](const RootMult& a, const RootMult& b) {
    if (a.value.is_exact() != b.value.is_exact()) return a.value.is_exact();
    return compare(a.value, b.value, 0.0) < 0;
  });
}

std::vector<std::complex<double>> to_complex_coeffs(const Poly& p) {
  std::vector<std::complex<double>> c;
  for (const auto& x : p.coeffs()) c.push_back(x.to_complex());
  return c;
}

}  // namespace

std::vector<std::complex<double>> numeric_roots(const std::vector<std::complex<double>>& coeffs) {
  std::size_t n = coeffs.size();
  while (n > 0 && coeffs[n - 1] == 0.0) --n;
  if (n <= 1) return {};
  const std::size_t deg = n - 1;
  std::vector<std::complex<double>> roots;
  if (deg == 1) {
    roots.push_back(-coeffs[0] / coeffs[1]);
  } else {
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(deg, deg);
    for (std::size_t i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
    for (std::size_t i = 0; i < deg; ++i) comp(i, deg - 1) = -coeffs[i] / coeffs[deg];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) roots.push_back(es.eigenvalues()(i));
  }
  std::vector<CLD> c(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(n));
  for (auto& r : roots) {
    CLD x = r;
    long double last = -1;
    for (int it = 0; it < 50; ++it) {
      CLD d;
      CLD p = horner(c, x, &d);
      if (d == CLD(0)) break;
      CLD step = p / d;
      long double s = std::abs(step);
      if (last >= 0 && s >= last) break;
      x -= step;
      last = s;
      if (s <= 1e-19L * std::max<long double>(1, std::abs(x))) break;
    }
    r = std::complex<double>(static_cast<double>(x.real()), static_cast<double>(x.imag()));
  }
  return roots;
}

std::vector<RootMult> poly_roots(const Poly& p, double tol) {
  if (p.is_zero()) throw InputError("poly_roots: zero polynomial");
  std::vector<RootMult> roots;
  for (const auto& [factor, mult] : squarefree_factorization(p)) {
    Poly rest = factor;
    bool progress = true;
    while (progress && rest.degree() > 0) {
      progress = false;
      for (const auto& z : numeric_roots(to_complex_coeffs(rest))) {
        for (const auto& cand : exact_candidates(rest, z)) {
          if (rest.eval(cand).is_zero()) {
            roots.push_back({ExtScalar(Scalar(cand)), mult});
            rest = rest / Poly::linear_factor(cand);
            progress = true;
            break;
          }
        }
      }
    }
    for (const auto& z : numeric_roots(to_complex_coeffs(rest))) {
      ComplexF fine = refine(rest, z, 256);
      roots.push_back({ExtScalar(Scalar::approx(fine.re.get_d(), fine.im.get_d())), mult});
    }
  }
  merge_roots(roots, tol);
  sort_roots(roots);
  return roots;
}

std::vector<RootMult> poly_roots(const UniPoly& p, double tol) {
  if (p.is_zero()) throw InputError("poly_roots: zero polynomial");
  if (p.is_exact()) return poly_roots(p.to_exact(), tol);
  std::vector<std::complex<double>> c;
  for (const auto& s : p.coeffs) c.push_back(s.to_complex());
  std::vector<RootMult> roots;
  for (const auto& z : numeric_roots(c)) roots.push_back({ExtScalar(Scalar(z)), 1});
  merge_roots(roots, tol);
  sort_roots(roots);
  return roots;
}

}  // namespace skcf
