#include "skcf/kronecker.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace skcf {

std::size_t KroneckerStructure::total_rows() const {
  std::size_t m = h;
  for (int e : eps) m += static_cast<std::size_t>(e);
  for (int v : nu) m += static_cast<std::size_t>(v) + 1;
  for (const auto& rec : eigs)
    for (int s : rec.signature) m += static_cast<std::size_t>(s);
  return m;
}

std::size_t KroneckerStructure::total_cols() const {
  std::size_t n = g;
  for (int e : eps) n += static_cast<std::size_t>(e) + 1;
  for (int v : nu) n += static_cast<std::size_t>(v);
  for (const auto& rec : eigs)
    for (int s : rec.signature) n += static_cast<std::size_t>(s);
  return n;
}

bool check_dimensions(const KroneckerStructure& ks, std::size_t m, std::size_t n) {
  return ks.total_rows() == m && ks.total_cols() == n;
}

void normalize(KroneckerStructure& ks, double tol) {
  std::sort(ks.eps.begin(), ks.eps.end());
  std::sort(ks.nu.begin(), ks.nu.end());
  for (auto& rec : ks.eigs) std::sort(rec.signature.begin(), rec.signature.end());
  std::stable_sort(ks.eigs.begin(), ks.eigs.end(), [tol](const EigRecord& a, const EigRecord& b) {
    return compare(a.value, b.value, tol) < 0;
  });
}

void validate(const KroneckerStructure& ks) {
  auto positive_sorted = [](const std::vector<int>& v) {
    return std::is_sorted(v.begin(), v.end()) &&
           std::all_of(v.begin(), v.end(), [](int x) { return x > 0; });
  };
  if (!positive_sorted(ks.eps) || !positive_sorted(ks.nu))
    throw InputError("minimal indices must be positive and non-decreasing");
  for (std::size_t i = 0; i < ks.eigs.size(); ++i) {
    if (ks.eigs[i].signature.empty() || !positive_sorted(ks.eigs[i].signature))
      throw InputError("size signatures must be nonempty, positive, non-decreasing");
    for (std::size_t j = 0; j < i; ++j)
      if (approx_eq(ks.eigs[i].value, ks.eigs[j].value, 0.0))
        throw InputError("eigenvalues of a structure must be distinct");
  }
}

Pencil build_pencil(const KroneckerStructure& ks) {
  validate(ks);
  Pencil p = Pencil::zero(ks.total_rows(), ks.total_cols());
  std::size_t r0 = ks.h, c0 = ks.g;
  for (int e : ks.eps) {
    for (int i = 0; i < e; ++i) {
      p.s(r0 + i, c0 + i) = Scalar(1);
      p.r(r0 + i, c0 + i + 1) = Scalar(1);
    }
    r0 += static_cast<std::size_t>(e);
    c0 += static_cast<std::size_t>(e) + 1;
  }
  for (int v : ks.nu) {
    for (int i = 0; i < v; ++i) {
      p.s(r0 + i, c0 + i) = Scalar(1);
      p.r(r0 + i + 1, c0 + i) = Scalar(1);
    }
    r0 += static_cast<std::size_t>(v) + 1;
    c0 += static_cast<std::size_t>(v);
  }
  for (const auto& rec : ks.eigs) {
    for (int size : rec.signature) {
      for (int i = 0; i < size; ++i) {
        if (rec.value.is_inf()) {
          p.r(r0 + i, c0 + i) = Scalar(1);
          if (i + 1 < size) p.s(r0 + i, c0 + i + 1) = Scalar(1);
        } else {
          p.s(r0 + i, c0 + i) = Scalar(1);
          p.r(r0 + i, c0 + i) = -rec.value.value();
          if (i + 1 < size) p.r(r0 + i, c0 + i + 1) = Scalar(1);
        }
      }
      r0 += static_cast<std::size_t>(size);
      c0 += static_cast<std::size_t>(size);
    }
  }
  return p;
}

std::vector<Poly> invariant_factors(Matrix<Poly> a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<Poly> out;
  for (std::size_t k = 0; k < std::min(rows, cols); ++k) {
    for (;;) {
      std::size_t bi = rows, bj = cols;
      int best = -1;
      for (std::size_t i = k; i < rows; ++i)
        for (std::size_t j = k; j < cols; ++j)
          if (!a(i, j).is_zero() && (best < 0 || a(i, j).degree() < best)) {
            best = a(i, j).degree();
            bi = i;
            bj = j;
          }
      if (best < 0) return out;
      if (bi != k)
        for (std::size_t j = k; j < cols; ++j) std::swap(a(bi, j), a(k, j));
      if (bj != k)
        for (std::size_t i = k; i < rows; ++i) std::swap(a(i, bj), a(i, k));

      bool clean = true;
      for (std::size_t i = k + 1; i < rows; ++i) {
        if (a(i, k).is_zero()) continue;
        auto [q, rem] = divmod(a(i, k), a(k, k));
        for (std::size_t j = k; j < cols; ++j)
          if (!a(k, j).is_zero()) a(i, j) = a(i, j) - q * a(k, j);
        if (!rem.is_zero()) clean = false;
      }
      for (std::size_t j = k + 1; j < cols; ++j) {
        if (a(k, j).is_zero()) continue;
        auto [q, rem] = divmod(a(k, j), a(k, k));
        for (std::size_t i = k; i < rows; ++i)
          if (!a(i, k).is_zero()) a(i, j) = a(i, j) - q * a(i, k);
        if (!rem.is_zero()) clean = false;
      }
      if (!clean) continue;

      bool divides = true;
      for (std::size_t i = k + 1; i < rows && divides; ++i)
        for (std::size_t j = k + 1; j < cols; ++j)
          if (!a(i, j).is_zero() && !(a(i, j) % a(k, k)).is_zero()) {
            for (std::size_t jj = k; jj < cols; ++jj) a(k, jj) = a(k, jj) + a(i, jj);
            divides = false;
            break;
          }
      if (divides) break;
    }
    out.push_back(a(k, k).monic());
  }
  return out;
}

namespace {

using RankFn = std::size_t (*)(const ScalarMatrix&, double);

std::size_t exact_rank_fn(const ScalarMatrix& m, double) { return rank_exact(m); }

// Block Toeplitz matrix whose kernel holds the coefficient vectors of
// polynomial solutions v(t) = v_0 + ... + v_k t^k of (R + t S) v(t) = 0.
ScalarMatrix right_toeplitz(const ScalarMatrix& r, const ScalarMatrix& s, std::size_t k) {
  const std::size_t m = r.rows(), n = r.cols();
  ScalarMatrix t((k + 2) * m, (k + 1) * n);
  for (std::size_t blk = 0; blk <= k; ++blk)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        t(blk * m + i, blk * n + j) = r(i, j);
        t((blk + 1) * m + i, blk * n + j) = s(i, j);
      }
  return t;
}

// Minimal indices of the right polynomial kernel (zeros included), from the
// kernel dimensions N_k = sum_{eps_i <= k} (k - eps_i + 1).
std::vector<int> right_minimal_indices(const ScalarMatrix& r, const ScalarMatrix& s,
                                       std::size_t count, RankFn rank_of, double tol) {
  std::vector<int> out;
  if (count == 0) return out;
  const std::size_t n = r.cols();
  std::size_t prev_kernel = 0, prev_le = 0;
  for (std::size_t k = 0; out.size() < count; ++k) {
    if (k > r.rows() + 1) throw std::runtime_error("minimal index search did not terminate");
    ScalarMatrix t = right_toeplitz(r, s, k);
    std::size_t kernel = (k + 1) * n - rank_of(t, tol);
    std::size_t le = kernel - prev_kernel;  // #{eps_i <= k}
    for (std::size_t c = prev_le; c < le && out.size() < count; ++c)
      out.push_back(static_cast<int>(k));
    prev_kernel = kernel;
    prev_le = le;
  }
  return out;
}

// Zero minimal indices are the zero block; the rest are L blocks.
void split_zero_indices(const std::vector<int>& indices, std::size_t* zeros, std::vector<int>* rest) {
  for (int i : indices) {
    if (i == 0) {
      ++*zeros;
    } else {
      rest->push_back(i);
    }
  }
}

Matrix<Poly> poly_pencil(const ScalarMatrix& constant, const ScalarMatrix& linear) {
  Matrix<Poly> m(constant.rows(), constant.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      m(i, j) = Poly({constant(i, j).exact(), linear(i, j).exact()});
  return m;
}

// Splits square-free b by the multiplicity of its roots in q.
std::vector<std::pair<Poly, int>> split_by_multiplicity(const Poly& b, Poly q) {
  std::vector<std::pair<Poly, int>> pieces;
  Poly cur = gcd(b, q);
  Poly none = b / cur;
  if (none.degree() > 0) pieces.emplace_back(none.monic(), 0);
  for (int k = 1; cur.degree() > 0; ++k) {
    q = q / cur;
    Poly next = gcd(cur, q);
    Poly exact_k = cur / next;
    if (exact_k.degree() > 0) pieces.emplace_back(exact_k.monic(), k);
    cur = next;
  }
  return pieces;
}

std::vector<EigRecord> finite_eigs_exact(const std::vector<Poly>& factors, double tol) {
  std::vector<EigRecord> eigs;
  if (factors.empty() || factors.back().degree() <= 0) return eigs;
  const Poly& last = factors.back();
  Poly rad = (last / gcd(last, last.derivative())).monic();
  std::vector<std::pair<Poly, SizeSignature>> basis{{rad, {}}};
  for (const auto& d : factors) {
    if (d.degree() <= 0) continue;
    std::vector<std::pair<Poly, SizeSignature>> refined;
    for (const auto& [b, sig] : basis) {
      for (auto& [piece, mult] : split_by_multiplicity(b, d)) {
        SizeSignature s = sig;
        if (mult > 0) s.push_back(mult);
        refined.emplace_back(std::move(piece), std::move(s));
      }
    }
    basis = std::move(refined);
  }
  for (const auto& [b, sig] : basis) {
    for (const auto& root : poly_roots(b, tol)) eigs.push_back({root.value, sig});
  }
  return eigs;
}

KroneckerStructure structure_exact(const Pencil& p, double tol) {
  KroneckerStructure ks;
  const std::size_t m = p.rows(), n = p.cols();
  auto finite = invariant_factors(poly_pencil(p.r, p.s));
  const std::size_t nrank = finite.size();

  auto right = right_minimal_indices(p.r, p.s, n - nrank, exact_rank_fn, tol);
  auto left = right_minimal_indices(p.r.transpose(), p.s.transpose(), m - nrank, exact_rank_fn, tol);
  split_zero_indices(right, &ks.g, &ks.eps);
  split_zero_indices(left, &ks.h, &ks.nu);

  ks.eigs = finite_eigs_exact(finite, tol);
  if (nrank > 0) {
    auto reversed = invariant_factors(poly_pencil(p.s, p.r));
    SizeSignature sig;
    for (const auto& d : reversed) {
      auto v = d.valuation();
      if (v > 0) sig.push_back(static_cast<int>(v));
    }
    if (!sig.empty()) ks.eigs.push_back({ExtScalar::infinity(), sig});
  }
  return ks;
}

// --- approximate path -------------------------------------------------------

ScalarMatrix pencil_at(const Pencil& p, const Scalar& x) { return p.r + x * p.s; }

// Sum over Jordan blocks at x of min(k, size), read off the kernel of the
// block lower-triangular Taylor matrix with diagonal R + xS and subdiagonal S.
SizeSignature jordan_sizes(const ScalarMatrix& at, const ScalarMatrix& s, std::size_t right_count,
                           double tol, double scale) {
  const std::size_t m = at.rows(), n = at.cols();
  std::vector<std::size_t> counts;  // counts[k-1] = #{eta >= k}
  std::size_t prev = 0;
  for (std::size_t k = 1; k <= std::min(m, n) + 1; ++k) {
    ScalarMatrix w(k * m, k * n);
    for (std::size_t blk = 0; blk < k; ++blk)
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          w(blk * m + i, blk * n + j) = at(i, j);
          if (blk + 1 < k) w((blk + 1) * m + i, blk * n + j) = s(i, j);
        }
    std::size_t kernel = k * n - rank_numeric(w, tol, scale);
    std::size_t total = kernel >= k * right_count ? kernel - k * right_count : 0;
    std::size_t ge = total >= prev ? total - prev : 0;
    if (ge == 0) break;
    counts.push_back(ge);
    prev = total;
  }
  SizeSignature sig;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    std::size_t next = k + 1 < counts.size() ? counts[k + 1] : 0;
    for (std::size_t c = next; c < counts[k]; ++c) sig.push_back(static_cast<int>(k + 1));
  }
  std::sort(sig.begin(), sig.end());
  return sig;
}

KroneckerStructure structure_numeric(const Pencil& p, double tol) {
  KroneckerStructure ks;
  const std::size_t m = p.rows(), n = p.cols();
  const Scalar probes[] = {Scalar::approx(0.6180339887, 0.2718281828),
                           Scalar::approx(-1.4142135623, 0.5772156649),
                           Scalar::approx(0.3010299956, -1.7320508075)};
  double scale = 0.0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) scale += std::norm(p.r(i, j).to_complex()) + std::norm(p.s(i, j).to_complex());
  scale = std::sqrt(scale);
  std::size_t nrank = 0;
  for (const auto& t : probes) nrank = std::max(nrank, rank_numeric(pencil_at(p, t), tol, scale));

  auto right = right_minimal_indices(p.r, p.s, n - nrank, rank_numeric, tol);
  auto left = right_minimal_indices(p.r.transpose(), p.s.transpose(), m - nrank, rank_numeric, tol);
  split_zero_indices(right, &ks.g, &ks.eps);
  split_zero_indices(left, &ks.h, &ks.nu);
  if (nrank == 0) return ks;

  // Candidates: roots of det of a random nrank x nrank compression; genuine
  // eigenvalues are those where the full pencil loses rank.
  std::mt19937 rng(12345);
  std::normal_distribution<double> gauss;
  Eigen::MatrixXcd pl(nrank, m), pr(n, nrank), er(m, n), es(m, n);
  for (Eigen::Index i = 0; i < pl.size(); ++i) pl(i) = {gauss(rng), gauss(rng)};
  for (Eigen::Index i = 0; i < pr.size(); ++i) pr(i) = {gauss(rng), gauss(rng)};
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      er(i, j) = p.r(i, j).to_complex();
      es(i, j) = p.s(i, j).to_complex();
    }
  Eigen::MatrixXcd cr = pl * er * pr, cs = pl * es * pr;
  const std::size_t deg = nrank;
  Eigen::MatrixXcd vander(deg + 1, deg + 1);
  Eigen::VectorXcd vals(deg + 1);
  for (std::size_t j = 0; j <= deg; ++j) {
    std::complex<double> z = std::polar(1.0, 2.0 * M_PI * static_cast<double>(j) / static_cast<double>(deg + 1));
    for (std::size_t k = 0; k <= deg; ++k) vander(j, k) = std::pow(z, static_cast<double>(k));
    vals(j) = (cr + z * cs).determinant();
  }
  Eigen::VectorXcd coeffs = vander.fullPivLu().solve(vals);
  double cmax = coeffs.cwiseAbs().maxCoeff();
  std::vector<std::complex<double>> c(coeffs.data(), coeffs.data() + coeffs.size());
  for (auto& x : c)
    if (std::abs(x) <= 1e-10 * cmax) x = 0.0;

  const double cluster = std::sqrt(tol);
  std::vector<std::pair<std::complex<double>, int>> clusters;
  for (const auto& z : numeric_roots(c)) {
    auto it = std::find_if(clusters.begin(), clusters.end(), [&](const auto& cl) {
      return std::abs(cl.first / static_cast<double>(cl.second) - z) <=
             cluster * std::max(1.0, std::abs(z));
    });
    if (it == clusters.end()) {
      clusters.emplace_back(z, 1);
    } else {
      it->first += z;
      it->second += 1;
    }
  }
  for (const auto& [sum, count] : clusters) {
    Scalar x(sum / static_cast<double>(count));
    ScalarMatrix at = pencil_at(p, x);
    double at_scale = scale * std::max(1.0, std::abs(x.to_complex()));
    if (rank_numeric(at, cluster, at_scale) >= nrank) continue;
    auto sig = jordan_sizes(at, p.s, n - nrank, cluster, at_scale);
    if (!sig.empty()) ks.eigs.push_back({ExtScalar(x), sig});
  }
  if (rank_numeric(p.s, cluster, scale) < nrank) {
    auto sig = jordan_sizes(p.s, p.r, n - nrank, cluster, scale);
    if (!sig.empty()) ks.eigs.push_back({ExtScalar::infinity(), sig});
  }
  return ks;
}

}  // namespace

KroneckerStructure kronecker_structure(const Pencil& p, double tol) {
  KroneckerStructure ks = p.is_exact() ? structure_exact(p, tol) : structure_numeric(p, tol);
  normalize(ks, tol);
  if (!check_dimensions(ks, p.rows(), p.cols()))
    throw std::runtime_error("Kronecker structure does not account for the pencil dimensions");
  return ks;
}

}  // namespace skcf
