#include "skcf/canonical.hpp"

#include <algorithm>

namespace skcf {

bool graded_lex_less(const SizeSignature& a, const SizeSignature& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string to_string(NormalizationMode mode) {
  return mode == NormalizationMode::kRestricted ? "restricted" : "all-triples";
}

NormalizationMode parse_mode(const std::string& s) {
  if (s == "restricted") return NormalizationMode::kRestricted;
  if (s == "all-triples" || s == "all_triples") return NormalizationMode::kAllTriples;
  throw InputError("unknown normalization mode '" + s + "'");
}

std::size_t CanonicalForm::rows() const { return structure_of(*this).total_rows(); }
std::size_t CanonicalForm::cols() const { return structure_of(*this).total_cols(); }

bool same_form(const CanonicalForm& a, const CanonicalForm& b, double tol) {
  if (a.h != b.h || a.g != b.g || a.eps != b.eps || a.nu != b.nu || a.eta != b.eta) return false;
  if (a.xhat.size() != b.xhat.size()) return false;
  for (std::size_t i = 0; i < a.xhat.size(); ++i)
    if (!approx_eq(a.xhat[i], b.xhat[i], tol)) return false;
  return true;
}

namespace {

// Insertion sort; the tolerant comparison is not a strict weak order near
// ties, which std::sort does not tolerate.
void sort_values(std::vector<ExtScalar>::iterator first, std::vector<ExtScalar>::iterator last,
                 double tol) {
  for (auto it = first; it != last; ++it) {
    for (auto j = it; j != first && compare(*j, *(j - 1), tol) < 0; --j) std::iter_swap(j, j - 1);
  }
}

std::vector<SizeSignature> position_signatures(const SignatureSequence& eta) {
  std::vector<SizeSignature> sigs;
  for (const auto& grp : eta)
    for (std::size_t i = 0; i < grp.count; ++i) sigs.push_back(grp.sig);
  return sigs;
}

}  // namespace

std::pair<SignatureSequence, std::vector<ExtScalar>> order_signatures(
    const std::vector<EigRecord>& eigs, double tol) {
  SignatureSequence eta;
  for (const auto& rec : eigs) {
    SizeSignature sig = rec.signature;
    std::sort(sig.begin(), sig.end());
    auto it = std::find_if(eta.begin(), eta.end(), [&](const SignatureGroup& g) { return g.sig == sig; });
    if (it == eta.end()) {
      eta.push_back({sig, 1});
    } else {
      ++it->count;
    }
  }
  std::sort(eta.begin(), eta.end(), [](const SignatureGroup& a, const SignatureGroup& b) {
    if (a.count != b.count) return a.count < b.count;
    return graded_lex_less(a.sig, b.sig);
  });
  std::vector<ExtScalar> x;
  for (const auto& grp : eta) {
    auto begin = static_cast<std::ptrdiff_t>(x.size());
    for (const auto& rec : eigs) {
      SizeSignature sig = rec.signature;
      std::sort(sig.begin(), sig.end());
      if (sig == grp.sig) x.push_back(rec.value);
    }
    sort_values(x.begin() + begin, x.end(), tol);
  }
  return {eta, x};
}

std::vector<ExtScalar> eta_ordered(std::vector<ExtScalar> y, const SignatureSequence& eta,
                                   double tol) {
  std::size_t total = 0;
  for (const auto& grp : eta) total += grp.count;
  if (y.size() != total) throw InputError("eta_ordered: sequence length does not match eta");
  auto it = y.begin();
  for (const auto& grp : eta) {
    auto end = it + static_cast<std::ptrdiff_t>(grp.count);
    sort_values(it, end, tol);
    it = end;
  }
  return y;
}

int compare_sequences(const std::vector<ExtScalar>& a, const std::vector<ExtScalar>& b,
                      double tol) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = compare(a[i], b[i], tol);
    if (c != 0) return c;
  }
  return (a.size() > b.size()) - (a.size() < b.size());
}

bool same_type(const Triple& u, const Triple& v, const std::vector<EigRecord>& eigs, double tol) {
  auto sig_of = [&](const ExtScalar& z) -> const SizeSignature& {
    for (const auto& rec : eigs)
      if (approx_eq(rec.value, z, tol)) return rec.signature;
    throw InputError("same_type: value " + z.to_string() + " is not an eigenvalue");
  };
  for (int i = 0; i < 3; ++i)
    if (sig_of(u[i]) != sig_of(v[i])) return false;
  return true;
}

std::vector<ExtScalar> normalize_eigenvalues(const std::vector<ExtScalar>& x,
                                             const SignatureSequence& eta,
                                             NormalizationMode mode, double tol, bool* snapped) {
  const std::size_t r = x.size();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (approx_eq(x[i], x[j], tol)) throw InputError("normalize_eigenvalues: repeated eigenvalue");
  const std::vector<ExtScalar> anchors{ExtScalar(0), ExtScalar(1), ExtScalar::infinity()};
  if (r <= 3) return {anchors.begin(), anchors.begin() + static_cast<std::ptrdiff_t>(r)};

  auto sigs = position_signatures(eta);
  if (sigs.size() != r) throw InputError("normalize_eigenvalues: x does not match eta");
  std::vector<ExtScalar> best;
  bool any_snap = false;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k) {
        if (i == j || j == k || i == k) continue;
        if (mode == NormalizationMode::kRestricted &&
            (sigs[i] != sigs[0] || sigs[j] != sigs[1] || sigs[k] != sigs[2]))
          continue;
        Lft theta = from_three_points({x[i], x[j], x[k]}, {anchors[0], anchors[1], anchors[2]});
        std::vector<ExtScalar> y(r);
        bool cand_snap = false;
        for (std::size_t p = 0; p < r; ++p) {
          if (p == i || p == j || p == k) {
            y[p] = anchors[p == i ? 0 : (p == j ? 1 : 2)];
          } else {
            y[p] = snap(theta(x[p]), tol, 64, &cand_snap);
          }
        }
        y = eta_ordered(std::move(y), eta, tol);
        if (best.empty() || compare_sequences(y, best, tol) < 0) {
          best = std::move(y);
          any_snap = cand_snap;
        }
      }
  if (snapped != nullptr) *snapped = any_snap;
  return best;
}

CanonicalForm canonical_form(const KroneckerStructure& ks, double tol, NormalizationMode mode) {
  CanonicalForm cf;
  cf.h = ks.h;
  cf.g = ks.g;
  cf.eps = ks.eps;
  cf.nu = ks.nu;
  std::sort(cf.eps.begin(), cf.eps.end());
  std::sort(cf.nu.begin(), cf.nu.end());
  auto [eta, x] = order_signatures(ks.eigs, tol);
  cf.eta = std::move(eta);
  cf.xhat = normalize_eigenvalues(x, cf.eta, mode, tol, &cf.snapped);
  cf.mode = mode;
  cf.tol = tol;
  return cf;
}

CanonicalForm canonicalize(const State& s, double tol, NormalizationMode mode) {
  return canonical_form(kronecker_structure(pencil_of_state(s), tol), tol, mode);
}

KroneckerStructure structure_of(const CanonicalForm& cf) {
  KroneckerStructure ks;
  ks.h = cf.h;
  ks.g = cf.g;
  ks.eps = cf.eps;
  ks.nu = cf.nu;
  auto sigs = position_signatures(cf.eta);
  if (sigs.size() != cf.xhat.size()) throw InputError("canonical form: xhat does not match eta");
  for (std::size_t i = 0; i < sigs.size(); ++i) ks.eigs.push_back({cf.xhat[i], sigs[i]});
  return ks;
}

bool equivalent(const State& a, const State& b, double tol, NormalizationMode mode) {
  if (a.m() != b.m()) throw InputError("equivalent: states differ in the dimension of party B");
  const std::size_t n = std::max(a.n(), b.n());
  return same_form(canonicalize(pad_state(a, n), tol, mode), canonicalize(pad_state(b, n), tol, mode),
                   tol);
}

}  // namespace skcf
