#pragma once

#include <string>
#include <utility>
#include <vector>

#include "skcf/kronecker.hpp"
#include "skcf/moebius.hpp"

namespace skcf {

/// Shorter signatures first; equal lengths compare lexicographically.
bool graded_lex_less(const SizeSignature& a, const SizeSignature& b);

struct SignatureGroup {
  SizeSignature sig;
  std::size_t count = 0;

  friend bool operator==(const SignatureGroup&, const SignatureGroup&) = default;
};

/// Distinct size signatures ordered by ascending multiplicity, ties broken
/// by graded lexicographic order.
using SignatureSequence = std::vector<SignatureGroup>;

enum class NormalizationMode { kRestricted, kAllTriples };

std::string to_string(NormalizationMode mode);
/// Accepts "restricted", "all-triples" and "all_triples".
NormalizationMode parse_mode(const std::string& s);

/// State Kronecker canonical form: the structural invariants of the pencil
/// plus the normalized eigenvalue sequence xhat, grouped as in eta.
struct CanonicalForm {
  std::size_t h = 0;
  std::size_t g = 0;
  std::vector<int> eps;
  std::vector<int> nu;
  SignatureSequence eta;
  std::vector<ExtScalar> xhat;

  // Settings the form was computed with; not part of the class identity.
  NormalizationMode mode = NormalizationMode::kRestricted;
  double tol = kDefaultTol;
  bool snapped = false;

  std::size_t rows() const;
  std::size_t cols() const;
};

/// Integers exactly, xhat elementwise within tol.
bool same_form(const CanonicalForm& a, const CanonicalForm& b, double tol = kDefaultTol);

/// Returns eta and the eigenvalues arranged group by group, each group
/// sorted in the C* order.
std::pair<SignatureSequence, std::vector<ExtScalar>> order_signatures(
    const std::vector<EigRecord>& eigs, double tol = kDefaultTol);

/// Sorts y within each eta group. Throws InputError on a length mismatch.
std::vector<ExtScalar> eta_ordered(std::vector<ExtScalar> y, const SignatureSequence& eta,
                                   double tol = kDefaultTol);

/// Lexicographic comparison of equal-length sequences in the C* order.
int compare_sequences(const std::vector<ExtScalar>& a, const std::vector<ExtScalar>& b,
                      double tol = kDefaultTol);

/// Positionwise signature match of two eigenvalue triples taken from eigs.
/// Throws InputError if a value is not an eigenvalue of eigs.
bool same_type(const Triple& u, const Triple& v, const std::vector<EigRecord>& eigs,
               double tol = kDefaultTol);

/// Replaces the eta-ordered eigenvalues x by canonical representatives:
/// a prefix of (0, 1, inf) when there are at most three, otherwise the
/// smallest eta-ordered image of x under the maps sending an admissible
/// triple to (0, 1, inf). Restricted mode admits triples with the same
/// signatures as (x1, x2, x3); all-triples mode admits every ordered triple.
std::vector<ExtScalar> normalize_eigenvalues(const std::vector<ExtScalar>& x,
                                             const SignatureSequence& eta,
                                             NormalizationMode mode, double tol = kDefaultTol,
                                             bool* snapped = nullptr);

CanonicalForm canonical_form(const KroneckerStructure& ks, double tol = kDefaultTol,
                             NormalizationMode mode = NormalizationMode::kRestricted);

CanonicalForm canonicalize(const State& s, double tol = kDefaultTol,
                           NormalizationMode mode = NormalizationMode::kRestricted);

/// Kronecker structure carrying xhat as its eigenvalues.
KroneckerStructure structure_of(const CanonicalForm& cf);

/// SLOCC equivalence by canonical-form comparison. States with different n
/// are compared after zero-padding party C; differing m throws InputError.
bool equivalent(const State& a, const State& b, double tol = kDefaultTol,
                NormalizationMode mode = NormalizationMode::kRestricted);

}  // namespace skcf
