#pragma once

#include <vector>

#include "skcf/poly.hpp"
#include "skcf/state.hpp"

namespace skcf {

/// Jordan block sizes of one eigenvalue, non-decreasing and positive.
using SizeSignature = std::vector<int>;

struct EigRecord {
  ExtScalar value;
  SizeSignature signature;

  friend bool operator==(const EigRecord&, const EigRecord&) = default;
};

/// Kronecker invariants of an m x n pencil mu*R + lambda*S.
///
/// The canonical form is the direct sum of an h x g zero block, right
/// singular blocks L_eps (eps x (eps+1)), left singular blocks L_nu^T
/// ((nu+1) x nu) and one Jordan-type block per entry of every eigenvalue
/// signature. Eigenvalues use the coordinate x = lambda/mu, i.e. they are
/// the roots of det(R + x S), with inf standing for singular S.
struct KroneckerStructure {
  std::size_t h = 0;
  std::size_t g = 0;
  std::vector<int> eps;
  std::vector<int> nu;
  std::vector<EigRecord> eigs;

  std::size_t total_rows() const;
  std::size_t total_cols() const;

  friend bool operator==(const KroneckerStructure&, const KroneckerStructure&) = default;
};

/// Sorts eps, nu and signatures, and orders eigenvalues by the C* order.
void normalize(KroneckerStructure& ks, double tol = kDefaultTol);

/// Throws InputError if ks violates its own invariants (unsorted or
/// non-positive sizes, empty signatures, repeated eigenvalues).
void validate(const KroneckerStructure& ks);

/// Full Kronecker structure. Exact pencils are analysed over Q(i): the
/// discrete invariants are exact and only irrational eigenvalues come back
/// approximate. Pencils with approximate entries use SVD rank decisions at
/// relative threshold tol (best effort).
KroneckerStructure kronecker_structure(const Pencil& p, double tol = kDefaultTol);

/// Direct-sum pencil of ks, blocks in structure order. A finite eigenvalue
/// x of size k gives R = -x I + H, S = I (H the upper shift), so that the
/// block reads lambda I + mu (H - x I); inf gives R = I, S = H.
Pencil build_pencil(const KroneckerStructure& ks);

bool check_dimensions(const KroneckerStructure& ks, std::size_t m, std::size_t n);

/// Monic invariant factors (nonzero Smith-form diagonal) of a polynomial
/// matrix over Q(i)[t].
std::vector<Poly> invariant_factors(Matrix<Poly> m);

}  // namespace skcf
