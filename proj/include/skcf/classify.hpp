#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "skcf/canonical.hpp"

namespace skcf {

/// One SLOCC class of 2 x m x n states.
struct ClassEntry {
  std::string label;  // paper label, or a structural label when unregistered
  std::size_t m = 0;
  std::size_t n = 0;
  CanonicalForm form;
  std::string ket;  // representative state
};

/// A class representative as printed in the published 2 x 3 x n table.
struct RegistryEntry {
  std::string label;
  std::size_t m;  // local ranks of B and C for the printed representative
  std::size_t n;
  std::vector<std::string> pencil;  // rows, entries "0", "l", "m", "l+m"
  std::string ket;
  CanonicalForm form;  // canonical form of the printed pencil
};

/// The 26 labelled classes, in table order.
const std::vector<RegistryEntry>& registry();
const RegistryEntry* find_registry(const std::string& label);

/// Pencil from rows of "0" / "l" / "m" / "l+m" entries (l = lambda, m = mu).
Pencil parse_pencil_rows(const std::vector<std::string>& rows);

/// All classes of nonzero 2 x m x n states, found by exhausting the integer
/// solutions of the block bookkeeping. Without include_degenerate only
/// full local ranks for B and C (h = g = 0) are listed. Throws InputError
/// when the slice contains a continuous family (four or more eigenvalues).
std::vector<ClassEntry> enumerate_classes(std::size_t m, std::size_t n, bool include_degenerate);

/// Union of enumerate_classes(m, k, ...) for k = 1..n_max, each class
/// listed once, at the smallest k where it occurs.
std::vector<ClassEntry> enumerate_classes_up_to(std::size_t m, std::size_t n_max,
                                                bool include_degenerate);

State representative_state(const CanonicalForm& cf);

/// Paper label of the class of cf (a form of a 2 x m x n state), if it is
/// one of the registered 2 x 3 x n classes.
std::optional<std::string> paper_label(const CanonicalForm& cf, std::size_t m, std::size_t n);

/// Stable label such as "h0g0|e:1,1|n:|eigs:(1)@0".
std::string structural_label(const CanonicalForm& cf);

/// Forms equal up to the zero block, i.e. the same class after embedding.
bool same_class(const CanonicalForm& a, const CanonicalForm& b, double tol = kDefaultTol);

/// Invertible local operators with Gaussian-rational entries whose real and
/// imaginary parts are p/q, p in [-9, 9], q in [1, 9].
LocalOps random_local_ops(std::size_t m, std::size_t n, std::mt19937_64& rng);

struct OrbitReport {
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::uint64_t seed = 0;
  double max_eig_deviation = 0.0;
};

/// Canonicalizes `trials` random SLOCC images of s and counts those whose
/// form differs from that of s.
OrbitReport orbit_check(const State& s, std::size_t trials, std::uint64_t seed,
                        double tol = kDefaultTol,
                        NormalizationMode mode = NormalizationMode::kRestricted);

}  // namespace skcf
