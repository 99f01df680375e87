#pragma once

#include <random>

#include "skcf/classify.hpp"

namespace skcf::testing {

inline Scalar random_small_rational(std::mt19937_64& rng, bool complex = false) {
  std::uniform_int_distribution<long> num(-6, 6), den(1, 4);
  long a = num(rng), b = den(rng);
  long c = complex ? num(rng) : 0, d = den(rng);
  return GaussRational(mpq_class(a, b), mpq_class(c, d));
}

inline ScalarMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng,
                                  bool complex = false, double zero_prob = 0.3) {
  std::bernoulli_distribution zero(zero_prob);
  ScalarMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (!zero(rng)) m(i, j) = random_small_rational(rng, complex);
  return m;
}

inline ScalarMatrix random_invertible_matrix(std::size_t k, std::mt19937_64& rng, bool complex = false) {
  for (;;) {
    ScalarMatrix m = random_matrix(k, k, rng, complex, 0.0);
    if (rank_exact(m) == k) return m;
  }
}

inline State random_state(std::size_t m, std::size_t n, std::mt19937_64& rng, bool complex = false) {
  Pencil p(random_matrix(m, n, rng, complex, 0.0), random_matrix(m, n, rng, complex, 0.0));
  return state_of_pencil(p);
}

/// Random valid structure with at most `max_rows` rows, exact eigenvalues.
inline KroneckerStructure random_structure(std::mt19937_64& rng, std::size_t max_rows = 7) {
  for (;;) {
    std::uniform_int_distribution<int> small(0, 2), idx(1, 3), nvals(0, 3);
    KroneckerStructure ks;
    ks.h = static_cast<std::size_t>(small(rng)) / 2;
    ks.g = static_cast<std::size_t>(small(rng)) / 2;
    for (int i = small(rng); i > 0; --i) ks.eps.push_back(idx(rng));
    for (int i = small(rng) / 2; i > 0; --i) ks.nu.push_back(idx(rng));
    int r = nvals(rng);
    std::vector<ExtScalar> values;
    while (static_cast<int>(values.size()) < r) {
      ExtScalar v = std::bernoulli_distribution(0.15)(rng) ? ExtScalar::infinity()
                                                           : ExtScalar(random_small_rational(rng, true));
      bool dup = false;
      for (const auto& w : values) dup = dup || w == v;
      if (!dup) values.push_back(v);
    }
    for (const auto& v : values) {
      SizeSignature sig;
      for (int i = 1 + small(rng) / 2; i > 0; --i) sig.push_back(1 + small(rng) / 2);
      ks.eigs.push_back({v, sig});
    }
    normalize(ks);
    std::size_t rows = ks.total_rows(), cols = ks.total_cols();
    if (rows == 0 || cols == 0 || rows > max_rows || cols > max_rows) continue;
    return ks;
  }
}

}  // namespace skcf::testing
