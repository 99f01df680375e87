#include <gtest/gtest.h>

#include "skcf/classify.hpp"
#include "skcf/kronecker.hpp"
#include "test_util.hpp"

namespace skcf {
namespace {

const ExtScalar kInf = ExtScalar::infinity();

Pencil table_pencil(const std::string& label) { return parse_pencil_rows(find_registry(label)->pencil); }

TEST(KroneckerStructure, ZeroPencil) {
  KroneckerStructure ks = kronecker_structure(Pencil::zero(2, 3));
  EXPECT_EQ(ks.h, 2u);
  EXPECT_EQ(ks.g, 3u);
  EXPECT_TRUE(ks.eps.empty());
  EXPECT_TRUE(ks.nu.empty());
  EXPECT_TRUE(ks.eigs.empty());
}

TEST(KroneckerStructure, Ghz) {
  Pencil ghz = parse_pencil_rows({"l 0", "0 l+m"});
  KroneckerStructure ks = kronecker_structure(ghz);
  EXPECT_EQ(ks.h + ks.g, 0u);
  EXPECT_TRUE(ks.eps.empty() && ks.nu.empty());
  EXPECT_EQ(ks.eigs, (std::vector<EigRecord>{{Scalar(-1), {1}}, {Scalar(0), {1}}}));
}

TEST(KroneckerStructure, W) {
  KroneckerStructure ks = kronecker_structure(parse_pencil_rows({"l m", "0 l"}));
  EXPECT_EQ(ks.eigs, (std::vector<EigRecord>{{Scalar(0), {2}}}));
  EXPECT_TRUE(ks.eps.empty() && ks.nu.empty());
}

TEST(KroneckerStructure, TableExamples) {
  KroneckerStructure abc3 = kronecker_structure(table_pencil("ABC-3"));
  EXPECT_EQ(abc3.eps, std::vector<int>{1});
  EXPECT_EQ(abc3.eigs.size(), 1u);
  EXPECT_EQ(abc3.eigs[0].signature, SizeSignature{1});

  KroneckerStructure abc5 = kronecker_structure(table_pencil("ABC-5"));
  EXPECT_EQ(abc5.eps, (std::vector<int>{1, 1}));
  EXPECT_TRUE(abc5.nu.empty());
  EXPECT_TRUE(abc5.eigs.empty());
}

TEST(KroneckerStructure, InfiniteEigenvalue) {
  // mu I + lambda H of size 2: S = H is singular.
  KroneckerStructure ks = kronecker_structure(parse_pencil_rows({"m l", "0 m"}));
  EXPECT_EQ(ks.eigs, (std::vector<EigRecord>{{kInf, {2}}}));
}

TEST(BuildPencil, Examples) {
  KroneckerStructure abc3;
  abc3.eps = {1};
  abc3.eigs = {{Scalar(0), {1}}};
  EXPECT_EQ(build_pencil(abc3), parse_pencil_rows({"l m 0", "0 0 l"}));

  KroneckerStructure abc11;
  abc11.eigs = {{Scalar(0), {2}}, {Scalar(-1), {1}}};
  EXPECT_EQ(build_pencil(abc11), parse_pencil_rows({"l m 0", "0 l 0", "0 0 l+m"}));

  KroneckerStructure abc;
  abc.h = abc.g = 1;
  abc.eigs = {{kInf, {1}}};
  EXPECT_EQ(build_pencil(abc), parse_pencil_rows({"0 0", "0 m"}));

  KroneckerStructure left;
  left.nu = {2};
  EXPECT_EQ(build_pencil(left), parse_pencil_rows({"l 0", "m l", "0 m"}));
}

TEST(BuildPencil, RejectsInvalidStructure) {
  KroneckerStructure bad;
  bad.eps = {0};
  EXPECT_THROW(build_pencil(bad), InputError);
  KroneckerStructure dup;
  dup.eigs = {{Scalar(1), {1}}, {Scalar(1), {2}}};
  EXPECT_THROW(build_pencil(dup), InputError);
  KroneckerStructure empty_sig;
  empty_sig.eigs = {{Scalar(1), {}}};
  EXPECT_THROW(build_pencil(empty_sig), InputError);
}

TEST(CheckDimensions, Examples) {
  KroneckerStructure ghz;
  ghz.eigs = {{Scalar(-1), {1}}, {Scalar(0), {1}}};
  EXPECT_TRUE(check_dimensions(ghz, 2, 2));
  KroneckerStructure abc3;
  abc3.eps = {1};
  abc3.eigs = {{Scalar(0), {1}}};
  EXPECT_TRUE(check_dimensions(abc3, 2, 3));
  EXPECT_FALSE(check_dimensions(abc3, 3, 3));
}

TEST(InvariantFactors, Diagonal) {
  GaussRational one(1), zero;
  Poly t({zero, one});
  Poly t1({one, one});
  Matrix<Poly> m(2, 2);
  m(0, 0) = t;
  m(1, 1) = t1;
  EXPECT_EQ(invariant_factors(m), (std::vector<Poly>{Poly(one), t * t1}));

  Matrix<Poly> sq(2, 2);
  sq(0, 0) = t;
  sq(1, 1) = t;
  EXPECT_EQ(invariant_factors(sq), (std::vector<Poly>{t, t}));

  Matrix<Poly> jordan(2, 2);
  jordan(0, 0) = t;
  jordan(0, 1) = Poly(one);
  jordan(1, 1) = t;
  EXPECT_EQ(invariant_factors(jordan), (std::vector<Poly>{Poly(one), t * t}));
}

TEST(KroneckerProperty, RoundTrip) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 200; ++i) {
    KroneckerStructure ks = testing::random_structure(rng);
    Pencil p = build_pencil(ks);
    KroneckerStructure back = kronecker_structure(p);
    EXPECT_EQ(back, ks);
    EXPECT_TRUE(check_dimensions(back, p.rows(), p.cols()));
  }
}

TEST(KroneckerProperty, InvariantUnderRowAndColumnChange) {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 100; ++i) {
    KroneckerStructure ks = testing::random_structure(rng, 5);
    Pencil p = build_pencil(ks);
    ScalarMatrix b = testing::random_invertible_matrix(p.rows(), rng, true);
    ScalarMatrix c = testing::random_invertible_matrix(p.cols(), rng, true);
    EXPECT_EQ(kronecker_structure(Pencil(b * p.r * c, b * p.s * c)), ks);
  }
}

TEST(KroneckerProperty, QubitCovariance) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 100; ++i) {
    KroneckerStructure ks = testing::random_structure(rng, 5);
    Pencil p = build_pencil(ks);
    ScalarMatrix a = testing::random_invertible_matrix(2, rng, true);
    Pencil mixed(a(0, 0) * p.r + a(0, 1) * p.s, a(1, 0) * p.r + a(1, 1) * p.s);
    KroneckerStructure expected = ks;
    Lft theta = lft_of_qubit_op(a);
    for (auto& rec : expected.eigs) rec.value = theta(rec.value);
    normalize(expected);
    EXPECT_EQ(kronecker_structure(mixed), expected);
  }
}

TEST(KroneckerProperty, TransposeDuality) {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 100; ++i) {
    KroneckerStructure ks = testing::random_structure(rng);
    KroneckerStructure dual = kronecker_structure(transpose_pencil(build_pencil(ks)));
    EXPECT_EQ(dual.h, ks.g);
    EXPECT_EQ(dual.g, ks.h);
    EXPECT_EQ(dual.eps, ks.nu);
    EXPECT_EQ(dual.nu, ks.eps);
    EXPECT_EQ(dual.eigs, ks.eigs);
  }
}

TEST(KroneckerProperty, RandomPencilsSatisfyBookkeeping) {
  std::mt19937_64 rng(47);
  for (int i = 0; i < 100; ++i) {
    std::size_t m = 1 + rng() % 4, n = 1 + rng() % 5;
    Pencil p(testing::random_matrix(m, n, rng, true, 0.6), testing::random_matrix(m, n, rng, true, 0.6));
    EXPECT_TRUE(check_dimensions(kronecker_structure(p), m, n));
  }
}

TEST(KroneckerProperty, IrrationalEigenvaluesComeBackApprox) {
  // det(R + x S) = x^2 - 2.
  Pencil p(ScalarMatrix{{0, 2}, {1, 0}}, ScalarMatrix::identity(2));
  KroneckerStructure ks = kronecker_structure(p);
  ASSERT_EQ(ks.eigs.size(), 2u);
  EXPECT_FALSE(ks.eigs[0].value.is_exact());
  EXPECT_NEAR(ks.eigs[0].value.value().to_complex().real(), -std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(ks.eigs[1].value.value().to_complex().real(), std::sqrt(2.0), 1e-12);
}

ScalarMatrix to_approx(const ScalarMatrix& m) {
  ScalarMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Scalar(m(i, j).to_complex());
  return out;
}

TEST(KroneckerNumeric, FloatGhz) {
  Pencil p(ScalarMatrix{{Scalar::approx(0.0), Scalar::approx(0.0)}, {Scalar::approx(0.0), Scalar::approx(1.0)}},
           ScalarMatrix{{Scalar::approx(1.0), Scalar::approx(0.0)}, {Scalar::approx(0.0), Scalar::approx(1.0)}});
  KroneckerStructure ks = kronecker_structure(p);
  ASSERT_EQ(ks.eigs.size(), 2u);
  EXPECT_TRUE(approx_eq(ks.eigs[0].value, Scalar(-1), 1e-9));
  EXPECT_TRUE(approx_eq(ks.eigs[1].value, Scalar(0), 1e-9));
}

TEST(KroneckerNumeric, ScrambledStructuresAgreeWithExactPath) {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 50; ++i) {
    KroneckerStructure ks = testing::random_structure(rng, 5);
    Pencil p = build_pencil(ks);
    ScalarMatrix b = testing::random_invertible_matrix(p.rows(), rng, true);
    ScalarMatrix c = testing::random_invertible_matrix(p.cols(), rng, true);
    Pencil scrambled(to_approx(b * p.r * c), to_approx(b * p.s * c));
    KroneckerStructure got = kronecker_structure(scrambled);
    EXPECT_EQ(got.h, ks.h);
    EXPECT_EQ(got.g, ks.g);
    EXPECT_EQ(got.eps, ks.eps);
    EXPECT_EQ(got.nu, ks.nu);
    ASSERT_EQ(got.eigs.size(), ks.eigs.size());
    for (std::size_t k = 0; k < ks.eigs.size(); ++k) {
      EXPECT_TRUE(approx_eq(got.eigs[k].value, ks.eigs[k].value, 1e-6));
      EXPECT_EQ(got.eigs[k].signature, ks.eigs[k].signature);
    }
  }
}

}  // namespace
}  // namespace skcf
