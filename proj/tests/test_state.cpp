#include <gtest/gtest.h>

#include "skcf/kronecker.hpp"
#include "skcf/state.hpp"
#include "test_util.hpp"

namespace skcf {
namespace {

TEST(PencilOfState, GhzRepresentative) {
  // (|0> + |1>)|11> + |100>
  State ghz = State::from_ket("|011> + |111> + |100>", 2, 2);
  Pencil p = pencil_of_state(ghz);
  EXPECT_EQ(p.r, (ScalarMatrix{{0, 0}, {0, 1}}));
  EXPECT_EQ(p.s, (ScalarMatrix{{1, 0}, {0, 1}}));
}

TEST(PencilOfState, WRepresentative) {
  Pencil p = pencil_of_state(State::from_ket("|001> + |100> + |111>", 2, 2));
  EXPECT_EQ(p.r, (ScalarMatrix{{0, 1}, {0, 0}}));
  EXPECT_EQ(p.s, (ScalarMatrix{{1, 0}, {0, 1}}));
}

TEST(PencilOfState, ZeroState) {
  Pencil p = pencil_of_state(State(2, 3));
  EXPECT_EQ(p, Pencil::zero(2, 3));
}

TEST(StateOfPencil, Examples) {
  Pencil abc3({{0, 1, 0}, {0, 0, 0}}, {{1, 0, 0}, {0, 0, 1}});
  EXPECT_EQ(to_ket(state_of_pencil(abc3)), "|001> + |100> + |112>");
  EXPECT_TRUE(state_of_pencil(Pencil::zero(3, 3)).is_zero());
  Pencil w({{0, 1}, {0, 0}}, {{1, 0}, {0, 1}});
  EXPECT_EQ(to_ket(state_of_pencil(w)), "|001> + |100> + |111>");
}

TEST(StateProperty, RoundTrip) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    Pencil p(testing::random_matrix(3, 4, rng, true, 0.5), testing::random_matrix(3, 4, rng, true, 0.5));
    State s = state_of_pencil(p);
    EXPECT_EQ(pencil_of_state(s), p);
    EXPECT_EQ(state_of_pencil(pencil_of_state(s)), s);
  }
}

TEST(ApplyLocalOps, IdentityIsNoOp) {
  State w = State::from_ket("|001> + |100> + |111>", 2, 2);
  EXPECT_EQ(apply_local_ops(w, LocalOps::identity(2, 2)), w);
}

TEST(ApplyLocalOps, QubitSwapExchangesSlices) {
  State w = State::from_ket("|001> + |100> + |111>", 2, 2);
  LocalOps ops = LocalOps::identity(2, 2);
  ops.a = ScalarMatrix{{0, 1}, {1, 0}};
  Pencil before = pencil_of_state(w);
  Pencil after = pencil_of_state(apply_local_ops(w, ops));
  EXPECT_EQ(after.r, before.s);
  EXPECT_EQ(after.s, before.r);
}

TEST(ApplyLocalOps, RowScalingKeepsStructure) {
  State ghz = State::from_ket("|011> + |111> + |100>", 2, 2);
  LocalOps ops = LocalOps::identity(2, 2);
  ops.b = ScalarMatrix{{2, 0}, {0, 1}};
  State moved = apply_local_ops(ghz, ops);
  Pencil p = pencil_of_state(moved);
  EXPECT_EQ(p.s, (ScalarMatrix{{2, 0}, {0, 1}}));
  EXPECT_EQ(kronecker_structure(p), kronecker_structure(pencil_of_state(ghz)));
}

TEST(ApplyLocalOps, Errors) {
  State w = State::from_ket("|001> + |100> + |111>", 2, 2);
  LocalOps singular = LocalOps::identity(2, 2);
  singular.c = ScalarMatrix{{1, 1}, {1, 1}};
  EXPECT_THROW(apply_local_ops(w, singular), InputError);
  EXPECT_THROW(apply_local_ops(w, LocalOps::identity(3, 2)), InputError);
}

TEST(LocalRanks, Examples) {
  EXPECT_EQ(local_ranks(State::from_ket("|011>", 2, 2)), std::make_tuple(1u, 1u, 1u));
  EXPECT_EQ(local_ranks(State::from_ket("|011> + |111> + |100>", 2, 2)), std::make_tuple(2u, 2u, 2u));
  // Pencil [[0, 0], [l, m]]: B sees a single row.
  EXPECT_EQ(local_ranks(State::from_ket("|011> + |110>", 2, 2)), std::make_tuple(2u, 1u, 2u));
  // Pencil [[0, l], [0, m]]: C sees a single column.
  EXPECT_EQ(local_ranks(State::from_ket("|011> + |101>", 2, 2)), std::make_tuple(2u, 2u, 1u));
}

TEST(StateProperty, LocalRanksInvariantUnderSlocc) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 50; ++t) {
    Pencil p(testing::random_matrix(3, 3, rng, false, 0.7), testing::random_matrix(3, 3, rng, false, 0.7));
    State s = state_of_pencil(p);
    State moved = apply_local_ops(s, random_local_ops(3, 3, rng));
    EXPECT_EQ(local_ranks(s), local_ranks(moved));
  }
}

TEST(StateProperty, BcOpsPreserveEigenvaluesAndIndices) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 50; ++t) {
    KroneckerStructure ks = testing::random_structure(rng, 5);
    State s = state_of_pencil(build_pencil(ks));
    LocalOps ops = random_local_ops(s.m(), s.n(), rng);
    ops.a = ScalarMatrix::identity(2);
    EXPECT_EQ(kronecker_structure(pencil_of_state(apply_local_ops(s, ops))), ks);
  }
}

TEST(TransposePencil, TableTransposes) {
  Pencil abc3({{0, 1, 0}, {0, 0, 0}}, {{1, 0, 0}, {0, 0, 1}});
  EXPECT_EQ(to_ket(state_of_pencil(transpose_pencil(abc3))), "|010> + |100> + |121>");
  Pencil abc4({{0, 1, 0}, {0, 0, 1}}, {{1, 0, 0}, {0, 1, 0}});
  EXPECT_EQ(to_ket(state_of_pencil(transpose_pencil(abc4))), "|010> + |021> + |100> + |111>");
  Pencil sym({{1, 2}, {2, 0}}, {{0, 1}, {1, 3}});
  EXPECT_EQ(transpose_pencil(sym), sym);
}

TEST(StateProperty, TransposeIsInvolution) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 50; ++t) {
    Pencil p(testing::random_matrix(2, 5, rng, true), testing::random_matrix(2, 5, rng, true));
    EXPECT_EQ(transpose_pencil(transpose_pencil(p)), p);
  }
}

TEST(Ket, ParsingAndRendering) {
  State s = State::from_ket("-2|001> + 1/2|100> - (1+2i)|111> + i|010>", 2, 2);
  EXPECT_EQ(s.get({0, 0, 1}), Scalar(-2));
  EXPECT_EQ(s.get({1, 0, 0}), Scalar::rational(1, 2));
  EXPECT_EQ(s.get({1, 1, 1}), Scalar::gauss(-1, -2));
  EXPECT_EQ(s.get({0, 1, 0}), Scalar::gauss(0, 1));
  EXPECT_EQ(to_ket(s), "-2|001> + (i)|010> + 1/2|100> + (-1-2i)|111>");
  EXPECT_EQ(State::from_ket(to_ket(s), 2, 2), s);
  EXPECT_THROW(State::from_ket("|0011>", 2, 2), InputError);
  EXPECT_THROW(State::from_ket("|031>", 2, 2), InputError);
}

TEST(Pad, AppendsZeroColumns) {
  State s = State::from_ket("|001> + |100>", 2, 2);
  State p = pad_state(s, 4);
  EXPECT_EQ(p.n(), 4u);
  EXPECT_EQ(p.amplitudes(), s.amplitudes());
  EXPECT_THROW(pad_state(s, 1), InputError);
}

TEST(PencilText, RendersBlocks) {
  Pencil p({{0, 1}, {0, 1}}, {{1, 0}, {0, 1}});
  EXPECT_EQ(to_pencil_text(p), "[λ, μ]\n[·, μ+λ]\n");
}

}  // namespace
}  // namespace skcf
