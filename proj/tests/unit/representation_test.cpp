#include "nakayama/representation.hpp"

#include <gtest/gtest.h>

namespace nakayama::rep {
namespace {

Indec S(int v) { return Indec::simple(v); }
Indec I(int v) { return Indec::interval(v); }

TEST(LinearAlgebra, RankAndNullSpace) {
  Matrix m(2, 3);
  m(0, 0) = 1; m(0, 1) = 2; m(0, 2) = 3;
  m(1, 0) = 2; m(1, 1) = 4; m(1, 2) = 6;
  EXPECT_EQ(rank(m), 1u);
  const Matrix k = null_space(m);
  EXPECT_EQ(k.cols(), 2u);
  EXPECT_TRUE((m * k).is_zero());
}

TEST(LinearAlgebra, SolveInSpan) {
  Matrix basis(3, 2);
  basis(0, 0) = 1; basis(1, 1) = 1; basis(2, 0) = 1; basis(2, 1) = 1;
  Matrix target(3, 1);
  target(0, 0) = 2; target(1, 0) = Scalar(1, 3); target(2, 0) = Scalar(7, 3);
  const Matrix x = solve_in_span(basis, target);
  EXPECT_EQ(basis * x, target);

  Matrix outside(3, 1);
  outside(0, 0) = 1;
  EXPECT_THROW(solve_in_span(basis, outside), std::invalid_argument);
}

TEST(Representations, IndecomposablesAreValid) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& m : all_indecomposables(Rank(n))) {
      const auto r = from_indec(m, Rank(n));
      EXPECT_TRUE(is_valid(r));
      EXPECT_EQ(r.total_dim(), m.is_simple() ? 1u : 2u);
    }
  EXPECT_THROW(from_indec(I(3), Rank(3)), std::domain_error);
}

TEST(Representations, PathOfLengthTwoMustVanish) {
  Representation r = zero_representation(Rank(3));
  r.dims = {1, 1, 1};
  r.arrows = {Matrix::identity(1), Matrix::identity(1)};
  EXPECT_FALSE(is_valid(r));
}

TEST(HomOracle, Examples) {
  EXPECT_EQ(hom_dim_oracle(I(2), I(1), Rank(3)), 1u);
  EXPECT_EQ(hom_dim_oracle(I(1), I(2), Rank(3)), 0u);
  EXPECT_EQ(hom_dim_oracle(S(1), S(2), Rank(3)), 0u);
  EXPECT_EQ(hom_dim_oracle(S(3), I(2), Rank(3)), 1u);
  EXPECT_EQ(hom_dim_oracle(S(2), I(2), Rank(3)), 0u);
  EXPECT_EQ(hom_dim_oracle(I(6), S(6), Rank(7)), 1u);
  EXPECT_EQ(hom_dim_oracle(S(2), I(1), Rank(7)), 1u);
  for (const auto& m : all_indecomposables(Rank(5))) EXPECT_EQ(hom_dim_oracle(m, m, Rank(5)), 1u);
}

TEST(HomOracle, BasisElementsAreMorphisms) {
  const Rank n(4);
  for (const auto& a : all_indecomposables(n))
    for (const auto& b : all_indecomposables(n)) {
      const auto ra = from_indec(a, n);
      const auto rb = from_indec(b, n);
      for (const auto& f : hom_basis(ra, rb)) EXPECT_TRUE(is_morphism(ra, rb, f));
    }
}

TEST(HomOracle, MatchesClosedFormUpToRankTen) {
  for (int n = 1; n <= 10; ++n) {
    const Rank rank(n);
    for (const auto& a : all_indecomposables(rank))
      for (const auto& b : all_indecomposables(rank))
        ASSERT_EQ(hom_dim_oracle(a, b, rank), static_cast<std::size_t>(hom_dim(a, b)))
            << to_string(a) << " " << to_string(b) << " n=" << n;
  }
}

TEST(Resolution, OfFirstSimpleUsesEveryProjective) {
  const Rank n(5);
  const auto res = projective_resolution(from_indec(S(1), n));
  ASSERT_EQ(res.terms.size(), 5u);  // P_1, P_2, P_3, P_4, P_5 = [5]
  for (std::size_t i = 0; i < res.terms.size(); ++i) {
    const auto expected = indecomposable_projective(static_cast<int>(i) + 1, n);
    EXPECT_EQ(res.terms[i].dims, expected.dims) << "term " << i;
  }
  // d_i . d_{i+1} = 0
  for (std::size_t i = 1; i + 1 < res.differentials.size(); ++i) {
    const auto composite = compose(res.differentials[i], res.differentials[i + 1]);
    for (const auto& c : composite.components) EXPECT_TRUE(c.is_zero());
  }
}

TEST(Resolution, ProjectiveIsItsOwnResolution) {
  const Rank n(4);
  for (int v = 1; v <= 3; ++v) EXPECT_EQ(projective_resolution(from_indec(I(v), n)).terms.size(), 1u);
  EXPECT_EQ(projective_resolution(from_indec(S(4), n)).terms.size(), 1u);
}

TEST(ExtOracle, Examples) {
  EXPECT_EQ(ext_dim_oracle(1, S(1), S(2), Rank(2)), 1u);
  EXPECT_EQ(ext_dim_oracle(3, S(1), S(4), Rank(4)), 1u);
  EXPECT_EQ(ext_dim_oracle(2, S(1), S(4), Rank(4)), 0u);
  EXPECT_EQ(ext_dim_oracle(1, S(3), S(1), Rank(4)), 0u);
  for (int k = 1; k <= 4; ++k)
    for (int v = 1; v <= 3; ++v)
      for (const auto& target : all_indecomposables(Rank(4))) EXPECT_EQ(ext_dim_oracle(k, I(v), target, Rank(4)), 0u);
}

TEST(ExtOracle, MatchesClosedFormUpToRankEight) {
  for (int n = 1; n <= 8; ++n) {
    const Rank rank(n);
    for (int k = 1; k <= n - 1; ++k)
      for (const auto& a : all_indecomposables(rank))
        for (const auto& b : all_indecomposables(rank))
          ASSERT_EQ(ext_dim_oracle(k, a, b, rank), static_cast<std::size_t>(ext_dim(k, a, b)))
              << "Ext^" << k << "(" << to_string(a) << "," << to_string(b) << ") n=" << n;
  }
}

// A decomposable module: Hom is additive in each argument.
TEST(HomOracle, AdditiveOnDirectSums) {
  const Rank n(3);
  Representation sum = zero_representation(n);
  sum.dims = {1, 1, 1};  // [1] + [2,3]
  sum.arrows = {Matrix(1, 1), Matrix::identity(1)};
  ASSERT_TRUE(is_valid(sum));
  for (const auto& m : all_indecomposables(n)) {
    const auto rm = from_indec(m, n);
    const std::size_t expected = hom_basis(from_indec(S(1), n), rm).size() + hom_basis(from_indec(I(2), n), rm).size();
    EXPECT_EQ(hom_basis(sum, rm).size(), expected);
  }
}

}  // namespace
}  // namespace nakayama::rep
