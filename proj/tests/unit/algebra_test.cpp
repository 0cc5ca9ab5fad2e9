#include "nakayama/algebra.hpp"

#include <gtest/gtest.h>

#include <random>

#include "nakayama/error.hpp"

namespace nakayama {
namespace {

Indec S(int v) { return Indec::simple(v); }
Indec I(int v) { return Indec::interval(v); }

TEST(Rank, RejectsNonPositive) {
  EXPECT_THROW(Rank(0), std::domain_error);
  EXPECT_THROW(Rank(-3), std::domain_error);
  EXPECT_EQ(Rank(1).value(), 1);
}

TEST(Indecomposables, CanonicalOrder) {
  EXPECT_EQ(all_indecomposables(Rank(1)), (std::vector<Indec>{S(1)}));
  EXPECT_EQ(all_indecomposables(Rank(2)), (std::vector<Indec>{S(1), I(1), S(2)}));
  EXPECT_EQ(all_indecomposables(Rank(4)), (std::vector<Indec>{S(1), I(1), S(2), I(2), S(3), I(3), S(4)}));
  for (int n = 1; n <= 12; ++n) {
    const auto mods = all_indecomposables(Rank(n));
    ASSERT_EQ(mods.size(), static_cast<std::size_t>(2 * n - 1));
    for (std::size_t i = 0; i + 1 < mods.size(); ++i) EXPECT_LT(mods[i], mods[i + 1]);
    for (const auto& m : mods) EXPECT_TRUE(m.valid_for(Rank(n)));
  }
}

TEST(Indecomposables, Validity) {
  EXPECT_FALSE(S(0).valid_for(Rank(3)));
  EXPECT_FALSE(S(4).valid_for(Rank(3)));
  EXPECT_FALSE(I(3).valid_for(Rank(3)));
  EXPECT_TRUE(I(2).valid_for(Rank(3)));
}

TEST(TopSocle, Examples) {
  EXPECT_EQ(top(I(2)), S(2));
  EXPECT_EQ(top(S(5)), S(5));
  EXPECT_EQ(top(I(6)), S(6));
  EXPECT_EQ(socle(I(2)), S(3));
  EXPECT_EQ(socle(S(5)), S(5));
  EXPECT_EQ(socle(I(1)), S(2));
}

TEST(CoverEnvelope, Examples) {
  const Rank n(5);
  EXPECT_EQ(projective_cover(S(1), n), I(1));
  EXPECT_EQ(projective_cover(S(5), n), S(5));
  EXPECT_EQ(projective_cover(I(3), n), I(3));
  EXPECT_EQ(injective_envelope(S(2)), I(1));
  EXPECT_EQ(injective_envelope(S(1)), S(1));
  EXPECT_EQ(injective_envelope(I(2)), I(2));
}

TEST(CoverEnvelope, TopOfCoverSocleOfEnvelope) {
  for (int n = 1; n <= 10; ++n)
    for (int v = 1; v <= n; ++v) {
      EXPECT_EQ(top(projective_cover(S(v), Rank(n))), S(v));
      EXPECT_EQ(socle(injective_envelope(S(v))), S(v));
    }
}

TEST(Syzygy, Examples) {
  const Rank n(5);
  EXPECT_EQ(syzygy(S(1), n), S(2));
  EXPECT_EQ(syzygy(S(5), n), std::nullopt);
  EXPECT_EQ(syzygy(I(2), n), std::nullopt);
  EXPECT_EQ(cosyzygy(S(5)), S(4));
  EXPECT_EQ(cosyzygy(S(1)), std::nullopt);
  EXPECT_EQ(cosyzygy(I(1)), std::nullopt);
}

// Iterating syzygy pdim times lands on a projective; once more, on nothing.
TEST(Syzygy, LengthMatchesProjectiveDimension) {
  for (int n = 1; n <= 10; ++n) {
    const Rank rank(n);
    for (int v = 1; v <= n; ++v) {
      const auto dims = hom_dims(S(v), rank);
      std::optional<Indec> m = S(v);
      for (int i = 0; i < dims.projective; ++i) m = syzygy(*m, rank);
      ASSERT_TRUE(m.has_value());
      EXPECT_TRUE(is_projective(*m, rank));
      EXPECT_EQ(syzygy(*m, rank), std::nullopt);

      m = S(v);
      for (int i = 0; i < dims.injective; ++i) m = cosyzygy(*m);
      ASSERT_TRUE(m.has_value());
      EXPECT_TRUE(is_injective(*m));
      EXPECT_EQ(cosyzygy(*m), std::nullopt);
    }
  }
}

TEST(HomDims, ExamplesAndGlobalDimension) {
  EXPECT_EQ(hom_dims(S(1), Rank(4)), (HomologicalDims{3, 0}));
  EXPECT_EQ(hom_dims(S(6), Rank(6)), (HomologicalDims{0, 5}));
  EXPECT_EQ(hom_dims(I(2), Rank(5)), (HomologicalDims{0, 0}));
  for (int n = 1; n <= 10; ++n) {
    int global = 0;
    for (const auto& m : all_indecomposables(Rank(n))) global = std::max(global, hom_dims(m, Rank(n)).projective);
    EXPECT_EQ(global, n - 1);
  }
}

TEST(HomDim, Examples) {
  EXPECT_EQ(hom_dim(I(2), I(1)), 1);
  EXPECT_EQ(hom_dim(I(1), I(2)), 0);
  EXPECT_EQ(hom_dim(S(3), S(3)), 1);
  EXPECT_EQ(hom_dim(S(3), I(2)), 1);
  EXPECT_EQ(hom_dim(S(2), I(2)), 0);
}

TEST(ExtDim, Examples) {
  EXPECT_EQ(ext_dim(2, S(1), S(3)), 1);
  EXPECT_EQ(ext_dim(1, S(3), S(1)), 0);
  EXPECT_EQ(ext_dim(1, I(2), S(4)), 0);
  EXPECT_EQ(ext_dim(100, S(1), S(3)), 0);
  EXPECT_THROW(ext_dim(0, S(1), S(2)), std::domain_error);
}

TEST(Exceptionality, EveryIndecomposable) {
  for (int n = 1; n <= 8; ++n)
    for (const auto& m : all_indecomposables(Rank(n))) {
      EXPECT_EQ(hom_dim(m, m), 1);
      for (int k = 1; k < n + 2; ++k) EXPECT_EQ(ext_dim(k, m, m), 0);
    }
}

TEST(Text, Examples) {
  EXPECT_EQ(to_string(S(3)), "[3]");
  EXPECT_EQ(to_string(I(6)), "[6,7]");
  EXPECT_EQ(parse_indec("[12]"), S(12));
  EXPECT_EQ(parse_indec("[9,10]"), I(9));
}

TEST(Text, RejectsMalformed) {
  for (const char* bad : {"", "[", "[]", "[0]", "[01]", "[1,3]", "[2,1]", "[1, 2]", " [1]", "[1]x", "1", "[-1]", "[1,2"}) {
    EXPECT_THROW(parse_indec(bad), ParseError) << bad;
  }
  try {
    parse_indec("[1,3]");
  } catch (const ParseError& e) {
    EXPECT_EQ(e.token(), "[1,3]");
  }
}

TEST(Text, RoundTripProperty) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> vertex(1, 100000);
  std::bernoulli_distribution simple(0.5);
  for (int trial = 0; trial < 2000; ++trial) {
    const Indec m = simple(rng) ? S(vertex(rng)) : I(vertex(rng));
    EXPECT_EQ(parse_indec(to_string(m)), m);
  }
}

}  // namespace
}  // namespace nakayama
