#include <random>

#include <gtest/gtest.h>

#include "equichow/error.hpp"
#include "equichow/graded.hpp"
#include "equichow/quotient.hpp"
#include "oracles.hpp"
#include "printers.hpp"

using namespace equichow;

namespace {

Representation rank_one(const std::vector<std::int64_t>& w) {
  CharacterLattice L(1);
  std::vector<Character> chars;
  for (auto x : w) chars.emplace_back(std::vector<std::int64_t>{x});
  return Representation(L, chars);
}

Polynomial T(const std::string& s) { return parse_polynomial(s, CharacterLattice(1).ring()); }

}  // namespace

TEST(ChiClass, WeightedProjectiveExamples) {
  auto V = rank_one({1, 2, 2});
  EXPECT_EQ(chi_class(InvariantSubspace::origin(), V), T("4*t^3"));
  EXPECT_EQ(chi_class(InvariantSubspace::from_kept({1, 2}), V), T("t"));
  EXPECT_EQ(chi_class(InvariantSubspace::from_kept({2}), V), T("2*t^2"));
  EXPECT_EQ(chi_class(InvariantSubspace::from_kept({0, 1, 2}), V), T("1"));
  EXPECT_EQ(chi_class(InvariantSubspace::from_quotient_weights({Character({2})}), V), T("2*t"));
}

TEST(ChiClass, InvalidSubspaces) {
  auto V = rank_one({1, 2});
  EXPECT_THROW(chi_class(InvariantSubspace::from_kept({5}), V), InvalidArgument);
  EXPECT_THROW(InvariantSubspace::from_kept({0, 0}), InvalidArgument);
  EXPECT_THROW(chi_class(InvariantSubspace::from_quotient_weights({Character({3})}), V), InvalidArgument);
  EXPECT_THROW(chi_class(InvariantSubspace::from_quotient_weights({Character({2}), Character({2})}), V),
               InvalidArgument);
  EXPECT_THROW(chi_class(InvariantSubspace::from_quotient_weights({Character({1, 0})}), V),
               InvalidArgument);
}

TEST(ChiClass, OriginRemovalIsProductOfWeights) {
  for (std::size_t k = 1; k <= 4; ++k) {
    std::vector<std::int64_t> w(k, 1);
    for (;;) {
      auto V = rank_one(w);
      mpz_class product = 1;
      for (auto x : w) product *= static_cast<long>(x);
      auto expected = Polynomial(V.lattice().ring(), Rational(product),
                                 Monomial::variable(*V.lattice().ring(), 0, static_cast<std::uint32_t>(k)));
      EXPECT_EQ(chi_class(InvariantSubspace::origin(), V), expected);
      std::size_t i = 0;
      while (i < k && w[i] == 4) w[i++] = 1;
      if (i == k) break;
      ++w[i];
    }
  }
}

TEST(Quotient, ProjectiveLineOverQ) {
  QuotientScenario S{rank_one({1, 1}), {InvariantSubspace::origin()}, {}};
  auto R = quotient_presentation(S);
  EXPECT_EQ(R.to_string(), "Q[t]/(t^2)");
  EXPECT_EQ(rational_graded_rank(R, 1), 1u);
  EXPECT_EQ(rational_graded_rank(R, 2), 0u);
}

TEST(Quotient, WeightedProjectiveIntegral) {
  QuotientScenario S{rank_one({1, 2, 2}), {InvariantSubspace::origin()}, {}};
  auto R = integral_presentation(S);
  EXPECT_EQ(R.to_string(), "Z[t]/(4*t^3)");
  for (std::int64_t d = 0; d <= 2; ++d) EXPECT_EQ(graded_piece(R, d), (GradedAbelianGroup{1, {}}));
  for (std::int64_t d = 3; d <= 6; ++d) EXPECT_EQ(graded_piece(R, d), (GradedAbelianGroup{0, {Integer(4)}}));
}

TEST(Quotient, IntegralOriginRemovalMatchesWeightProduct) {
  std::mt19937 rng(41);
  std::uniform_int_distribution<std::int64_t> w(1, 4);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::int64_t> a(1 + trial % 4);
    for (auto& x : a) x = w(rng);
    mpz_class product = 1;
    for (auto x : a) product *= static_cast<long>(x);
    auto R = integral_presentation({rank_one(a), {InvariantSubspace::origin()}, {}});
    const auto k = static_cast<std::int64_t>(a.size());
    for (std::int64_t d = 0; d < k; ++d) EXPECT_EQ(graded_piece(R, d), (GradedAbelianGroup{1, {}}));
    auto top = graded_piece(R, k);
    if (product == 1)
      EXPECT_EQ(top, GradedAbelianGroup{});
    else
      EXPECT_EQ(top, (GradedAbelianGroup{0, {product}}));
  }
}

TEST(Quotient, RankTwoTorusOverQ) {
  CharacterLattice L(2);
  Representation V(L, {Character({1, 0}), Character({0, 1})});
  auto R = quotient_presentation({V, {InvariantSubspace::origin()}, {}});
  EXPECT_EQ(R.strategy(), ReductionStrategy::groebner_rational());
  EXPECT_EQ(rational_graded_rank(R, 0), 1u);
  for (std::int64_t d = 1; d <= 4; ++d) {
    EXPECT_EQ(rational_graded_rank(R, d), 2u);
    EXPECT_EQ(standard_monomial_count(R, d), 2u);
  }
  // No integral presentation strategy handles t1*t2 in two variables.
  EXPECT_THROW(integral_presentation({V, {InvariantSubspace::origin()}, {}}), StrategyMismatch);
}

TEST(Quotient, EmptyRemovalIsFree) {
  auto R = quotient_presentation({rank_one({1, 2}), {}, {}});
  EXPECT_TRUE(R.relations().empty());
  EXPECT_EQ(R.to_string(), "Q[t]");
}

TEST(Excision, HypersurfaceClass) {
  CharacterLattice L(1);
  EXPECT_EQ(hypersurface_class(3, L), T("3*t"));
  EXPECT_THROW(hypersurface_class(0, L), InvalidArgument);
  EXPECT_THROW(hypersurface_class(-2, L), InvalidArgument);
  EXPECT_THROW(hypersurface_class(1, CharacterLattice(2)), InvalidArgument);
}

TEST(Excision, OrderIndependent) {
  auto base = RingPresentation::free(CharacterLattice(1).ring(), CoefficientDomain::integers);
  std::vector<Polynomial> classes{T("12*t"), T("8*t^2"), T("30*t^3")};
  std::vector<std::size_t> perm{0, 1, 2};
  std::vector<GradedAbelianGroup> reference;
  do {
    std::vector<Polynomial> ordered;
    for (auto i : perm) ordered.push_back(classes[i]);
    // Excise one at a time, in this order.
    auto R = base;
    for (const auto& c : ordered) R = excise_by_classes(R, {c});
    std::vector<GradedAbelianGroup> pieces;
    for (std::int64_t d = 0; d <= 5; ++d) pieces.push_back(graded_piece(R, d));
    if (reference.empty())
      reference = pieces;
    else
      EXPECT_EQ(pieces, reference);
  } while (std::next_permutation(perm.begin(), perm.end()));
  EXPECT_EQ(reference[1], (GradedAbelianGroup{0, {Integer(12)}}));
  EXPECT_EQ(reference[2], (GradedAbelianGroup{0, {Integer(4)}}));
  EXPECT_EQ(reference[3], (GradedAbelianGroup{0, {Integer(2)}}));
}

TEST(Excision, RejectsForeignOrInhomogeneousClasses) {
  auto base = RingPresentation::free(CharacterLattice(1).ring(), CoefficientDomain::integers);
  EXPECT_THROW(excise_by_classes(base, {T("t + t^2")}), InvalidArgument);
  EXPECT_THROW(excise_by_classes(base, {Polynomial::variable(CharacterLattice(2).ring(), "t1")}),
               AmbientMismatch);
}

TEST(NaiveComparison, WeightedPlane) {
  auto cmp = naive_comparison_122();
  EXPECT_EQ(cmp.presentation.to_string(), "Z[t]/(4*t^3)");
  ASSERT_EQ(cmp.table.size(), 3u);
  EXPECT_EQ(cmp.table[1].name, "p");
  EXPECT_EQ(cmp.table[1].image, T("t"));
  EXPECT_EQ(cmp.table[2].name, "l");
  EXPECT_EQ(cmp.table[2].image, T("2*t^2"));
  EXPECT_EQ(cmp.degree_two, (GradedAbelianGroup{1, {}}));
  EXPECT_EQ(cmp.naive_index, 2);
  EXPECT_EQ(cmp.p_squared, T("t^2"));
  EXPECT_FALSE(cmp.p_squared_in_naive_image);
  EXPECT_TRUE(cmp.transverse_product_matches);
}

TEST(Quotient, RankTwoBothAxesRemovedIsAPoint) {
  CharacterLattice L(2);
  Representation V(L, {Character({1, 0}), Character({0, 1})});
  EXPECT_EQ(chi_class(InvariantSubspace::from_kept({0}), V), parse_polynomial("t2", L.ring()));
  auto R = quotient_presentation(
      {V, {InvariantSubspace::from_kept({0}), InvariantSubspace::from_kept({1})}, {}});
  EXPECT_EQ(rational_graded_rank(R, 0), 1u);
  for (std::int64_t d = 1; d <= 4; ++d) EXPECT_EQ(rational_graded_rank(R, d), 0u);
}
