#include <random>
#include <set>

#include <gtest/gtest.h>

#include "equichow/error.hpp"
#include "equichow/projective.hpp"
#include "oracles.hpp"
#include "printers.hpp"

using namespace equichow;

namespace {

std::vector<std::int64_t> distinct_weights(std::mt19937& rng, std::size_t count, std::int64_t bound) {
  std::uniform_int_distribution<std::int64_t> w(-bound, bound);
  std::set<std::int64_t> seen;
  while (seen.size() < count) seen.insert(w(rng));
  std::vector<std::int64_t> out(seen.begin(), seen.end());
  std::shuffle(out.begin(), out.end(), rng);
  return out;
}

// Coefficient of h^n in the reduced form, read back as a polynomial in the
// character variables: the pushforward to a point along the module basis.
Polynomial top_coefficient(const Polynomial& alpha, const ProjectiveAction& A) {
  auto nf = normal_form(alpha, proj_ring(A));
  const auto h = A.ring()->require_index("h");
  const auto n = static_cast<std::uint32_t>(A.dimension());
  Polynomial out(A.lattice().ring());
  for (const auto& [m, c] : nf.terms()) {
    if (m.exponent(h) != n) continue;
    std::vector<std::uint32_t> ex;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (i != h) ex.push_back(m.exponent(i));
    out.add_term(c, Monomial(ex, *A.lattice().ring()));
  }
  return out;
}

}  // namespace

TEST(ProjRing, ProductFormRelation) {
  auto A = ProjectiveAction::rank_one({0, 1});
  auto R = proj_ring(A);
  ASSERT_EQ(R.relations().size(), 1u);
  EXPECT_EQ(R.relations()[0], parse_polynomial("h^2 + t*h", A.ring()));
  EXPECT_EQ(R.strategy(), ReductionStrategy::monic_in("h"));
  EXPECT_EQ(R.domain(), CoefficientDomain::integers);
}

TEST(ProjRing, RelationCoefficientsMatchOracle) {
  std::mt19937 rng(17);
  std::uniform_int_distribution<std::int64_t> w(-5, 5);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<std::int64_t> a(1 + trial % 4);
    for (auto& x : a) x = w(rng);
    auto A = ProjectiveAction::rank_one(a);
    auto rel = proj_ring(A).relations().at(0);
    auto c = oracle::product_form_coefficients(a);
    const auto n1 = static_cast<std::uint32_t>(a.size());
    Polynomial expected(A.ring());
    for (std::uint32_t i = 0; i <= n1; ++i)
      expected.add_term(Rational(c[i]), Monomial({i, n1 - i}, *A.ring()));
    EXPECT_EQ(rel, expected);
  }
}

TEST(ProjRing, TrivialActionIsTruncatedPolynomialRing) {
  auto A = ProjectiveAction::rank_one({0, 0, 0});
  EXPECT_EQ(proj_ring(A).relations().at(0), parse_polynomial("h^3", A.ring()));
  EXPECT_EQ(module_rank(A), 3u);
  EXPECT_THROW(integrate_by_localization(A.hyperplane(), A), RepeatedWeights);
}

TEST(ModuleBasis, ReducedFormsHaveBoundedHDegree) {
  std::mt19937 rng(23);
  std::uniform_int_distribution<std::int64_t> w(-3, 3);
  std::uniform_int_distribution<std::uint32_t> e(0, 7);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<std::int64_t> a(2 + trial % 3);
    for (auto& x : a) x = w(rng);
    auto A = ProjectiveAction::rank_one(a);
    EXPECT_EQ(module_rank(A), a.size());
    auto R = proj_ring(A);
    for (int k = 0; k < 20; ++k) {
      auto nf = normal_form(Polynomial(A.ring(), Rational(1), Monomial({e(rng), e(rng)}, *A.ring())), R);
      EXPECT_LE(nf.degree_in(1), A.dimension());
    }
  }
}

TEST(Localization, ProjectiveLineFundamentalClass) {
  auto A = ProjectiveAction::rank_one({0, 1});
  EXPECT_EQ(integrate_by_localization(A.hyperplane(), A), Polynomial(A.lattice().ring(), 1));
  EXPECT_TRUE(integrate_by_localization(Polynomial(A.ring(), 1), A).is_zero());
}

TEST(Localization, ProjectivePlaneFixedPointData) {
  auto A = ProjectiveAction::rank_one({0, 1, 2});
  auto t = A.lattice().ring();
  auto fp = fixed_points(A);
  ASSERT_EQ(fp.size(), 3u);
  EXPECT_EQ(fp[0].euler, parse_polynomial("2*t^2", t));
  EXPECT_EQ(fp[1].euler, parse_polynomial("-t^2", t));
  EXPECT_EQ(fp[2].euler, parse_polynomial("2*t^2", t));
  EXPECT_EQ(fp[2].hyperplane_restriction, parse_polynomial("-2*t", t));
  auto h = A.hyperplane();
  EXPECT_EQ(integrate_by_localization(h * h, A), Polynomial(t, 1));
  EXPECT_TRUE(integrate_by_localization(h, A).is_zero());
  // h^3 integrates to -(0+1+2) t
  EXPECT_EQ(integrate_by_localization(h * h * h, A), parse_polynomial("-3*t", t));
}

TEST(Localization, AgreesWithArithmeticOracleAndModuleBasis) {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    auto a = distinct_weights(rng, 2 + trial % 4, 6);
    auto A = ProjectiveAction::rank_one(a);
    auto t = A.lattice().ring();
    const auto n = A.dimension();
    auto hk = Polynomial(A.ring(), 1);
    for (unsigned k = 0; k <= n + 3; ++k, hk *= A.hyperplane()) {
      auto got = integrate_by_localization(hk, A);
      Polynomial expected(t);
      if (k >= n)
        expected = Polynomial(t, oracle::localization_sum(a, k),
                              Monomial::variable(*t, 0, static_cast<std::uint32_t>(k - n)));
      else
        EXPECT_EQ(oracle::localization_sum(a, k), 0);
      EXPECT_EQ(got, expected) << "k=" << k;
      EXPECT_EQ(got, top_coefficient(hk, A)) << "k=" << k;
    }
  }
}

TEST(Localization, RankTwoTorus) {
  CharacterLattice L(2);
  ProjectiveAction A(L, {Character({1, 0}), Character({0, 1}), Character({1, 1})});
  auto h = A.hyperplane();
  EXPECT_EQ(integrate_by_localization(h * h, A), Polynomial(L.ring(), 1));
  EXPECT_EQ(integrate_by_localization(h * h * h, A), parse_polynomial("-2*t1 - 2*t2", L.ring()));
  auto mixed = parse_polynomial("t1*h^2 + h^3 - t1*t2*h", A.ring());
  EXPECT_EQ(integrate_by_localization(mixed, A), top_coefficient(mixed, A));
}

TEST(Localization, LineBundleTwists) {
  auto A = ProjectiveAction::rank_one({-1, 0, 3});
  auto t = A.lattice().ring();
  // (m h + x)^2 integrates to m^2
  for (std::int64_t m = -3; m <= 3; ++m) {
    auto c = chern_line_bundle(m, Character({2}), A);
    EXPECT_EQ(integrate_by_localization(c * c, A), Polynomial(t, Rational(m * m)));
  }
}

TEST(Localization, RejectsBadInput) {
  auto A = ProjectiveAction::rank_one({0, 1});
  EXPECT_THROW(integrate_by_localization(parse_polynomial("h + h^2", A.ring()), A), InvalidArgument);
  auto B = ProjectiveAction::rank_one({2, 2, 5});
  EXPECT_THROW(integrate_by_localization(B.hyperplane(), B), RepeatedWeights);
  EXPECT_THROW(fixed_points(B), RepeatedWeights);
}

TEST(SelfIntersection, PullbackOfPushforwardIsEuler) {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    auto a = distinct_weights(rng, 2 + trial % 3, 5);
    auto A = ProjectiveAction::rank_one(a);
    auto t = A.lattice().ring();
    for (std::size_t r = 0; r <= A.dimension(); ++r) {
      auto one = Polynomial(t, 1);
      EXPECT_EQ(restrict_to_fixed(pushforward_from_fixed(one, r, A), r, A), euler_class(r, A));
      for (std::size_t s = 0; s <= A.dimension(); ++s)
        if (s != r) EXPECT_TRUE(restrict_to_fixed(pushforward_from_fixed(one, r, A), s, A).is_zero());
      // the class of a point integrates to 1
      EXPECT_EQ(integrate_by_localization(pushforward_from_fixed(one, r, A), A), one);
    }
  }
}

TEST(LocalizedElementTest, CancellationAndSums) {
  auto t = CharacterLattice(1).ring();
  auto T = [&](const char* s) { return parse_polynomial(s, t); };
  LocalizedElement a(T("1"), {T("t")});
  LocalizedElement b(T("-1"), {T("t")});
  EXPECT_TRUE((a + b).to_polynomial().has_value());
  EXPECT_TRUE((a + b).to_polynomial()->is_zero());
  EXPECT_FALSE(a.to_polynomial().has_value());
  LocalizedElement c(T("2*t^2"), {T("-2*t")});
  ASSERT_TRUE(c.to_polynomial().has_value());
  EXPECT_EQ(*c.to_polynomial(), T("-t"));
  auto prod = a * LocalizedElement(T("t"));
  EXPECT_EQ(*prod.to_polynomial(), T("1"));
  LocalizedElement half(T("1"), {T("2*t")});
  EXPECT_EQ(half.to_string(), "(1/2)/(t)");
  EXPECT_THROW(LocalizedElement(T("1"), {T("0")}), InvalidArgument);
}
