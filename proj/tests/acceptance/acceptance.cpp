// Acceptance suite: one PASS/FAIL line per criterion. All comparisons are
// exact (tolerance 0); exit status is nonzero if any criterion fails.

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "equichow/cli.hpp"
#include "equichow/error.hpp"
#include "equichow/graded.hpp"
#include "equichow/linalg.hpp"
#include "equichow/moduli.hpp"
#include "equichow/point.hpp"
#include "equichow/projective.hpp"
#include "equichow/quotient.hpp"
#include "equichow/symmetric.hpp"

using namespace equichow;

namespace {

struct Failed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failed(what);
}

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult cli_run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

Representation rank_one(const std::vector<std::int64_t>& w) {
  std::vector<Character> chars;
  for (auto x : w) chars.emplace_back(std::vector<std::int64_t>{x});
  return Representation(CharacterLattice(1), chars);
}

Polynomial t_power(const RingPtr& ring, const Rational& c, std::uint32_t k) {
  return Polynomial(ring, c, Monomial::variable(*ring, 0, k));
}

// ---------------------------------------------------------------------------

std::string criterion_m11() {
  auto f = discriminant(weierstrass_ring());
  expect(f.size() == 5, "discriminant has " + std::to_string(f.size()) + " monomials");
  for (const auto& [m, c] : f.terms())
    expect(m.degree() == 12, "monomial of weighted degree " + std::to_string(m.degree()));
  auto report = m11_chow();
  expect(report.all_passed(), "internal checks failed");
  auto r = cli_run({"moduli", "m11"});
  expect(r.code == 0, "exit code " + std::to_string(r.code) + ": " + r.err);
  expect(first_line(r.out) == "Z[t]/(12*t)", "got '" + first_line(r.out) + "'");
  return first_line(r.out);
}

std::string criterion_picard() {
  auto R = m11_chow().presentation;
  auto piece = degree_piece(R, 1);
  auto snf = smith_normal_form(piece.relation_columns);
  expect(piece.basis.size() == 1, "degree-1 basis size " + std::to_string(piece.basis.size()));
  expect(snf.invariant_factors.size() == 1 && snf.invariant_factors[0] == 12, "SNF is not diag(12)");
  auto r = cli_run({"moduli", "picard"});
  expect(r.code == 0, "exit code " + std::to_string(r.code));
  expect(first_line(r.out) == "Z/12", "got '" + first_line(r.out) + "'");
  return "A^1 = " + first_line(r.out);
}

std::string criterion_m11bar() {
  auto r = cli_run({"moduli", "m11bar"});
  expect(r.code == 0, "exit code " + std::to_string(r.code));
  expect(first_line(r.out) == "Z[t]/(24*t^2)", "got '" + first_line(r.out) + "'");
  auto R = m11bar_chow().presentation;
  auto g1 = graded_piece(R, 1), g2 = graded_piece(R, 2);
  expect(g1 == GradedAbelianGroup{1, {}}, "degree 1 is " + g1.to_string());
  expect(g2 == (GradedAbelianGroup{0, {Integer(24)}}), "degree 2 is " + g2.to_string());
  return first_line(r.out) + ", A^1 = " + g1.to_string() + ", A^2 = " + g2.to_string();
}

std::string criterion_weighted_plane() {
  auto cmp = naive_comparison_122();
  auto t = CharacterLattice(1).ring();
  expect(cmp.presentation.to_string() == "Z[t]/(4*t^3)", "presentation " + cmp.presentation.to_string());
  bool p_ok = false, l_ok = false;
  for (const auto& e : cmp.table) {
    if (e.name == "p") p_ok = e.image == Polynomial::variable(t, "t");
    if (e.name == "l") l_ok = e.image == t_power(t, 2, 2);
  }
  expect(p_ok, "p does not map to t");
  expect(l_ok, "l does not map to 2t^2");
  expect(cmp.p_squared == t_power(t, 1, 2), "p^2 = " + cmp.p_squared.to_string());
  expect(!cmp.p_squared_in_naive_image, "t^2 lies in 2Z t^2");
  expect(cmp.naive_index == 2, "naive image has index " + cmp.naive_index.get_str());
  // same answer through the scenario file
  auto r = cli_run({"quotient", "--scenario", std::string(EQUICHOW_TEST_DATA) + "/weighted_plane_122.json"});
  expect(r.code == 0, "quotient exit code " + std::to_string(r.code) + ": " + r.err);
  expect(r.out.find("integral: Z[t]/(4*t^3)\n") != std::string::npos, "CLI presentation differs");
  return "Z[t]/(4*t^3); p->t, l->2*t^2; t^2 not in 2Z*t^2 (index 2)";
}

std::string criterion_localization() {
  std::size_t tuples = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    std::vector<std::int64_t> values{-2, -1, 0, 1, 2};
    // every ordered choice of n+1 distinct entries
    std::vector<std::size_t> idx(n + 1, 0);
    for (;;) {
      std::set<std::size_t> distinct(idx.begin(), idx.end());
      if (distinct.size() == n + 1) {
        std::vector<std::int64_t> w;
        for (auto i : idx) w.push_back(values[i]);
        auto A = ProjectiveAction::rank_one(w);
        const auto& lattice = A.lattice();
        Polynomial hk(A.ring(), 1);
        for (std::size_t k = 0; k <= n; ++k, hk *= A.hyperplane()) {
          LocalizedElement sum(Polynomial(lattice.ring()));
          for (std::size_t r = 0; r <= n; ++r) {
            std::vector<Polynomial> forms;
            for (std::size_t s = 0; s <= n; ++s)
              if (s != r) forms.push_back(char_linear_form(A.weights()[s] - A.weights()[r], lattice));
            sum += LocalizedElement(restrict_to_fixed(hk, r, A), forms);
          }
          auto cleared = sum.to_polynomial();
          expect(cleared.has_value(), "sum does not clear for h^" + std::to_string(k));
          auto value = integrate_by_localization(hk, A);
          expect(value == *cleared, "integrate disagrees with explicit sum");
          Polynomial expected(lattice.ring(), k == n ? 1 : 0);
          expect(value == expected, "integral of h^" + std::to_string(k) + " is " + value.to_string());
        }
        ++tuples;
      }
      std::size_t i = 0;
      while (i <= n && idx[i] == values.size() - 1) idx[i++] = 0;
      if (i > n) break;
      ++idx[i];
    }
  }
  expect(tuples == 20 + 60 + 120, "enumerated " + std::to_string(tuples) + " tuples");
  return std::to_string(tuples) + " weight tuples, k = 0..n";
}

std::string criterion_self_intersection() {
  std::mt19937 rng(20250101);
  std::uniform_int_distribution<std::int64_t> weight(-6, 6), coeff(-9, 9);
  std::uniform_int_distribution<std::uint32_t> deg(0, 4);
  int cases = 0;
  for (; cases < 100; ++cases) {
    std::size_t n = 1 + cases % 2;
    std::set<std::int64_t> seen;
    std::vector<std::int64_t> w;
    while (w.size() < n + 1) {
      auto x = weight(rng);
      if (seen.insert(x).second) w.push_back(x);
    }
    auto A = ProjectiveAction::rank_one(w);
    auto t = A.lattice().ring();
    std::uniform_int_distribution<std::size_t> pick(0, n);
    std::size_t r = pick(rng);
    Polynomial alpha = t_power(t, Rational(coeff(rng)), deg(rng));
    auto lhs = restrict_to_fixed(pushforward_from_fixed(alpha, r, A), r, A);
    auto rhs = alpha * euler_class(r, A);
    expect(lhs == rhs, "case " + std::to_string(cases) + ": " + lhs.to_string() + " != " + rhs.to_string());
  }
  return std::to_string(cases) + " cases on P^1 and P^2";
}

std::string criterion_module_basis() {
  std::mt19937 rng(424242);
  std::uniform_int_distribution<std::int64_t> weight(-4, 4);
  std::uniform_int_distribution<std::uint32_t> exponent(0, 12);
  std::size_t monomials = 0;
  for (int action = 0; action < 20; ++action) {
    std::size_t n = 1 + action % 4;
    std::vector<std::int64_t> w(n + 1);
    for (auto& x : w) x = weight(rng);
    auto A = ProjectiveAction::rank_one(w);
    auto R = proj_ring(A);
    const auto h = A.ring()->require_index("h");
    for (int i = 0; i < 200; ++i, ++monomials) {
      std::vector<std::uint32_t> ex(2);
      ex[0] = exponent(rng);
      ex[1] = exponent(rng);
      auto nf = normal_form(Polynomial(A.ring(), 1, Monomial(ex, *A.ring())), R);
      expect(nf.degree_in(h) <= n, "h-degree " + std::to_string(nf.degree_in(h)) + " > " + std::to_string(n));
    }
    std::vector<Polynomial> basis;
    Polynomial hk(A.ring(), 1);
    for (std::size_t k = 0; k <= n; ++k, hk *= A.hyperplane()) {
      auto nf = normal_form(hk, R);
      for (const auto& b : basis) expect(!(b == nf), "normal forms of h-powers coincide");
      basis.push_back(nf);
    }
    expect(module_rank(A) == n + 1, "module rank differs from n+1");
  }
  return "20 actions, " + std::to_string(monomials) + " monomials";
}

std::string criterion_symmetric() {
  const std::size_t n = 4;
  auto c = chern_ring(n);
  CharacterLattice lattice(n);
  auto e = elementary_ring(*lattice.ring(), lattice.variable_names(), "c");
  expect(same_ring(e, c), "elementary ring does not match c1..c4");
  std::size_t count = 0;
  for (std::int64_t d = 0; d <= 5; ++d)
    for (const auto& m : monomials_of_degree(*c, d)) {
      Polynomial p(c, 1, m);
      auto image = restrict_to_torus(p, n);
      expect(is_symmetric(image, lattice.variable_names()), p.to_string() + " restricts asymmetrically");
      expect(express_in_elementary(image, lattice.variable_names(), c) == p,
             "round trip fails for " + p.to_string());
      ++count;
    }
  return std::to_string(count) + " monomials of degree <= 5";
}

std::vector<std::pair<std::string, RingPresentation>> suite_presentations() {
  std::vector<std::pair<std::string, RingPresentation>> out;
  for (const auto& entry : std::filesystem::directory_iterator(EQUICHOW_TEST_DATA)) {
    if (entry.path().extension() != ".json") continue;
    auto S = cli::load_scenario(entry.path().string());
    out.emplace_back(entry.path().filename().string(), quotient_presentation(S));
  }
  for (std::int64_t a = 1; a <= 3; ++a)
    for (std::int64_t b = 1; b <= 3; ++b)
      for (std::int64_t c = 1; c <= 3; ++c)
        out.emplace_back("origin " + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c),
                         quotient_presentation({rank_one({a, b, c}), {InvariantSubspace::origin()}, {}}));
  CharacterLattice L2(2);
  Representation V(L2, {Character({1, 0}), Character({0, 1}), Character({1, 1})});
  out.emplace_back("rank 2, origin", quotient_presentation({V, {InvariantSubspace::origin()}, {}}));
  out.emplace_back("rank 2, two lines",
                   quotient_presentation({V,
                                          {InvariantSubspace::from_kept({0}), InvariantSubspace::from_kept({1})},
                                          {}}));
  CharacterLattice L3(3);
  Representation W(L3, {Character({1, 0, 0}), Character({0, 1, 0}), Character({0, 0, 1}), Character({1, 1, 1})});
  out.emplace_back("rank 3, coordinate planes",
                   quotient_presentation({W,
                                          {InvariantSubspace::from_kept({0, 1}), InvariantSubspace::from_kept({1, 2}),
                                           InvariantSubspace::from_kept({3})},
                                          {}}));
  return out;
}

std::string criterion_oracle_equivalence() {
  auto presentations = suite_presentations();
  std::size_t comparisons = 0;
  for (const auto& [name, R] : presentations) {
    // Force Groebner normal forms even where a cheaper strategy was chosen.
    RingPresentation G(R.ring(), CoefficientDomain::rationals, R.relations(),
                       R.relations().empty() ? ReductionStrategy::none() : ReductionStrategy::groebner_rational());
    for (std::int64_t d = 0; d <= 4; ++d) {
      auto brute = rational_graded_rank(R, d);
      auto standard = standard_monomial_count(G, d);
      // rank of the span of all normal forms of degree-d monomials
      auto basis = monomials_of_degree(*R.ring(), d);
      RationalMatrix nfs;
      for (const auto& m : basis) {
        auto nf = normal_form(Polynomial(R.ring(), 1, m), G);
        std::vector<Rational> row;
        for (const auto& b : basis) row.push_back(nf.coefficient(b));
        nfs.push_back(std::move(row));
      }
      auto span = rational_rank(std::move(nfs));
      expect(brute == standard && brute == span,
             name + " degree " + std::to_string(d) + ": brute " + std::to_string(brute) + ", standard " +
                 std::to_string(standard) + ", span " + std::to_string(span));
      ++comparisons;
    }
  }
  return std::to_string(presentations.size()) + " presentations, " + std::to_string(comparisons) +
         " degree comparisons";
}

std::string criterion_chi_class() {
  std::size_t tuples = 0;
  bool saw_122_case = false;
  auto t = CharacterLattice(1).ring();
  for (std::size_t k = 1; k <= 4; ++k) {
    std::vector<std::int64_t> w(k, 1);
    for (;;) {
      Integer product = 1;
      for (auto x : w) product *= static_cast<long>(x);
      auto got = chi_class(InvariantSubspace::origin(), rank_one(w));
      auto expected = t_power(t, Rational(product), static_cast<std::uint32_t>(k));
      expect(got == expected, "weights give " + got.to_string() + ", expected " + expected.to_string());
      if (w == std::vector<std::int64_t>{1, 2, 2}) saw_122_case = got == t_power(t, 4, 3);
      ++tuples;
      std::size_t i = 0;
      while (i < k && w[i] == 4) w[i++] = 1;
      if (i == k) break;
      ++w[i];
    }
  }
  expect(tuples == 4 + 16 + 64 + 256, "enumerated " + std::to_string(tuples));
  expect(saw_122_case, "(1,2,2) did not give 4*t^3");
  return std::to_string(tuples) + " tuples, (1,2,2) -> 4*t^3";
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<std::string()> run;
  };
  std::vector<Criterion> criteria{
      {1, "m11-presentation", criterion_m11},
      {2, "picard-smith-form", criterion_picard},
      {3, "m11bar-presentation", criterion_m11bar},
      {4, "weighted-plane-comparison", criterion_weighted_plane},
      {5, "localization-suite", criterion_localization},
      {6, "self-intersection", criterion_self_intersection},
      {7, "module-basis", criterion_module_basis},
      {8, "symmetric-round-trip", criterion_symmetric},
      {9, "groebner-vs-linear-algebra", criterion_oracle_equivalence},
      {10, "chi-class-origin", criterion_chi_class},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string status = "PASS", detail;
    try {
      detail = c.run();
    } catch (const std::exception& e) {
      status = "FAIL";
      detail = e.what();
      ++failures;
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    std::cout << status << " [" << c.id << "] " << c.name << " (tolerance: exact, " << ms.count()
              << " ms): " << detail << '\n';
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
