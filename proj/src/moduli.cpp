#include "equichow/moduli.hpp"

#include <algorithm>

#include "equichow/characters.hpp"
#include "equichow/error.hpp"
#include "equichow/point.hpp"
#include "equichow/quotient.hpp"

namespace equichow {

namespace {

// Small-diagonal class and covering degree of the S_3 quotient map.
constexpr std::int64_t kSmallDiagonalCoefficient = 4;
constexpr std::int64_t kCoveringDegree = 6;

void require(ModuliReport& report, std::string name, bool ok, std::string detail) {
  report.checks.push_back({name, ok, detail});
  if (!ok) throw VerificationFailure(report.name + ": check '" + name + "' failed: " + detail);
}

void fill_invariants(ModuliReport& report) {
  for (std::int64_t d = 0; d <= kReportDegree; ++d)
    report.graded_invariants.emplace(d, graded_piece(report.presentation, d));
}

// The degree-1 generator t must map each graded piece onto the next.
void check_generator(ModuliReport& report) {
  const auto& R = report.presentation;
  Polynomial t = Polynomial::variable(R.ring(), "t");
  bool ok = true;
  std::string detail = "t surjects degree d onto d+1 for d < " + std::to_string(kReportDegree);
  for (std::int64_t d = 0; d < kReportDegree && ok; ++d)
    if (!multiplication_surjective(R, t, d)) {
      ok = false;
      detail = "multiplication by t is not onto degree " + std::to_string(d + 1);
    }
  require(report, "hodge-generator", ok, detail);
}

}  // namespace

bool ModuliReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const NamedCheck& c) { return c.passed; });
}

RingPtr weierstrass_ring() {
  return PolyRing::make(std::vector<PolyRing::Variable>{{"e1", 2}, {"e2", 4}, {"e3", 6}});
}

const char* discriminant_text() {
  return "4*e2^3 + 27*e3^2 - 18*e1*e2*e3 - e1^2*e2^2 + 4*e1^3*e3";
}

Polynomial discriminant(const RingPtr& ring) { return parse_polynomial(discriminant_text(), ring); }

ModuliReport m11_chow() {
  CharacterLattice lattice(1);
  ModuliReport report{"m11", RingPresentation::free(lattice.ring(), CoefficientDomain::integers),
                      "Z[t]/(12*t)", {}, {}};

  auto f = discriminant(weierstrass_ring());
  require(report, "discriminant-terms", f.size() == 5,
          "discriminant has " + std::to_string(f.size()) + " monomials");
  bool each = true;
  std::string degrees;
  for (const auto& [m, c] : f.terms()) {
    if (!degrees.empty()) degrees += ",";
    degrees += std::to_string(m.degree());
    each = each && m.degree() == 12;
  }
  require(report, "discriminant-monomial-degrees", each, "monomial degrees " + degrees);
  auto wd = weighted_degree(f);
  require(report, "discriminant-weighted-degree", wd == WeightedDegree::of(12),
          wd.is_homogeneous() ? "degree " + std::to_string(wd.value()) : "inhomogeneous");

  Polynomial cls = hypersurface_class(wd.value(), lattice);
  require(report, "discriminant-class", cls.to_string() == "12*t", "[S] = " + cls.to_string());

  report.presentation = excise_by_classes(point_ring(GroupSpec::gm()), {cls});
  require(report, "golden-presentation", report.presentation.to_string() == report.golden,
          report.presentation.to_string());

  fill_invariants(report);
  require(report, "degree-0", report.graded_invariants.at(0) == GradedAbelianGroup{1, {}},
          report.graded_invariants.at(0).to_string());
  bool torsion = true;
  for (std::int64_t d = 1; d <= kReportDegree; ++d)
    torsion = torsion && report.graded_invariants.at(d) == GradedAbelianGroup{0, {Integer(12)}};
  require(report, "positive-degrees-Z/12", torsion, "degrees 1.." + std::to_string(kReportDegree));
  check_generator(report);
  return report;
}

ModuliReport m11bar_chow() {
  CharacterLattice lattice(1);
  ModuliReport report{"m11bar", RingPresentation::free(lattice.ring(), CoefficientDomain::integers),
                      "Z[t]/(24*t^2)", {}, {}};

  Polynomial t = Polynomial::variable(lattice.ring(), "t");
  Polynomial small_diagonal = t * t * Rational(kSmallDiagonalCoefficient);
  Polynomial removed = small_diagonal * Rational(kCoveringDegree);
  require(report, "removed-locus-class", removed.to_string() == "24*t^2", "[X-W] = " + removed.to_string());

  report.presentation = excise_by_classes(point_ring(GroupSpec::gm()), {removed});
  require(report, "golden-presentation", report.presentation.to_string() == report.golden,
          report.presentation.to_string());

  fill_invariants(report);
  require(report, "degree-0", report.graded_invariants.at(0) == GradedAbelianGroup{1, {}},
          report.graded_invariants.at(0).to_string());
  require(report, "degree-1", report.graded_invariants.at(1) == GradedAbelianGroup{1, {}},
          report.graded_invariants.at(1).to_string());
  bool torsion = true;
  for (std::int64_t d = 2; d <= kReportDegree; ++d)
    torsion = torsion && report.graded_invariants.at(d) == GradedAbelianGroup{0, {Integer(24)}};
  require(report, "degrees-2+-Z/24", torsion, "degrees 2.." + std::to_string(kReportDegree));
  check_generator(report);
  return report;
}

GradedAbelianGroup picard_m11() { return graded_piece(m11_chow().presentation, 1); }

}  // namespace equichow
