#pragma once

// Chow rings of the moduli stacks of elliptic curves.
//
// M_{1,1} is the quotient of the space of Weierstrass data (e1, e2, e3) minus
// the discriminant locus by a group whose maximal torus G_m acts on the
// coordinate functions with weights (2, 4, 6). The discriminant
//
//   4*e2^3 + 27*e3^2 - 18*e1*e2*e3 - e1^2*e2^2 + 4*e1^3*e3
//
// is a semi-invariant of weight 12, so excision gives Z[t]/(12t). For the
// compactification only the image of the small diagonal is removed; its class
// is 6 * 4t^2 = 24t^2 (covering degree times the small-diagonal class).

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "equichow/graded.hpp"
#include "equichow/presentation.hpp"

namespace equichow {

struct NamedCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ModuliReport {
  std::string name;
  RingPresentation presentation;
  /// Expected presentation text, e.g. "Z[t]/(12*t)".
  std::string golden;
  std::vector<NamedCheck> checks;
  std::map<std::int64_t, GradedAbelianGroup> graded_invariants;

  bool all_passed() const;
};

/// Weierstrass coordinate ring e1, e2, e3 with degrees 2, 4, 6.
RingPtr weierstrass_ring();
/// The discriminant, parsed term by term from its literal text.
Polynomial discriminant(const RingPtr& ring);
const char* discriminant_text();

/// Graded invariants are computed for degrees 0..kReportDegree.
inline constexpr std::int64_t kReportDegree = 5;

/// Throw VerificationFailure naming the first failed check.
ModuliReport m11_chow();
ModuliReport m11bar_chow();
/// Degree-1 piece of the M_{1,1} presentation, by Smith normal form.
GradedAbelianGroup picard_m11();

}  // namespace equichow
