#pragma once

#include <string>
#include <vector>

#include "equichow/polynomial.hpp"

namespace equichow {

enum class CoefficientDomain { integers, rationals };

std::string to_string(CoefficientDomain d);
CoefficientDomain parse_coefficient_domain(const std::string& s);

/// How normal forms are computed in a presented ring.
struct ReductionStrategy {
  enum class Kind { none, principal_univariate, monic_in_variable, groebner_rational };

  Kind kind = Kind::none;
  std::string variable;  // only for monic_in_variable

  static ReductionStrategy none() { return {Kind::none, {}}; }
  static ReductionStrategy principal_univariate() { return {Kind::principal_univariate, {}}; }
  static ReductionStrategy monic_in(std::string v) { return {Kind::monic_in_variable, std::move(v)}; }
  static ReductionStrategy groebner_rational() { return {Kind::groebner_rational, {}}; }

  /// "none", "principal-univariate", "monic-in-variable(h)", "groebner-rational".
  std::string to_string() const;
  static ReductionStrategy parse(const std::string& s);

  bool operator==(const ReductionStrategy&) const = default;
};

/// A graded ring R[x_1..x_n]/(relations) together with the strategy used to
/// compute canonical representatives. Zero relations are dropped. The
/// constructor validates the strategy against the relations and throws
/// StrategyMismatch when they disagree, so every live presentation can
/// compute normal forms.
class RingPresentation {
 public:
  RingPresentation(RingPtr ring, CoefficientDomain domain, std::vector<Polynomial> relations,
                   ReductionStrategy strategy);

  static RingPresentation free(RingPtr ring, CoefficientDomain domain);

  const RingPtr& ring() const { return ring_; }
  CoefficientDomain domain() const { return domain_; }
  const std::vector<Polynomial>& relations() const { return relations_; }
  const ReductionStrategy& strategy() const { return strategy_; }
  /// Reduced Groebner basis (groebner-rational only; empty otherwise).
  const std::vector<Polynomial>& groebner_basis() const { return basis_; }

  /// E.g. "Z[t]/(12*t)", "Q[t1, t2]/(t2, t1)", "Z[c1, c2]".
  std::string to_string() const;
  /// E.g. "c1=1, c2=2".
  std::string degrees_string() const;

  /// Same ring, domain, strategy and relation list.
  bool operator==(const RingPresentation& other) const;

 private:
  RingPtr ring_;
  CoefficientDomain domain_;
  std::vector<Polynomial> relations_;
  ReductionStrategy strategy_;
  std::vector<Polynomial> basis_;
};

/// Picks the strategy that fits: none for no relations, principal-univariate
/// for a one-variable ring, groebner-rational over Q, and monic-in-variable
/// over Z when some variable makes every relation monic. Throws
/// StrategyMismatch for integral multivariate relations with no monic variable.
ReductionStrategy choose_strategy(const RingPtr& ring, CoefficientDomain domain,
                                  const std::vector<Polynomial>& relations);

/// Canonical representative of p modulo the relations of R.
Polynomial normal_form(const Polynomial& p, const RingPresentation& R);

/// Reduced Groebner basis over Q under the ring's graded-lex order, every
/// element monic, sorted by decreasing leading monomial.
std::vector<Polynomial> groebner_basis(std::vector<Polynomial> generators);

/// Full reduction of p by a Groebner basis.
Polynomial reduce_by_basis(const Polynomial& p, const std::vector<Polynomial>& basis);

}  // namespace equichow
