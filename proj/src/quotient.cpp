#include "equichow/quotient.hpp"

#include <algorithm>

#include "equichow/error.hpp"
#include "equichow/point.hpp"

namespace equichow {

InvariantSubspace InvariantSubspace::from_kept(std::vector<std::size_t> kept) {
  std::sort(kept.begin(), kept.end());
  if (std::adjacent_find(kept.begin(), kept.end()) != kept.end())
    throw InvalidArgument("repeated index in invariant subspace");
  InvariantSubspace L;
  L.kept_ = std::move(kept);
  return L;
}

InvariantSubspace InvariantSubspace::from_quotient_weights(std::vector<Character> weights) {
  InvariantSubspace L;
  L.coordinate_ = false;
  L.quotient_weights_ = std::move(weights);
  return L;
}

std::vector<Character> InvariantSubspace::quotient_characters(const Representation& V) const {
  const auto& chars = V.characters();
  if (coordinate_) {
    for (auto i : kept_)
      if (i >= chars.size())
        throw InvalidArgument("index " + std::to_string(i) + " out of range for " +
                              std::to_string(chars.size()) + " characters");
    std::vector<Character> out;
    for (std::size_t i = 0; i < chars.size(); ++i)
      if (!std::binary_search(kept_.begin(), kept_.end(), i)) out.push_back(chars[i]);
    return out;
  }
  auto pool = chars;
  for (const auto& w : quotient_weights_) {
    if (w.rank() != V.lattice().rank())
      throw InvalidArgument("quotient weight " + w.to_string() + " has the wrong rank");
    auto it = std::find(pool.begin(), pool.end(), w);
    if (it == pool.end())
      throw InvalidArgument("quotient weight " + w.to_string() +
                            " is not available among the characters of V");
    pool.erase(it);
  }
  return quotient_weights_;
}

std::string InvariantSubspace::to_string() const {
  std::string s;
  if (coordinate_) {
    s = "kept {";
    for (std::size_t i = 0; i < kept_.size(); ++i) s += (i ? "," : "") + std::to_string(kept_[i]);
  } else {
    s = "quotient weights {";
    for (std::size_t i = 0; i < quotient_weights_.size(); ++i)
      s += (i ? "," : "") + quotient_weights_[i].to_string();
  }
  return s + "}";
}

Polynomial chi_class(const InvariantSubspace& L, const Representation& V) {
  Polynomial chi(V.lattice().ring(), Rational(1));
  for (const auto& c : L.quotient_characters(V)) chi *= char_linear_form(c, V.lattice());
  return chi;
}

namespace {

std::vector<Polynomial> removed_classes(const QuotientScenario& S) {
  std::vector<Polynomial> out;
  for (const auto& L : S.removed) out.push_back(chi_class(L, S.representation));
  return out;
}

}  // namespace

RingPresentation quotient_presentation(const QuotientScenario& S) {
  const auto& ring = S.representation.lattice().ring();
  auto rels = removed_classes(S);
  auto strategy = choose_strategy(ring, CoefficientDomain::rationals, rels);
  return RingPresentation(ring, CoefficientDomain::rationals, std::move(rels), strategy);
}

RingPresentation integral_presentation(const QuotientScenario& S) {
  auto classes = removed_classes(S);
  classes.insert(classes.end(), S.classes.begin(), S.classes.end());
  auto base = RingPresentation::free(S.representation.lattice().ring(), CoefficientDomain::integers);
  return excise_by_classes(base, classes);
}

RingPresentation excise_by_classes(const RingPresentation& R, const std::vector<Polynomial>& classes) {
  auto rels = R.relations();
  for (const auto& c : classes) {
    if (!same_ring(c.ring(), R.ring()))
      throw AmbientMismatch("class " + c.to_string() + " does not live in the presentation's ring");
    if (!is_homogeneous(c)) throw InvalidArgument("class is not homogeneous: " + c.to_string());
    rels.push_back(c);
  }
  auto strategy = choose_strategy(R.ring(), R.domain(), rels);
  return RingPresentation(R.ring(), R.domain(), std::move(rels), strategy);
}

Polynomial hypersurface_class(std::int64_t w, const CharacterLattice& lattice) {
  if (lattice.rank() != 1) throw InvalidArgument("hypersurface_class needs a rank-1 torus");
  if (w <= 0)
    throw InvalidArgument("hypersurface weight " + std::to_string(w) +
                          " is not positive under the function-weight convention");
  return char_linear_form(Character({w}), lattice);
}

NaiveComparison naive_comparison_122() {
  CharacterLattice lattice(1);
  Representation V(lattice, {Character({1}), Character({2}), Character({2})});
  QuotientScenario scenario{V, {InvariantSubspace::origin()}, {}};
  auto R = integral_presentation(scenario);

  // Coordinates x, y, z carry weights 1, 2, 2.
  auto plane_x = InvariantSubspace::from_kept({1, 2});  // x = 0
  auto plane_y = InvariantSubspace::from_kept({0, 2});  // y = 0
  auto line_xy = InvariantSubspace::from_kept({2});     // x = y = 0

  NaiveComparison out{R, {}, {}, 0, Polynomial(lattice.ring()), true, false};
  out.table.push_back({"1", "[X]", Polynomial(lattice.ring(), Rational(1))});
  Polynomial p = chi_class(plane_x, V);
  Polynomial l = chi_class(line_xy, V);
  out.table.push_back({"p", "plane x=0", p});
  out.table.push_back({"l", "line x=y=0", l});

  out.degree_two = graded_piece(R, 2);
  out.naive_index = subgroup_index(R, 2, {l});
  out.p_squared = normal_form(p * p, R);
  out.p_squared_in_naive_image = subgroup_contains(R, 2, {l}, out.p_squared);
  out.transverse_product_matches = normal_form(p * chi_class(plane_y, V), R) == normal_form(l, R);
  return out;
}

}  // namespace equichow
