#pragma once

// Equivariant Chow rings of open subsets U = V - (L_1 u ... u L_r) of a torus
// representation V. Each removed invariant subspace L contributes its class
// chi_L, the product of the linear forms of the characters of V/L:
//
//   A_T(U) = S(T^) / (chi_{L_1}, ..., chi_{L_r}).
//
// quotient_presentation gives the rational form (the Chow ring of the
// quotient U/T tensored with Q); integral_presentation and excise_by_classes
// give the integral equivariant ring.

#include <cstddef>
#include <string>
#include <vector>

#include "equichow/characters.hpp"
#include "equichow/graded.hpp"
#include "equichow/presentation.hpp"

namespace equichow {

/// An invariant linear subspace L of V, given either by the coordinate
/// indices spanning it or, when V has repeated characters, directly by the
/// multiset of characters of V/L.
class InvariantSubspace {
 public:
  static InvariantSubspace from_kept(std::vector<std::size_t> kept);
  static InvariantSubspace from_quotient_weights(std::vector<Character> weights);
  /// The origin (nothing kept).
  static InvariantSubspace origin() { return from_kept({}); }

  bool is_coordinate() const { return coordinate_; }
  const std::vector<std::size_t>& kept() const { return kept_; }
  const std::vector<Character>& quotient_weights() const { return quotient_weights_; }

  /// Characters of V/L. Throws InvalidArgument for indices outside V or
  /// quotient weights that are not a sub-multiset of V's characters.
  std::vector<Character> quotient_characters(const Representation& V) const;
  std::string to_string() const;

 private:
  bool coordinate_ = true;
  std::vector<std::size_t> kept_;
  std::vector<Character> quotient_weights_;
};

struct QuotientScenario {
  Representation representation;
  std::vector<InvariantSubspace> removed;
  /// Extra equivariant fundamental classes, in the character ring.
  std::vector<Polynomial> classes;
};

/// prod_{chi in V/L} l(chi); homogeneous of degree codim L.
Polynomial chi_class(const InvariantSubspace& L, const Representation& V);

/// Q[t..]/(chi_L for L removed). With nothing removed, the free ring.
RingPresentation quotient_presentation(const QuotientScenario& S);

/// Z[t..]/(chi_L for L removed, classes...).
RingPresentation integral_presentation(const QuotientScenario& S);

/// R with `classes` appended to its relations. Throws InvalidArgument for an
/// inhomogeneous or (over Z) non-integral class.
RingPresentation excise_by_classes(const RingPresentation& R, const std::vector<Polynomial>& classes);

/// Class w*t of a hypersurface cut out by a semi-invariant of weight w under
/// a rank-1 torus; weights are the positive weights of the function action.
/// Throws InvalidArgument if w <= 0 or the lattice has rank != 1.
Polynomial hypersurface_class(std::int64_t w, const CharacterLattice& lattice);

/// Invariant cycles on k^3 - 0 under G_m with weights (1,2,2), compared with
/// the equivariant ring Z[t]/(4t^3).
struct NaiveComparison {
  struct Entry {
    std::string name;
    std::string cycle;
    Polynomial image;
  };

  RingPresentation presentation;
  std::vector<Entry> table;
  GradedAbelianGroup degree_two;
  /// Index of the image of the naive degree-2 group in the degree-2 piece.
  Integer naive_index;
  /// image(p)^2, the would-be self-intersection of p.
  Polynomial p_squared;
  bool p_squared_in_naive_image = true;
  /// [x=0]*[y=0] equals the image of the line l.
  bool transverse_product_matches = false;
};

NaiveComparison naive_comparison_122();

}  // namespace equichow
