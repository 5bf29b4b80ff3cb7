#pragma once

// T-equivariant Chow ring of P^n for a diagonal torus action with characters
// chi_0..chi_n:
//
//   A_T(P^n) = S(T^)[h] / prod_j (h + l(chi_j)),   l = char_linear_form.
//
// At the fixed point p_r the hyperplane class restricts to -l(chi_r), the
// pushforward of 1 is prod_{s != r}(h + l(chi_s)) and the Euler class of the
// normal space is prod_{s != r}(l(chi_s) - l(chi_r)).

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "equichow/characters.hpp"
#include "equichow/polynomial.hpp"
#include "equichow/presentation.hpp"

namespace equichow {

class ProjectiveAction {
 public:
  /// Throws InvalidArgument for an empty weight list or rank mismatch.
  ProjectiveAction(CharacterLattice lattice, std::vector<Character> weights);
  /// Rank-1 convenience: weights a_0..a_n.
  static ProjectiveAction rank_one(const std::vector<std::int64_t>& weights);

  const CharacterLattice& lattice() const { return lattice_; }
  const std::vector<Character>& weights() const { return weights_; }
  /// Dimension n of P^n.
  std::size_t dimension() const { return weights_.size() - 1; }
  bool has_distinct_weights() const;

  /// Lattice variables followed by h, all of degree 1.
  const RingPtr& ring() const { return ring_; }
  Polynomial hyperplane() const { return Polynomial::variable(ring_, "h"); }

 private:
  CharacterLattice lattice_;
  std::vector<Character> weights_;
  RingPtr ring_;
};

/// Relation prod_j (h + l(chi_j)), strategy monic-in-variable(h).
RingPresentation proj_ring(const ProjectiveAction& A);

/// n + 1, after checking that 1, h, ..., h^n are distinct normal forms and
/// that h^k reduces to h-degree <= n for k <= 2n + 1. Throws
/// VerificationFailure if the structure check fails.
std::size_t module_rank(const ProjectiveAction& A);

struct FixedPointDatum {
  std::size_t index = 0;
  Polynomial hyperplane_restriction;  // -l(chi_r), in the lattice ring
  Polynomial euler;                   // prod_{s != r}(l(chi_s) - l(chi_r))
};

std::vector<FixedPointDatum> fixed_points(const ProjectiveAction& A);

/// Substitutes h -> -l(chi_r); the result lives in the lattice ring.
Polynomial restrict_to_fixed(const Polynomial& alpha, std::size_t r, const ProjectiveAction& A);
/// alpha * prod_{s != r}(h + l(chi_s)), reduced; alpha lives in the lattice ring.
Polynomial pushforward_from_fixed(const Polynomial& alpha, std::size_t r,
                                  const ProjectiveAction& A);
Polynomial euler_class(std::size_t r, const ProjectiveAction& A);

/// m*h + l(chi).
Polynomial chern_line_bundle(std::int64_t m, const Character& chi, const ProjectiveAction& A);

/// A fraction numerator / prod f_i^{m_i} with each f_i a primitive linear
/// form (integer coefficients with gcd 1, positive leading coefficient).
/// Denominators are kept factored; common factors cancel only by exact
/// division.
class LocalizedElement {
 public:
  explicit LocalizedElement(Polynomial numerator);
  /// Throws InvalidArgument unless every form is nonzero and homogeneous of degree 1.
  LocalizedElement(Polynomial numerator, const std::vector<Polynomial>& linear_forms);

  const Polynomial& numerator() const { return numerator_; }
  const std::vector<std::pair<Polynomial, unsigned>>& denominator() const { return denominator_; }

  LocalizedElement& operator+=(const LocalizedElement& other);
  LocalizedElement& operator*=(const LocalizedElement& other);
  friend LocalizedElement operator+(LocalizedElement a, const LocalizedElement& b) { return a += b; }
  friend LocalizedElement operator*(LocalizedElement a, const LocalizedElement& b) { return a *= b; }

  /// The polynomial value if every denominator factor has cancelled.
  std::optional<Polynomial> to_polynomial() const;
  std::string to_string() const;

 private:
  void multiply_denominator(const Polynomial& primitive, unsigned mult);
  void cancel();

  Polynomial numerator_;
  std::vector<std::pair<Polynomial, unsigned>> denominator_;
};

/// sum_r restrict_to_fixed(alpha, r) / euler_class(r). alpha must be zero or
/// homogeneous; throws RepeatedWeights for repeated characters and
/// VerificationFailure if the sum does not clear to a polynomial of degree
/// deg(alpha) - n.
Polynomial integrate_by_localization(const Polynomial& alpha, const ProjectiveAction& A);

}  // namespace equichow
