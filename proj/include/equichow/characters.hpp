#pragma once

// Characters of a split torus T = G_m^n, stored additively as integer weight
// vectors. The character lattice carries the polynomial ring S(T^) whose
// degree-1 variables are the basis characters: "t" in rank 1, "t1".."tn"
// otherwise.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "equichow/polynomial.hpp"

namespace equichow {

class CharacterLattice {
 public:
  explicit CharacterLattice(std::size_t rank);

  std::size_t rank() const { return names_.size(); }
  const std::vector<std::string>& variable_names() const { return names_; }
  const RingPtr& ring() const { return ring_; }

  bool operator==(const CharacterLattice& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
  RingPtr ring_;
};

class Character {
 public:
  Character() = default;
  explicit Character(std::vector<std::int64_t> weights) : weights_(std::move(weights)) {}
  static Character zero(std::size_t rank) { return Character(std::vector<std::int64_t>(rank, 0)); }

  std::size_t rank() const { return weights_.size(); }
  std::int64_t operator[](std::size_t i) const { return weights_[i]; }
  const std::vector<std::int64_t>& weights() const { return weights_; }
  bool is_zero() const;

  Character operator+(const Character& other) const;
  Character operator-(const Character& other) const;
  Character operator-() const;
  Character operator*(std::int64_t k) const;

  auto operator<=>(const Character&) const = default;

  /// "(1,-1)".
  std::string to_string() const;

 private:
  std::vector<std::int64_t> weights_;
};

/// A finite multiset of characters, kept in input order.
class Representation {
 public:
  Representation(CharacterLattice lattice, std::vector<Character> characters);

  const CharacterLattice& lattice() const { return lattice_; }
  const std::vector<Character>& characters() const { return characters_; }
  std::size_t dimension() const { return characters_.size(); }
  bool has_distinct_characters() const;

  /// Multiset equality.
  bool same_multiset(const Representation& other) const;
  std::string to_string() const;

 private:
  CharacterLattice lattice_;
  std::vector<Character> characters_;
};

/// sum_j chi_j t_j, the first Chern class of the line with character chi.
Polynomial char_linear_form(const Character& chi, const CharacterLattice& lattice);

/// prod over characters of (1 + linear form).
Polynomial total_chern(const Representation& V);
/// Homogeneous degree-k part of total_chern(V).
Polynomial chern_class(const Representation& V, std::size_t k);

Representation dual(const Representation& V);
Representation direct_sum(const Representation& V, const Representation& W);
Representation twist(const Representation& V, const Character& chi);

/// Weights of the normal space at the r-th coordinate fixed point:
/// {chi_s - chi_r : s != r}. Throws RepeatedWeights unless characters are
/// pairwise distinct.
Representation normal_rep_at_fixed_point(const Representation& V, std::size_t r);
/// The same multiset without subtracting chi_r: {chi_s : s != r}.
Representation normal_rep_at_fixed_point_absolute(const Representation& V, std::size_t r);

/// Parses "-2,-4,-6" (rank 1: one character per entry) or "1,0;0,1"
/// (characters separated by ';', entries by ','). With rank 0 the rank is
/// inferred: 1 when there is no ';', else the entry count of each group.
std::vector<Character> parse_weights(std::string_view text, std::size_t rank = 0);

}  // namespace equichow
