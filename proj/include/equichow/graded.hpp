#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "equichow/linalg.hpp"
#include "equichow/presentation.hpp"

namespace equichow {

/// Z^free_rank + Z/torsion[0] + ... with torsion[i] | torsion[i+1], each >= 2.
struct GradedAbelianGroup {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;

  /// "0", "Z", "Z^2", "Z/12", "Z + Z/2 + Z/4".
  std::string to_string() const;
  bool operator==(const GradedAbelianGroup&) const = default;
};

/// The degree-d piece of the ideal of R as an integer matrix: rows indexed by
/// `basis` (monomials of degree d, decreasing), one column per product of a
/// degree-(d - deg r) monomial with a relation r.
struct DegreePiece {
  std::vector<Monomial> basis;
  IntegerMatrix relation_columns;  // rows x columns, row-major
  std::size_t column_count = 0;
};

/// Requires an integral presentation (rational coefficients are scaled to
/// integers column by column when `allow_rational_scaling` is set, which
/// keeps the Q-span and is only used for rank computations).
DegreePiece degree_piece(const RingPresentation& R, std::int64_t d,
                         bool allow_rational_scaling = false);

/// Degree-d piece of R as an abelian group, by Smith normal form of the
/// relation matrix. Throws InvalidArgument for rational presentations or d < 0.
GradedAbelianGroup graded_piece(const RingPresentation& R, std::int64_t d);

/// dim_Q of the degree-d piece, by Gaussian elimination on the relation
/// matrix. Valid for either coefficient domain.
std::size_t rational_graded_rank(const RingPresentation& R, std::int64_t d);

/// Number of degree-d monomials that are their own normal form. For a
/// rational presentation this equals rational_graded_rank.
std::size_t standard_monomial_count(const RingPresentation& R, std::int64_t d);

/// Coordinates of a homogeneous degree-d polynomial in `basis`.
std::vector<Integer> coordinates(const Polynomial& p, const std::vector<Monomial>& basis);

/// Whether `target` (homogeneous of degree d, integral) lies in the subgroup
/// of the degree-d piece of R generated by `generators`.
bool subgroup_contains(const RingPresentation& R, std::int64_t d,
                       const std::vector<Polynomial>& generators, const Polynomial& target);

/// Index of the subgroup generated by `generators` inside the degree-d piece
/// of R, or 0 when the index is infinite.
Integer subgroup_index(const RingPresentation& R, std::int64_t d,
                       const std::vector<Polynomial>& generators);

/// Whether multiplication by the homogeneous element x maps the degree-d
/// piece of R onto the degree-(d + deg x) piece.
bool multiplication_surjective(const RingPresentation& R, const Polynomial& x, std::int64_t d);

}  // namespace equichow
