#pragma once

// Exact dense linear algebra over Z and Q, sized for graded pieces of
// small presentations.

#include <cstddef>
#include <vector>

#include "equichow/polynomial.hpp"

namespace equichow {

using IntegerMatrix = std::vector<std::vector<Integer>>;   // row-major
using RationalMatrix = std::vector<std::vector<Rational>>;  // row-major

struct SmithForm {
  /// Nonzero invariant factors d_1 | d_2 | ... | d_rank, all positive.
  std::vector<Integer> invariant_factors;
  std::size_t rows = 0;
  std::size_t cols = 0;
};

SmithForm smith_normal_form(IntegerMatrix m);

/// Rank over Q.
std::size_t rational_rank(RationalMatrix m);
std::size_t rational_rank(const IntegerMatrix& m);

/// Whether `target` (length = rows) lies in the Z-span of the columns of m.
bool integer_span_contains(const IntegerMatrix& m, const std::vector<Integer>& target);

}  // namespace equichow
