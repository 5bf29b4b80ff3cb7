#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "equichow/polynomial.hpp"

namespace equichow {

/// e_i of the named variables of `ring`; e_0 = 1. Throws InvalidArgument
/// unless 0 <= i <= vars.size().
Polynomial elementary_symmetric(std::size_t i, const std::vector<std::string>& vars,
                                const RingPtr& ring);

/// Invariance of p under every transposition of `vars`.
bool is_symmetric(const Polynomial& p, const std::vector<std::string>& vars);

/// Writes a symmetric p as a polynomial in `elementary`'s variables, whose
/// k-th variable stands for e_{k+1}(vars). Throws NotSymmetric on
/// non-symmetric input and InvalidArgument if p involves variables outside
/// `vars` or `elementary` does not have vars.size() variables.
Polynomial express_in_elementary(const Polynomial& p, const std::vector<std::string>& vars,
                                 const RingPtr& elementary);

/// Ring e1..en with e_k of degree k * (common degree of vars).
RingPtr elementary_ring(const PolyRing& source, const std::vector<std::string>& vars,
                        const std::string& prefix = "e");

}  // namespace equichow
