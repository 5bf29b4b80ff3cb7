#pragma once

// Equivariant Chow rings of a point: Z[t] for G_m, Z[t1..tn] for a split
// torus, Z[c1..cn] for GL(n) and Z[c2..cn] for SL(n), with c_i in degree i.

#include <cstddef>
#include <cstdint>
#include <string>

#include "equichow/polynomial.hpp"
#include "equichow/presentation.hpp"

namespace equichow {

struct GroupSpec {
  enum class Kind { gm, torus, gl, sl };

  Kind kind = Kind::gm;
  std::size_t n = 1;

  static GroupSpec gm() { return {Kind::gm, 1}; }
  static GroupSpec torus(std::size_t n);
  static GroupSpec gl(std::size_t n);
  static GroupSpec sl(std::size_t n);

  /// Accepts "Gm", "T<n>", "GL<n>", "SL<n>" (case-insensitive).
  static GroupSpec parse(const std::string& s);
  std::string to_string() const;
};

RingPresentation point_ring(const GroupSpec& group);

/// Z[c1..cn] graded by deg c_i = i.
RingPtr chern_ring(std::size_t n);

/// c_i -> e_i(t1..tn). Accepts polynomials from point_ring(GL(n)) or
/// point_ring(SL(n)); the result lives in the rank-n character ring.
Polynomial restrict_to_torus(const Polynomial& p, std::size_t n);

/// Counts degree-d monomials in c1..cn and degree-d symmetric polynomials in
/// t1..tn independently, and checks restrict_to_torus is injective on the
/// degree-d monomial basis over Q.
bool weyl_image_check(std::size_t n, std::int64_t d);

/// Number of partitions of d into at most n parts (dimension of the degree-d
/// symmetric polynomials in n variables).
std::size_t symmetric_dimension(std::size_t n, std::int64_t d);

}  // namespace equichow
