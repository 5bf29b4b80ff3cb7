#pragma once

// Sparse multivariate polynomials with exact rational coefficients over a
// graded variable set.
//
// A PolyRing is the ambient: an ordered list of variable names, each with a
// positive degree. Monomials are dense exponent vectors relative to that
// list and are ordered graded-lexicographically: first by weighted degree,
// then lexicographically with the first declared variable largest. Terms of
// a Polynomial are kept in decreasing monomial order, which is also the
// order used for every textual or JSON rendering.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace equichow {

using Integer = mpz_class;
using Rational = mpq_class;

class PolyRing {
 public:
  struct Variable {
    std::string name;
    std::int64_t degree = 1;
    bool operator==(const Variable&) const = default;
  };

  /// Throws InvalidArgument on empty/duplicate names or non-positive degrees.
  explicit PolyRing(std::vector<Variable> variables);

  static std::shared_ptr<const PolyRing> make(std::vector<Variable> variables);
  static std::shared_ptr<const PolyRing> make(std::initializer_list<Variable> variables) {
    return make(std::vector<Variable>(variables));
  }
  /// All variables of degree 1.
  static std::shared_ptr<const PolyRing> make(const std::vector<std::string>& names);

  std::size_t size() const { return variables_.size(); }
  const Variable& variable(std::size_t i) const { return variables_.at(i); }
  const std::vector<Variable>& variables() const { return variables_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  std::size_t require_index(std::string_view name) const;

  bool operator==(const PolyRing& other) const { return variables_ == other.variables_; }

 private:
  std::vector<Variable> variables_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

/// Rings compare by content, so independently built but identical variable
/// sets are interchangeable.
bool same_ring(const RingPtr& a, const RingPtr& b);

class Monomial {
 public:
  Monomial() = default;
  Monomial(std::vector<std::uint32_t> exponents, const PolyRing& ring);
  static Monomial one(const PolyRing& ring);
  static Monomial variable(const PolyRing& ring, std::size_t index, std::uint32_t power = 1);

  std::size_t size() const { return exponents_.size(); }
  std::uint32_t exponent(std::size_t i) const { return exponents_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return exponents_; }
  /// Weighted degree under the ring's grading.
  std::int64_t degree() const { return degree_; }
  std::uint64_t total_degree() const;
  bool is_one() const { return degree_ == 0; }

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  /// Exact quotient; requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;
  static Monomial lcm(const Monomial& a, const Monomial& b, const PolyRing& ring);

  // Graded lex: degree first, then exponent vectors lexicographically.
  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;

 private:
  std::int64_t degree_ = 0;
  std::vector<std::uint32_t> exponents_;
};

class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational, std::greater<>>;

  explicit Polynomial(RingPtr ring);
  Polynomial(RingPtr ring, const Rational& constant);
  Polynomial(RingPtr ring, const Rational& coefficient, Monomial monomial);

  static Polynomial variable(RingPtr ring, std::string_view name);

  const RingPtr& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool has_integer_coefficients() const;

  /// Requires a nonzero polynomial.
  const Monomial& leading_monomial() const;
  const Rational& leading_coefficient() const;
  Rational coefficient(const Monomial& m) const;
  /// Largest exponent of variable `index` over all terms (0 for the zero polynomial).
  std::uint32_t degree_in(std::size_t index) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);
  Polynomial operator-() const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

  /// Adds c*m in place.
  void add_term(const Rational& c, const Monomial& m);
  /// Returns p * c * m.
  Polynomial times_term(const Rational& c, const Monomial& m) const;

  bool operator==(const Polynomial& other) const;

  /// Canonical text form: terms in decreasing monomial order, explicit `*`
  /// and `^`, e.g. "h^2 + 3*t*h - 1/2*t^2". The zero polynomial is "0".
  std::string to_string() const;

 private:
  void check_ring(const Polynomial& other) const;

  RingPtr ring_;
  Terms terms_;
};

Polynomial pow(const Polynomial& p, std::uint32_t exponent);

/// Weighted degree of a polynomial: a single degree, the zero polynomial, or
/// a mix of degrees. Zero is deliberately distinct from degree 0.
class WeightedDegree {
 public:
  enum class Kind { zero, homogeneous, inhomogeneous };

  static WeightedDegree zero() { return WeightedDegree(Kind::zero, 0); }
  static WeightedDegree inhomogeneous() { return WeightedDegree(Kind::inhomogeneous, 0); }
  static WeightedDegree of(std::int64_t d) { return WeightedDegree(Kind::homogeneous, d); }

  Kind kind() const { return kind_; }
  bool is_homogeneous() const { return kind_ == Kind::homogeneous; }
  /// Only meaningful for homogeneous polynomials.
  std::int64_t value() const { return degree_; }
  bool operator==(const WeightedDegree&) const = default;

 private:
  WeightedDegree(Kind k, std::int64_t d) : kind_(k), degree_(d) {}
  Kind kind_;
  std::int64_t degree_;
};

WeightedDegree weighted_degree(const Polynomial& p);
/// Zero or homogeneous.
bool is_homogeneous(const Polynomial& p);

using Bindings = std::map<std::string, Polynomial, std::less<>>;

/// Replaces each bound variable by its image and maps every other variable
/// of p to the same-named variable of `target`. Throws AmbientMismatch if a
/// binding lives outside `target`, UnboundVariable if a variable occurring in
/// p is neither bound nor present in `target`.
Polynomial substitute(const Polynomial& p, const Bindings& bindings, const RingPtr& target);
/// Target is the common ring of the bindings, or p's ring when there are none.
Polynomial substitute(const Polynomial& p, const Bindings& bindings);
/// Moves p into `target` by variable name.
Polynomial embed(const Polynomial& p, const RingPtr& target);

/// Exact division: returns q with f == q*g, or nullopt if g does not divide f.
std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g);

/// All monomials of weighted degree d, in decreasing monomial order.
std::vector<Monomial> monomials_of_degree(const PolyRing& ring, std::int64_t d);

/// Parses the strict expression grammar
///   expr   := term (('+'|'-') term)*
///   term   := unary (('*'|'/') unary)*
///   unary  := '-' unary | power
///   power  := atom ('^' integer)?
///   atom   := integer | name | '(' expr ')'
/// Juxtaposition is not multiplication; '/' only accepts a nonzero constant
/// on its right. Names must be variables of `ring`.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

std::string to_string(const Rational& q);

}  // namespace equichow
