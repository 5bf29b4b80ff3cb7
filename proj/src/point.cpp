#include "equichow/point.hpp"

#include <algorithm>
#include <cctype>

#include "equichow/characters.hpp"
#include "equichow/error.hpp"
#include "equichow/linalg.hpp"
#include "equichow/symmetric.hpp"

namespace equichow {

GroupSpec GroupSpec::torus(std::size_t n) {
  if (n == 0) throw InvalidArgument("torus rank must be positive");
  return {Kind::torus, n};
}

GroupSpec GroupSpec::gl(std::size_t n) {
  if (n == 0) throw InvalidArgument("GL(n) needs n >= 1");
  return {Kind::gl, n};
}

GroupSpec GroupSpec::sl(std::size_t n) {
  if (n < 2) throw InvalidArgument("SL(n) needs n >= 2");
  return {Kind::sl, n};
}

GroupSpec GroupSpec::parse(const std::string& s) {
  std::string u;
  for (char ch : s) u += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  auto number = [&](std::size_t from) -> std::size_t {
    std::string digits = u.substr(from);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit) || digits.size() > 6)
      throw ParseError("invalid group '" + s + "'; expected Gm, T<n>, GL<n> or SL<n>");
    return std::stoul(digits);
  };
  try {
    if (u == "GM") return gm();
    if (u.rfind("GL", 0) == 0) return gl(number(2));
    if (u.rfind("SL", 0) == 0) return sl(number(2));
    if (u.rfind("T", 0) == 0) return torus(number(1));
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("invalid group '") + s + "': " + e.what());
  }
  throw ParseError("invalid group '" + s + "'; expected Gm, T<n>, GL<n> or SL<n>");
}

std::string GroupSpec::to_string() const {
  switch (kind) {
    case Kind::gm:
      return "Gm";
    case Kind::torus:
      return "T" + std::to_string(n);
    case Kind::gl:
      return "GL" + std::to_string(n);
    case Kind::sl:
      return "SL" + std::to_string(n);
  }
  return "?";
}

RingPtr chern_ring(std::size_t n) {
  std::vector<PolyRing::Variable> vars;
  for (std::size_t i = 1; i <= n; ++i)
    vars.push_back({"c" + std::to_string(i), static_cast<std::int64_t>(i)});
  return PolyRing::make(std::move(vars));
}

namespace {

RingPtr sl_ring(std::size_t n) {
  std::vector<PolyRing::Variable> vars;
  for (std::size_t i = 2; i <= n; ++i)
    vars.push_back({"c" + std::to_string(i), static_cast<std::int64_t>(i)});
  return PolyRing::make(std::move(vars));
}

}  // namespace

RingPresentation point_ring(const GroupSpec& group) {
  switch (group.kind) {
    case GroupSpec::Kind::gm:
      return RingPresentation::free(CharacterLattice(1).ring(), CoefficientDomain::integers);
    case GroupSpec::Kind::torus:
      return RingPresentation::free(CharacterLattice(group.n).ring(), CoefficientDomain::integers);
    case GroupSpec::Kind::gl:
      return RingPresentation::free(chern_ring(group.n), CoefficientDomain::integers);
    case GroupSpec::Kind::sl:
      return RingPresentation::free(sl_ring(group.n), CoefficientDomain::integers);
  }
  throw InvalidArgument("unknown group kind");
}

Polynomial restrict_to_torus(const Polynomial& p, std::size_t n) {
  CharacterLattice lattice(n);
  Bindings bindings;
  for (const auto& v : p.ring()->variables()) {
    if (v.name.size() < 2 || v.name[0] != 'c')
      throw InvalidArgument("restrict_to_torus expects Chern variables c_i, got '" + v.name + "'");
    std::size_t i = std::stoul(v.name.substr(1));
    if (i == 0 || i > n || v.degree != static_cast<std::int64_t>(i))
      throw InvalidArgument("variable '" + v.name + "' is not a Chern class of GL(" +
                            std::to_string(n) + ")");
    bindings.emplace(v.name, elementary_symmetric(i, lattice.variable_names(), lattice.ring()));
  }
  return substitute(p, bindings, lattice.ring());
}

std::size_t symmetric_dimension(std::size_t n, std::int64_t d) {
  if (d < 0) return 0;
  // Weakly decreasing exponent vectors a_1 >= ... >= a_n >= 0 summing to d,
  // i.e. leading monomials of the monomial symmetric functions.
  auto count = [&](auto&& self, std::size_t slots, std::int64_t remaining,
                   std::int64_t cap) -> std::size_t {
    if (remaining == 0) return 1;
    if (slots == 0) return 0;
    std::size_t total = 0;
    for (std::int64_t a = std::min(cap, remaining); a >= 1; --a)
      total += self(self, slots - 1, remaining - a, a);
    return total;
  };
  return count(count, n, d, d);
}

bool weyl_image_check(std::size_t n, std::int64_t d) {
  auto ring = chern_ring(n);
  auto basis = monomials_of_degree(*ring, d);
  if (basis.size() != symmetric_dimension(n, d)) return false;

  CharacterLattice lattice(n);
  auto target_basis = monomials_of_degree(*lattice.ring(), d);
  RationalMatrix images;
  for (const auto& m : basis) {
    auto image = restrict_to_torus(Polynomial(ring, Rational(1), m), n);
    if (!is_symmetric(image, lattice.variable_names())) return false;
    std::vector<Rational> row;
    for (const auto& tm : target_basis) row.push_back(image.coefficient(tm));
    images.push_back(std::move(row));
  }
  return rational_rank(std::move(images)) == basis.size();
}

}  // namespace equichow
