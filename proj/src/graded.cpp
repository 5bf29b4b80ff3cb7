#include "equichow/graded.hpp"

#include <algorithm>
#include <map>

#include "equichow/error.hpp"

namespace equichow {

std::string GradedAbelianGroup::to_string() const {
  std::vector<std::string> parts;
  if (free_rank == 1) parts.push_back("Z");
  if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
  for (const auto& t : torsion) parts.push_back("Z/" + t.get_str());
  if (parts.empty()) return "0";
  std::string s = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) s += " + " + parts[i];
  return s;
}

namespace {

Integer lcm_of_denominators(const Polynomial& p) {
  Integer l = 1;
  for (const auto& [m, c] : p.terms()) l = lcm(l, Integer(c.get_den()));
  return l;
}

std::map<Monomial, std::size_t, std::greater<>> index_basis(const std::vector<Monomial>& basis) {
  std::map<Monomial, std::size_t, std::greater<>> idx;
  for (std::size_t i = 0; i < basis.size(); ++i) idx.emplace(basis[i], i);
  return idx;
}

void append_column(IntegerMatrix& m, const std::vector<Integer>& col) {
  for (std::size_t i = 0; i < m.size(); ++i) m[i].push_back(col[i]);
}

}  // namespace

std::vector<Integer> coordinates(const Polynomial& p, const std::vector<Monomial>& basis) {
  auto idx = index_basis(basis);
  std::vector<Integer> out(basis.size(), 0);
  for (const auto& [m, c] : p.terms()) {
    auto it = idx.find(m);
    if (it == idx.end())
      throw InvalidArgument("polynomial " + p.to_string() + " is not in the spanned degree");
    if (c.get_den() != 1) throw InvalidArgument("non-integral coordinates for " + p.to_string());
    out[it->second] = c.get_num();
  }
  return out;
}

DegreePiece degree_piece(const RingPresentation& R, std::int64_t d, bool allow_rational_scaling) {
  if (d < 0) throw InvalidArgument("graded pieces need a non-negative degree");
  if (R.domain() == CoefficientDomain::rationals && !allow_rational_scaling)
    throw InvalidArgument("graded_piece needs integer coefficients; use rational_graded_rank");
  DegreePiece piece;
  piece.basis = monomials_of_degree(*R.ring(), d);
  piece.relation_columns.assign(piece.basis.size(), {});
  for (const auto& r : R.relations()) {
    auto rd = weighted_degree(r).value();
    if (rd > d) continue;
    Integer scale = lcm_of_denominators(r);
    for (const auto& m : monomials_of_degree(*R.ring(), d - rd)) {
      Polynomial column = r.times_term(Rational(scale), m);
      append_column(piece.relation_columns, coordinates(column, piece.basis));
      ++piece.column_count;
    }
  }
  return piece;
}

GradedAbelianGroup graded_piece(const RingPresentation& R, std::int64_t d) {
  auto piece = degree_piece(R, d);
  GradedAbelianGroup g;
  if (piece.basis.empty()) return g;
  auto snf = smith_normal_form(piece.relation_columns);
  g.free_rank = piece.basis.size() - snf.invariant_factors.size();
  for (const auto& f : snf.invariant_factors)
    if (f != 1) g.torsion.push_back(f);
  return g;
}

std::size_t rational_graded_rank(const RingPresentation& R, std::int64_t d) {
  auto piece = degree_piece(R, d, true);
  if (piece.basis.empty()) return 0;
  return piece.basis.size() - rational_rank(piece.relation_columns);
}

std::size_t standard_monomial_count(const RingPresentation& R, std::int64_t d) {
  std::size_t count = 0;
  for (const auto& m : monomials_of_degree(*R.ring(), d)) {
    Polynomial p(R.ring(), Rational(1), m);
    if (normal_form(p, R) == p) ++count;
  }
  return count;
}

namespace {

IntegerMatrix generator_matrix(const RingPresentation& R, std::int64_t d,
                               const std::vector<Polynomial>& generators,
                               std::vector<Monomial>& basis) {
  auto piece = degree_piece(R, d);
  basis = piece.basis;
  IntegerMatrix m = piece.relation_columns;
  for (const auto& g : generators) {
    if (!g.is_zero() && weighted_degree(g) != WeightedDegree::of(d))
      throw InvalidArgument("generator " + g.to_string() + " is not of degree " + std::to_string(d));
    append_column(m, coordinates(g, basis));
  }
  return m;
}

}  // namespace

bool subgroup_contains(const RingPresentation& R, std::int64_t d,
                       const std::vector<Polynomial>& generators, const Polynomial& target) {
  std::vector<Monomial> basis;
  auto m = generator_matrix(R, d, generators, basis);
  if (!target.is_zero() && weighted_degree(target) != WeightedDegree::of(d))
    throw InvalidArgument("target is not of degree " + std::to_string(d));
  return integer_span_contains(m, coordinates(target, basis));
}

Integer subgroup_index(const RingPresentation& R, std::int64_t d,
                       const std::vector<Polynomial>& generators) {
  std::vector<Monomial> basis;
  auto m = generator_matrix(R, d, generators, basis);
  if (basis.empty()) return 1;
  auto snf = smith_normal_form(m);
  if (snf.invariant_factors.size() < basis.size()) return 0;
  Integer index = 1;
  for (const auto& f : snf.invariant_factors) index *= f;
  return index;
}

bool multiplication_surjective(const RingPresentation& R, const Polynomial& x, std::int64_t d) {
  auto xd = weighted_degree(x);
  if (!xd.is_homogeneous()) throw InvalidArgument("multiplier must be homogeneous and nonzero");
  std::vector<Polynomial> images;
  for (const auto& m : monomials_of_degree(*R.ring(), d)) images.push_back(x.times_term(1, m));
  return subgroup_index(R, d + xd.value(), images) == 1;
}

}  // namespace equichow
