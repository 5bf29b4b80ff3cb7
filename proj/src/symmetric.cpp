#include "equichow/symmetric.hpp"

#include <algorithm>

#include "equichow/error.hpp"

namespace equichow {

namespace {

std::vector<std::size_t> indices_of(const PolyRing& ring, const std::vector<std::string>& vars) {
  std::vector<std::size_t> idx;
  idx.reserve(vars.size());
  for (const auto& v : vars) idx.push_back(ring.require_index(v));
  auto sorted = idx;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InvalidArgument("repeated variable in symmetric-function variable list");
  return idx;
}

}  // namespace

Polynomial elementary_symmetric(std::size_t i, const std::vector<std::string>& vars,
                                const RingPtr& ring) {
  if (i > vars.size())
    throw InvalidArgument("e_" + std::to_string(i) + " undefined on " +
                          std::to_string(vars.size()) + " variables");
  auto idx = indices_of(*ring, vars);
  Polynomial result(ring);
  // Walk all i-subsets in lexicographic order.
  std::vector<std::size_t> pick(i);
  for (std::size_t k = 0; k < i; ++k) pick[k] = k;
  for (;;) {
    std::vector<std::uint32_t> e(ring->size(), 0);
    for (auto k : pick) e[idx[k]] = 1;
    result.add_term(Rational(1), Monomial(std::move(e), *ring));
    std::size_t k = i;
    while (k > 0 && pick[k - 1] == vars.size() - i + (k - 1)) --k;
    if (k == 0) break;
    ++pick[k - 1];
    for (std::size_t j = k; j < i; ++j) pick[j] = pick[j - 1] + 1;
  }
  return result;
}

bool is_symmetric(const Polynomial& p, const std::vector<std::string>& vars) {
  auto idx = indices_of(*p.ring(), vars);
  // Adjacent transpositions generate the symmetric group.
  for (std::size_t k = 0; k + 1 < idx.size(); ++k) {
    for (const auto& [m, c] : p.terms()) {
      auto e = m.exponents();
      std::swap(e[idx[k]], e[idx[k + 1]]);
      if (p.coefficient(Monomial(std::move(e), *p.ring())) != c) return false;
    }
  }
  return true;
}

RingPtr elementary_ring(const PolyRing& source, const std::vector<std::string>& vars,
                        const std::string& prefix) {
  auto idx = indices_of(source, vars);
  std::int64_t base = idx.empty() ? 1 : source.variable(idx[0]).degree;
  for (auto i : idx)
    if (source.variable(i).degree != base)
      throw InvalidArgument("symmetric variables must share a degree");
  std::vector<PolyRing::Variable> out;
  for (std::size_t k = 1; k <= vars.size(); ++k)
    out.push_back({prefix + std::to_string(k), base * static_cast<std::int64_t>(k)});
  return PolyRing::make(std::move(out));
}

Polynomial express_in_elementary(const Polynomial& p, const std::vector<std::string>& vars,
                                 const RingPtr& elementary) {
  const PolyRing& ring = *p.ring();
  auto idx = indices_of(ring, vars);
  if (elementary->size() != vars.size())
    throw InvalidArgument("elementary ring must have one variable per symmetric variable");
  for (const auto& [m, c] : p.terms())
    for (std::size_t i = 0; i < ring.size(); ++i)
      if (m.exponent(i) > 0 && std::find(idx.begin(), idx.end(), i) == idx.end())
        throw InvalidArgument("variable '" + ring.variable(i).name +
                              "' is not among the symmetric variables");
  if (!is_symmetric(p, vars)) throw NotSymmetric("polynomial is not symmetric: " + p.to_string());

  const std::size_t n = vars.size();
  std::vector<Polynomial> e;
  for (std::size_t k = 1; k <= n; ++k) e.push_back(elementary_symmetric(k, vars, p.ring()));

  // Repeatedly cancel the lex-leading term t^a (a weakly decreasing in the
  // order of vars) against e1^(a1-a2) e2^(a2-a3) ... en^an.
  auto lex_key = [&](const Monomial& m) {
    std::pair<std::uint64_t, std::vector<std::uint32_t>> key{m.total_degree(), {}};
    for (auto i : idx) key.second.push_back(m.exponent(i));
    return key;
  };

  Polynomial remainder = p;
  Polynomial result(elementary);
  while (!remainder.is_zero()) {
    auto lead = remainder.terms().begin();
    for (auto it = remainder.terms().begin(); it != remainder.terms().end(); ++it)
      if (lex_key(it->first) > lex_key(lead->first)) lead = it;
    std::vector<std::uint32_t> a;
    for (auto i : idx) a.push_back(lead->first.exponent(i));
    Rational c = lead->second;

    std::vector<std::uint32_t> b(n);
    Polynomial product(p.ring(), c);
    for (std::size_t k = 0; k < n; ++k) {
      b[k] = a[k] - (k + 1 < n ? a[k + 1] : 0);
      if (b[k] > 0) product *= pow(e[k], b[k]);
    }
    result.add_term(c, Monomial(b, *elementary));
    remainder -= product;
  }
  return result;
}

}  // namespace equichow
