#include "equichow/presentation.hpp"

#include <algorithm>
#include <utility>

#include "equichow/error.hpp"

namespace equichow {

std::string to_string(CoefficientDomain d) {
  return d == CoefficientDomain::integers ? "integers" : "rationals";
}

CoefficientDomain parse_coefficient_domain(const std::string& s) {
  if (s == "integers" || s == "Z") return CoefficientDomain::integers;
  if (s == "rationals" || s == "Q") return CoefficientDomain::rationals;
  throw ParseError("unknown coefficient domain '" + s + "'");
}

std::string ReductionStrategy::to_string() const {
  switch (kind) {
    case Kind::none:
      return "none";
    case Kind::principal_univariate:
      return "principal-univariate";
    case Kind::monic_in_variable:
      return "monic-in-variable(" + variable + ")";
    case Kind::groebner_rational:
      return "groebner-rational";
  }
  return "none";
}

ReductionStrategy ReductionStrategy::parse(const std::string& s) {
  if (s == "none") return none();
  if (s == "principal-univariate") return principal_univariate();
  if (s == "groebner-rational") return groebner_rational();
  const std::string prefix = "monic-in-variable(";
  if (s.size() > prefix.size() + 1 && s.compare(0, prefix.size(), prefix) == 0 && s.back() == ')')
    return monic_in(s.substr(prefix.size(), s.size() - prefix.size() - 1));
  throw ParseError("unknown reduction strategy '" + s + "'");
}

namespace {

bool is_monic_in(const Polynomial& r, std::size_t v) {
  auto k = r.degree_in(v);
  if (k == 0) return false;
  const Monomial pure = Monomial::variable(*r.ring(), v, k);
  for (const auto& [m, c] : r.terms())
    if (m.exponent(v) == k && (m != pure || c != 1)) return false;
  return true;
}

void validate(const RingPtr& ring, CoefficientDomain domain,
              const std::vector<Polynomial>& relations, const ReductionStrategy& strategy) {
  for (const auto& r : relations) {
    if (!same_ring(r.ring(), ring)) throw AmbientMismatch("relation does not live in the ring");
    if (!is_homogeneous(r)) throw InvalidArgument("relation is not homogeneous: " + r.to_string());
    if (domain == CoefficientDomain::integers && !r.has_integer_coefficients())
      throw InvalidArgument("integral presentation has a non-integral relation: " + r.to_string());
  }
  using Kind = ReductionStrategy::Kind;
  switch (strategy.kind) {
    case Kind::none:
      if (!relations.empty())
        throw StrategyMismatch("strategy 'none' requires an empty relation list");
      break;
    case Kind::principal_univariate:
      if (ring->size() != 1)
        throw StrategyMismatch("principal-univariate strategy needs a one-variable ring");
      break;
    case Kind::monic_in_variable: {
      auto v = ring->index_of(strategy.variable);
      if (!v) throw StrategyMismatch("monic variable '" + strategy.variable + "' not in ring");
      for (const auto& r : relations)
        if (!is_monic_in(r, *v))
          throw StrategyMismatch("relation " + r.to_string() + " is not monic in " +
                                 strategy.variable);
      break;
    }
    case Kind::groebner_rational:
      if (domain != CoefficientDomain::rationals)
        throw StrategyMismatch("groebner-rational strategy requires rational coefficients");
      break;
  }
}

}  // namespace

RingPresentation::RingPresentation(RingPtr ring, CoefficientDomain domain,
                                   std::vector<Polynomial> relations, ReductionStrategy strategy)
    : ring_(std::move(ring)), domain_(domain), strategy_(std::move(strategy)) {
  for (auto& r : relations)
    if (!r.is_zero()) relations_.push_back(std::move(r));
  validate(ring_, domain_, relations_, strategy_);
  if (strategy_.kind == ReductionStrategy::Kind::groebner_rational)
    basis_ = equichow::groebner_basis(relations_);
}

RingPresentation RingPresentation::free(RingPtr ring, CoefficientDomain domain) {
  return RingPresentation(std::move(ring), domain, {}, ReductionStrategy::none());
}

std::string RingPresentation::to_string() const {
  std::string s = domain_ == CoefficientDomain::integers ? "Z[" : "Q[";
  for (std::size_t i = 0; i < ring_->size(); ++i) {
    if (i) s += ", ";
    s += ring_->variable(i).name;
  }
  s += ']';
  if (!relations_.empty()) {
    s += "/(";
    for (std::size_t i = 0; i < relations_.size(); ++i) {
      if (i) s += ", ";
      s += relations_[i].to_string();
    }
    s += ')';
  }
  return s;
}

std::string RingPresentation::degrees_string() const {
  std::string s;
  for (const auto& v : ring_->variables()) {
    if (!s.empty()) s += ", ";
    s += v.name + "=" + std::to_string(v.degree);
  }
  return s;
}

bool RingPresentation::operator==(const RingPresentation& other) const {
  return same_ring(ring_, other.ring_) && domain_ == other.domain_ &&
         strategy_ == other.strategy_ && relations_ == other.relations_;
}

ReductionStrategy choose_strategy(const RingPtr& ring, CoefficientDomain domain,
                                  const std::vector<Polynomial>& relations) {
  bool any = std::any_of(relations.begin(), relations.end(),
                         [](const Polynomial& r) { return !r.is_zero(); });
  if (!any) return ReductionStrategy::none();
  if (ring->size() == 1) return ReductionStrategy::principal_univariate();
  if (domain == CoefficientDomain::rationals) return ReductionStrategy::groebner_rational();
  for (std::size_t v = 0; v < ring->size(); ++v) {
    bool ok = std::all_of(relations.begin(), relations.end(), [&](const Polynomial& r) {
      return r.is_zero() || is_monic_in(r, v);
    });
    if (ok) return ReductionStrategy::monic_in(ring->variable(v).name);
  }
  throw StrategyMismatch(
      "integral presentation needs a one-variable ring or relations monic in one variable");
}

namespace {

Polynomial reduce_principal(const Polynomial& p, const RingPresentation& R) {
  Polynomial out(p.ring());
  for (const auto& [m, c] : p.terms()) {
    auto j = m.exponent(0);
    bool killed = false;
    Integer g = 0;
    for (const auto& r : R.relations()) {
      const auto& [rm, rc] = *r.terms().begin();
      if (rm.exponent(0) > j) continue;
      if (R.domain() == CoefficientDomain::rationals) {
        killed = true;
        break;
      }
      Integer a = abs(rc.get_num());
      g = gcd(g, a);
    }
    if (killed) continue;
    if (g == 0) {
      out.add_term(c, m);
    } else {
      Integer rem;
      mpz_fdiv_r(rem.get_mpz_t(), c.get_num().get_mpz_t(), g.get_mpz_t());
      out.add_term(Rational(rem), m);
    }
  }
  return out;
}

Polynomial reduce_monic(Polynomial p, const RingPresentation& R) {
  const std::size_t v = R.ring()->require_index(R.strategy().variable);
  std::vector<std::pair<std::uint32_t, const Polynomial*>> rels;
  for (const auto& r : R.relations()) rels.emplace_back(r.degree_in(v), &r);
  std::stable_sort(rels.begin(), rels.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  if (rels.empty()) return p;
  const std::uint32_t kmin = rels.front().first;
  for (;;) {
    auto it = std::find_if(p.terms().begin(), p.terms().end(),
                           [&](const auto& t) { return t.first.exponent(v) >= kmin; });
    if (it == p.terms().end()) return p;
    Monomial m = it->first;
    Rational c = it->second;
    for (const auto& [k, r] : rels) {
      if (m.exponent(v) < k) break;
      // Replace v^k by v^k - r, which has lower degree in v.
      Monomial quotient = m / Monomial::variable(*p.ring(), v, k);
      p -= r->times_term(c, quotient);
      break;
    }
  }
}

}  // namespace

Polynomial normal_form(const Polynomial& p, const RingPresentation& R) {
  if (!same_ring(p.ring(), R.ring()))
    throw AmbientMismatch("polynomial does not live in the presentation's ring");
  if (R.domain() == CoefficientDomain::integers && !p.has_integer_coefficients())
    throw InvalidArgument("non-integral polynomial in an integral presentation: " + p.to_string());
  switch (R.strategy().kind) {
    case ReductionStrategy::Kind::none:
      return p;
    case ReductionStrategy::Kind::principal_univariate:
      return reduce_principal(p, R);
    case ReductionStrategy::Kind::monic_in_variable:
      return reduce_monic(p, R);
    case ReductionStrategy::Kind::groebner_rational:
      return reduce_by_basis(p, R.groebner_basis());
  }
  return p;
}

// ---------------------------------------------------------------------------
// Buchberger

namespace {

Polynomial make_monic(Polynomial p) {
  if (!p.is_zero()) p *= Rational(1) / p.leading_coefficient();
  return p;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const auto& ring = *f.ring();
  Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial(), ring);
  return f.times_term(Rational(1) / f.leading_coefficient(), l / f.leading_monomial()) -
         g.times_term(Rational(1) / g.leading_coefficient(), l / g.leading_monomial());
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.exponent(i) > 0 && b.exponent(i) > 0) return false;
  return true;
}

}  // namespace

Polynomial reduce_by_basis(const Polynomial& p, const std::vector<Polynomial>& basis) {
  Polynomial f = p;
  Polynomial r(p.ring());
  while (!f.is_zero()) {
    const Monomial lm = f.leading_monomial();
    const Rational lc = f.leading_coefficient();
    const Polynomial* divisor = nullptr;
    for (const auto& g : basis)
      if (g.leading_monomial().divides(lm)) {
        divisor = &g;
        break;
      }
    if (divisor) {
      f -= divisor->times_term(lc / divisor->leading_coefficient(),
                               lm / divisor->leading_monomial());
    } else {
      r.add_term(lc, lm);
      f.add_term(-lc, lm);
    }
  }
  return r;
}

std::vector<Polynomial> groebner_basis(std::vector<Polynomial> generators) {
  std::vector<Polynomial> g;
  for (auto& p : generators)
    if (!p.is_zero()) g.push_back(make_monic(std::move(p)));
  if (g.empty()) return g;
  const auto& ring = *g.front().ring();

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 1; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);

  auto pair_lcm = [&](const std::pair<std::size_t, std::size_t>& pr) {
    return Monomial::lcm(g[pr.first].leading_monomial(), g[pr.second].leading_monomial(), ring);
  };

  while (!pairs.empty()) {
    // Normal selection: smallest lcm first.
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) {
      return pair_lcm(a) < pair_lcm(b);
    });
    auto [i, j] = *best;
    pairs.erase(best);
    if (coprime(g[i].leading_monomial(), g[j].leading_monomial())) continue;
    Polynomial h = reduce_by_basis(s_polynomial(g[i], g[j]), g);
    if (h.is_zero()) continue;
    g.push_back(make_monic(std::move(h)));
    for (std::size_t k = 0; k + 1 < g.size(); ++k) pairs.emplace_back(k, g.size() - 1);
  }

  // Minimalize: drop elements whose leading monomial is divisible by another's.
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& a = g[j].leading_monomial();
      const auto& b = g[i].leading_monomial();
      if (a.divides(b) && (a != b || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  // Interreduce tails.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Polynomial lead(minimal[i].ring(), Rational(1), minimal[i].leading_monomial());
    minimal[i] = lead + reduce_by_basis(minimal[i] - lead, others);
  }
  std::sort(minimal.begin(), minimal.end(), [](const Polynomial& a, const Polynomial& b) {
    return a.leading_monomial() > b.leading_monomial();
  });
  return minimal;
}

}  // namespace equichow
