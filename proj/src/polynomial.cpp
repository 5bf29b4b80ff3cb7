#include "equichow/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <utility>

#include "equichow/error.hpp"

namespace equichow {

// ---------------------------------------------------------------------------
// PolyRing

PolyRing::PolyRing(std::vector<Variable> variables) : variables_(std::move(variables)) {
  std::set<std::string, std::less<>> seen;
  for (const auto& v : variables_) {
    if (v.name.empty()) throw InvalidArgument("variable name must be nonempty");
    if (!(std::isalpha(static_cast<unsigned char>(v.name[0])) || v.name[0] == '_'))
      throw InvalidArgument("variable name must start with a letter: " + v.name);
    for (char ch : v.name)
      if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'))
        throw InvalidArgument("invalid character in variable name: " + v.name);
    if (v.degree <= 0) throw InvalidArgument("variable " + v.name + " must have positive degree");
    if (!seen.insert(v.name).second) throw InvalidArgument("duplicate variable " + v.name);
  }
}

std::shared_ptr<const PolyRing> PolyRing::make(std::vector<Variable> variables) {
  return std::make_shared<const PolyRing>(std::move(variables));
}

std::shared_ptr<const PolyRing> PolyRing::make(const std::vector<std::string>& names) {
  std::vector<Variable> vars;
  vars.reserve(names.size());
  for (const auto& n : names) vars.push_back({n, 1});
  return make(std::move(vars));
}

std::optional<std::size_t> PolyRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i)
    if (variables_[i].name == name) return i;
  return std::nullopt;
}

std::size_t PolyRing::require_index(std::string_view name) const {
  auto i = index_of(name);
  if (!i) throw UnboundVariable("unknown variable '" + std::string(name) + "'");
  return *i;
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::vector<std::uint32_t> exponents, const PolyRing& ring)
    : exponents_(std::move(exponents)) {
  if (exponents_.size() != ring.size())
    throw AmbientMismatch("exponent vector length does not match ring");
  for (std::size_t i = 0; i < exponents_.size(); ++i)
    degree_ += static_cast<std::int64_t>(exponents_[i]) * ring.variable(i).degree;
}

Monomial Monomial::one(const PolyRing& ring) {
  return Monomial(std::vector<std::uint32_t>(ring.size(), 0), ring);
}

Monomial Monomial::variable(const PolyRing& ring, std::size_t index, std::uint32_t power) {
  std::vector<std::uint32_t> e(ring.size(), 0);
  e.at(index) = power;
  return Monomial(std::move(e), ring);
}

std::uint64_t Monomial::total_degree() const {
  std::uint64_t s = 0;
  for (auto e : exponents_) s += e;
  return s;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exponents_.size(); ++i) r.exponents_[i] += other.exponents_[i];
  r.degree_ += other.degree_;
  return r;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exponents_.size(); ++i)
    if (exponents_[i] > other.exponents_[i]) return false;
  return true;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exponents_.size(); ++i) r.exponents_[i] -= divisor.exponents_[i];
  r.degree_ -= divisor.degree_;
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b, const PolyRing& ring) {
  std::vector<std::uint32_t> e(a.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.exponents_[i], b.exponents_[i]);
  return Monomial(std::move(e), ring);
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw InvalidArgument("polynomial needs a ring");
}

Polynomial::Polynomial(RingPtr ring, const Rational& constant) : Polynomial(std::move(ring)) {
  if (constant != 0) terms_.emplace(Monomial::one(*ring_), constant);
}

Polynomial::Polynomial(RingPtr ring, const Rational& coefficient, Monomial monomial)
    : Polynomial(std::move(ring)) {
  if (monomial.size() != ring_->size()) throw AmbientMismatch("monomial does not belong to ring");
  if (coefficient != 0) terms_.emplace(std::move(monomial), coefficient);
}

Polynomial Polynomial::variable(RingPtr ring, std::string_view name) {
  auto i = ring->require_index(name);
  auto m = Monomial::variable(*ring, i);
  return Polynomial(std::move(ring), Rational(1), std::move(m));
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

bool Polynomial::has_integer_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.second.get_den() == 1; });
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw InvalidArgument("zero polynomial has no leading monomial");
  return terms_.begin()->first;
}

const Rational& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw InvalidArgument("zero polynomial has no leading coefficient");
  return terms_.begin()->second;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::uint32_t Polynomial::degree_in(std::size_t index) const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(index));
  return d;
}

void Polynomial::check_ring(const Polynomial& other) const {
  if (!same_ring(ring_, other.ring_)) throw AmbientMismatch("polynomials live in different rings");
}

void Polynomial::add_term(const Rational& c, const Monomial& m) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_ring(other);
  for (const auto& [m, c] : other.terms_) add_term(c, m);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_ring(other);
  for (const auto& [m, c] : other.terms_) add_term(-c, m);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_ring(b);
  Polynomial r(a.ring_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ca * cb, ma * mb);
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
  } else {
    for (auto& [m, c] : terms_) c *= scalar;
  }
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial Polynomial::times_term(const Rational& c, const Monomial& m) const {
  Polynomial r(ring_);
  if (c == 0) return r;
  for (const auto& [mm, cc] : terms_) r.terms_.emplace_hint(r.terms_.end(), mm * m, cc * c);
  return r;
}

bool Polynomial::operator==(const Polynomial& other) const {
  return same_ring(ring_, other.ring_) && terms_ == other.terms_;
}

std::string to_string(const Rational& q) { return q.get_str(); }

namespace {

std::string monomial_text(const Monomial& m, const PolyRing& ring) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    auto e = m.exponent(i);
    if (e == 0) continue;
    if (!s.empty()) s += '*';
    s += ring.variable(i).name;
    if (e > 1) s += '^' + std::to_string(e);
  }
  return s;
}

}  // namespace

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational magnitude = abs(c);
    bool negative = c < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += magnitude.get_str();
    } else if (magnitude == 1) {
      out += monomial_text(m, *ring_);
    } else {
      out += magnitude.get_str() + '*' + monomial_text(m, *ring_);
    }
  }
  return out;
}

Polynomial pow(const Polynomial& p, std::uint32_t exponent) {
  Polynomial result(p.ring(), Rational(1));
  Polynomial base = p;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

WeightedDegree weighted_degree(const Polynomial& p) {
  if (p.is_zero()) return WeightedDegree::zero();
  auto d = p.terms().begin()->first.degree();
  for (const auto& [m, c] : p.terms())
    if (m.degree() != d) return WeightedDegree::inhomogeneous();
  return WeightedDegree::of(d);
}

bool is_homogeneous(const Polynomial& p) {
  return weighted_degree(p).kind() != WeightedDegree::Kind::inhomogeneous;
}

// ---------------------------------------------------------------------------
// Substitution

Polynomial substitute(const Polynomial& p, const Bindings& bindings, const RingPtr& target) {
  for (const auto& [name, image] : bindings)
    if (!same_ring(image.ring(), target))
      throw AmbientMismatch("binding for '" + name + "' does not live in the target ring");

  const PolyRing& src = *p.ring();
  // Image of each source variable, built lazily: bound value or same-named target variable.
  std::vector<std::optional<Polynomial>> images(src.size());
  auto image_of = [&](std::size_t i) -> const Polynomial& {
    if (!images[i]) {
      const auto& name = src.variable(i).name;
      if (auto it = bindings.find(name); it != bindings.end()) {
        images[i] = it->second;
      } else if (target->index_of(name)) {
        images[i] = Polynomial::variable(target, name);
      } else {
        throw UnboundVariable("variable '" + name + "' is neither bound nor in the target ring");
      }
    }
    return *images[i];
  };

  // Cache powers per variable; substitution targets are usually reused.
  std::vector<std::vector<Polynomial>> powers(src.size());
  auto power_of = [&](std::size_t i, std::uint32_t e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.emplace_back(target, Rational(1));
    while (cache.size() <= e) cache.push_back(cache.back() * image_of(i));
    return cache[e];
  };

  Polynomial result(target);
  for (const auto& [m, c] : p.terms()) {
    Polynomial term(target, c);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m.exponent(i) > 0) term *= power_of(i, m.exponent(i));
    result += term;
  }
  return result;
}

Polynomial substitute(const Polynomial& p, const Bindings& bindings) {
  if (bindings.empty()) return p;
  const RingPtr& target = bindings.begin()->second.ring();
  return substitute(p, bindings, target);
}

Polynomial embed(const Polynomial& p, const RingPtr& target) {
  if (same_ring(p.ring(), target)) return p;
  return substitute(p, Bindings{}, target);
}

std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw InvalidArgument("division by the zero polynomial");
  if (!same_ring(f.ring(), g.ring())) throw AmbientMismatch("division across rings");
  Polynomial remainder = f;
  Polynomial quotient(f.ring());
  const Monomial& lm = g.leading_monomial();
  const Rational& lc = g.leading_coefficient();
  while (!remainder.is_zero()) {
    const Monomial& lr = remainder.leading_monomial();
    if (!lm.divides(lr)) return std::nullopt;
    Monomial m = lr / lm;
    Rational c = remainder.leading_coefficient() / lc;
    quotient.add_term(c, m);
    remainder -= g.times_term(c, m);
  }
  return quotient;
}

std::vector<Monomial> monomials_of_degree(const PolyRing& ring, std::int64_t d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  std::vector<std::uint32_t> exps(ring.size(), 0);
  auto rec = [&](auto&& self, std::size_t i, std::int64_t remaining) -> void {
    if (i == ring.size()) {
      if (remaining == 0) out.emplace_back(exps, ring);
      return;
    }
    auto deg = ring.variable(i).degree;
    for (std::int64_t e = remaining / deg; e >= 0; --e) {
      exps[i] = static_cast<std::uint32_t>(e);
      self(self, i + 1, remaining - e * deg);
    }
    exps[i] = 0;
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
 public:
  Parser(std::string_view text, RingPtr ring) : text_(text), ring_(std::move(ring)) {}

  Polynomial parse() {
    skip_space();
    if (pos_ == text_.size()) fail("empty expression");
    Polynomial p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("at position " + std::to_string(pos_) + " of \"" + std::string(text_) +
                     "\": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    for (;;) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        auto start = pos_;
        Polynomial d = unary();
        if (!d.is_constant() || d.is_zero()) {
          pos_ = start;
          fail("division is only allowed by a nonzero constant");
        }
        acc *= Rational(1) / d.leading_coefficient();
      } else {
        return acc;
      }
    }
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (accept('^')) {
      skip_space();
      auto digits = read_digits();
      if (digits.empty()) fail("expected a non-negative integer exponent");
      unsigned long e = 0;
      try {
        e = std::stoul(digits);
      } catch (const std::exception&) {
        fail("exponent out of range");
      }
      if (e > 100000) fail("exponent out of range");
      return pow(base, static_cast<std::uint32_t>(e));
    }
    return base;
  }

  std::string read_digits() {
    auto start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Polynomial atom() {
    skip_space();
    if (pos_ == text_.size()) fail("unexpected end of expression");
    char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      auto digits = read_digits();
      reject_juxtaposition();
      return Polynomial(ring_, Rational(Integer(digits)));
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      auto start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (!ring_->index_of(name)) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      reject_juxtaposition();
      return Polynomial::variable(ring_, name);
    }
    fail("unexpected '" + std::string(1, ch) + "'");
  }

  // "2t" or "t h" would otherwise be silently misread.
  void reject_juxtaposition() {
    auto save = pos_;
    skip_space();
    if (pos_ < text_.size()) {
      char ch = text_[pos_];
      if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '(')
        fail("implicit multiplication is not allowed; use '*'");
    }
    pos_ = save;
  }

  std::string_view text_;
  RingPtr ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  return Parser(text, ring).parse();
}

}  // namespace equichow
