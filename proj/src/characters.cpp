#include "equichow/characters.hpp"

#include <algorithm>
#include <charconv>

#include "equichow/error.hpp"

namespace equichow {

CharacterLattice::CharacterLattice(std::size_t rank) {
  if (rank == 0) throw InvalidArgument("character lattice rank must be positive");
  if (rank == 1) {
    names_.push_back("t");
  } else {
    for (std::size_t i = 1; i <= rank; ++i) names_.push_back("t" + std::to_string(i));
  }
  ring_ = PolyRing::make(names_);
}

bool Character::is_zero() const {
  return std::all_of(weights_.begin(), weights_.end(), [](auto w) { return w == 0; });
}

namespace {

void check_rank(const Character& a, const Character& b) {
  if (a.rank() != b.rank()) throw AmbientMismatch("characters of different lattice ranks");
}

}  // namespace

Character Character::operator+(const Character& other) const {
  check_rank(*this, other);
  Character r = *this;
  for (std::size_t i = 0; i < weights_.size(); ++i) r.weights_[i] += other.weights_[i];
  return r;
}

Character Character::operator-(const Character& other) const { return *this + (-other); }

Character Character::operator-() const { return *this * -1; }

Character Character::operator*(std::int64_t k) const {
  Character r = *this;
  for (auto& w : r.weights_) w *= k;
  return r;
}

std::string Character::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(weights_[i]);
  }
  return s + ")";
}

Representation::Representation(CharacterLattice lattice, std::vector<Character> characters)
    : lattice_(std::move(lattice)), characters_(std::move(characters)) {
  for (const auto& c : characters_)
    if (c.rank() != lattice_.rank())
      throw AmbientMismatch("character " + c.to_string() + " does not match lattice rank " +
                            std::to_string(lattice_.rank()));
}

bool Representation::has_distinct_characters() const {
  auto sorted = characters_;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

bool Representation::same_multiset(const Representation& other) const {
  if (!(lattice_ == other.lattice_)) return false;
  auto a = characters_;
  auto b = other.characters_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

std::string Representation::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < characters_.size(); ++i) {
    if (i) s += ", ";
    s += characters_[i].to_string();
  }
  return s + "}";
}

Polynomial char_linear_form(const Character& chi, const CharacterLattice& lattice) {
  if (chi.rank() != lattice.rank())
    throw AmbientMismatch("character " + chi.to_string() + " does not match lattice rank");
  Polynomial p(lattice.ring());
  for (std::size_t i = 0; i < chi.rank(); ++i)
    p.add_term(Rational(static_cast<long>(chi[i])), Monomial::variable(*lattice.ring(), i));
  return p;
}

Polynomial total_chern(const Representation& V) {
  const auto& ring = V.lattice().ring();
  Polynomial c(ring, Rational(1));
  for (const auto& chi : V.characters())
    c *= Polynomial(ring, Rational(1)) + char_linear_form(chi, V.lattice());
  return c;
}

Polynomial chern_class(const Representation& V, std::size_t k) {
  Polynomial out(V.lattice().ring());
  const auto total = total_chern(V);
  for (const auto& [m, c] : total.terms())
    if (m.degree() == static_cast<std::int64_t>(k)) out.add_term(c, m);
  return out;
}

namespace {

void check_lattice(const Representation& V, const Representation& W) {
  if (!(V.lattice() == W.lattice())) throw AmbientMismatch("representations over different lattices");
}

}  // namespace

Representation dual(const Representation& V) {
  std::vector<Character> out;
  for (const auto& c : V.characters()) out.push_back(-c);
  return Representation(V.lattice(), std::move(out));
}

Representation direct_sum(const Representation& V, const Representation& W) {
  check_lattice(V, W);
  auto out = V.characters();
  out.insert(out.end(), W.characters().begin(), W.characters().end());
  return Representation(V.lattice(), std::move(out));
}

Representation twist(const Representation& V, const Character& chi) {
  if (chi.rank() != V.lattice().rank()) throw AmbientMismatch("twist character has the wrong rank");
  std::vector<Character> out;
  for (const auto& c : V.characters()) out.push_back(c + chi);
  return Representation(V.lattice(), std::move(out));
}

Representation normal_rep_at_fixed_point(const Representation& V, std::size_t r) {
  if (r >= V.dimension()) throw InvalidArgument("fixed point index out of range");
  if (!V.has_distinct_characters())
    throw RepeatedWeights("fixed points need pairwise distinct characters: " + V.to_string());
  std::vector<Character> out;
  for (std::size_t s = 0; s < V.dimension(); ++s)
    if (s != r) out.push_back(V.characters()[s] - V.characters()[r]);
  return Representation(V.lattice(), std::move(out));
}

Representation normal_rep_at_fixed_point_absolute(const Representation& V, std::size_t r) {
  if (r >= V.dimension()) throw InvalidArgument("fixed point index out of range");
  if (!V.has_distinct_characters())
    throw RepeatedWeights("fixed points need pairwise distinct characters: " + V.to_string());
  std::vector<Character> out;
  for (std::size_t s = 0; s < V.dimension(); ++s)
    if (s != r) out.push_back(V.characters()[s]);
  return Representation(V.lattice(), std::move(out));
}

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError("invalid weight '" + std::string(s) + "'");
  return v;
}

}  // namespace

std::vector<Character> parse_weights(std::string_view text, std::size_t rank) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty weight list");
  std::vector<Character> out;
  if (text.find(';') == std::string_view::npos && (rank == 0 || rank == 1)) {
    for (auto entry : split(text, ',')) out.emplace_back(std::vector<std::int64_t>{parse_int(entry)});
    return out;
  }
  for (auto group : split(text, ';')) {
    std::vector<std::int64_t> w;
    for (auto entry : split(group, ',')) w.push_back(parse_int(entry));
    if (rank == 0) rank = w.size();
    if (w.size() != rank)
      throw ParseError("character '" + std::string(trim(group)) + "' has " + std::to_string(w.size()) +
                       " entries, expected " + std::to_string(rank));
    out.emplace_back(std::move(w));
  }
  return out;
}

}  // namespace equichow
