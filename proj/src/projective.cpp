#include "equichow/projective.hpp"

#include <algorithm>

#include "equichow/error.hpp"

namespace equichow {

namespace {

RingPtr projective_ring(const CharacterLattice& lattice) {
  auto names = lattice.variable_names();
  names.push_back("h");
  return PolyRing::make(names);
}

void require_distinct(const ProjectiveAction& A) {
  if (!A.has_distinct_weights())
    throw RepeatedWeights("fixed-point operations need pairwise distinct weights");
}

void require_index(std::size_t r, const ProjectiveAction& A) {
  if (r > A.dimension())
    throw InvalidArgument("fixed point index " + std::to_string(r) + " out of range for P^" +
                          std::to_string(A.dimension()));
}

}  // namespace

ProjectiveAction::ProjectiveAction(CharacterLattice lattice, std::vector<Character> weights)
    : lattice_(std::move(lattice)), weights_(std::move(weights)), ring_(projective_ring(lattice_)) {
  if (weights_.empty()) throw InvalidArgument("projective action needs at least one weight");
  for (const auto& w : weights_)
    if (w.rank() != lattice_.rank())
      throw InvalidArgument("weight " + w.to_string() + " does not match lattice rank " +
                            std::to_string(lattice_.rank()));
}

ProjectiveAction ProjectiveAction::rank_one(const std::vector<std::int64_t>& weights) {
  std::vector<Character> chars;
  for (auto a : weights) chars.emplace_back(std::vector<std::int64_t>{a});
  return ProjectiveAction(CharacterLattice(1), std::move(chars));
}

bool ProjectiveAction::has_distinct_weights() const {
  return Representation(lattice_, weights_).has_distinct_characters();
}

RingPresentation proj_ring(const ProjectiveAction& A) {
  Polynomial relation(A.ring(), Rational(1));
  const Polynomial h = A.hyperplane();
  for (const auto& chi : A.weights())
    relation *= h + embed(char_linear_form(chi, A.lattice()), A.ring());
  return RingPresentation(A.ring(), CoefficientDomain::integers, {relation},
                          ReductionStrategy::monic_in("h"));
}

std::size_t module_rank(const ProjectiveAction& A) {
  const auto R = proj_ring(A);
  const std::size_t n = A.dimension();
  const std::size_t h = A.ring()->require_index("h");
  const Polynomial hyper = A.hyperplane();
  std::vector<Polynomial> basis;
  Polynomial power(A.ring(), Rational(1));
  for (std::size_t k = 0; k <= 2 * n + 1; ++k) {
    Polynomial nf = normal_form(power, R);
    if (nf.degree_in(h) > n)
      throw VerificationFailure("h^" + std::to_string(k) + " does not reduce below h-degree " +
                                std::to_string(n + 1));
    if (k <= n) {
      if (nf != power) throw VerificationFailure("h^" + std::to_string(k) + " is not reduced");
      if (std::find(basis.begin(), basis.end(), nf) != basis.end())
        throw VerificationFailure("module basis elements coincide");
      basis.push_back(nf);
    }
    power *= hyper;
  }
  return basis.size();
}

std::vector<FixedPointDatum> fixed_points(const ProjectiveAction& A) {
  require_distinct(A);
  std::vector<FixedPointDatum> out;
  for (std::size_t r = 0; r <= A.dimension(); ++r)
    out.push_back({r, -char_linear_form(A.weights()[r], A.lattice()), euler_class(r, A)});
  return out;
}

Polynomial restrict_to_fixed(const Polynomial& alpha, std::size_t r, const ProjectiveAction& A) {
  require_index(r, A);
  require_distinct(A);
  if (!same_ring(alpha.ring(), A.ring()))
    throw AmbientMismatch("class does not live in the equivariant ring of P^n");
  Bindings b;
  b.emplace("h", -char_linear_form(A.weights()[r], A.lattice()));
  return substitute(alpha, b, A.lattice().ring());
}

Polynomial pushforward_from_fixed(const Polynomial& alpha, std::size_t r,
                                  const ProjectiveAction& A) {
  require_index(r, A);
  require_distinct(A);
  if (!same_ring(alpha.ring(), A.lattice().ring()))
    throw AmbientMismatch("pushforward input must live in the character ring");
  Polynomial image = embed(alpha, A.ring());
  const Polynomial h = A.hyperplane();
  for (std::size_t s = 0; s <= A.dimension(); ++s)
    if (s != r) image *= h + embed(char_linear_form(A.weights()[s], A.lattice()), A.ring());
  return normal_form(image, proj_ring(A));
}

Polynomial euler_class(std::size_t r, const ProjectiveAction& A) {
  require_index(r, A);
  require_distinct(A);
  Polynomial e(A.lattice().ring(), Rational(1));
  for (std::size_t s = 0; s <= A.dimension(); ++s)
    if (s != r) e *= char_linear_form(A.weights()[s] - A.weights()[r], A.lattice());
  return e;
}

Polynomial chern_line_bundle(std::int64_t m, const Character& chi, const ProjectiveAction& A) {
  return A.hyperplane() * Rational(static_cast<long>(m)) +
         embed(char_linear_form(chi, A.lattice()), A.ring());
}

// ---------------------------------------------------------------------------
// LocalizedElement

LocalizedElement::LocalizedElement(Polynomial numerator) : numerator_(std::move(numerator)) {}

LocalizedElement::LocalizedElement(Polynomial numerator, const std::vector<Polynomial>& forms)
    : numerator_(std::move(numerator)) {
  for (const auto& f : forms) {
    if (!same_ring(f.ring(), numerator_.ring()))
      throw AmbientMismatch("denominator form lives in a different ring");
    if (weighted_degree(f) != WeightedDegree::of(1))
      throw InvalidArgument("denominator factor must be a nonzero linear form: " + f.to_string());
    // f = scale * primitive, with primitive integral, content 1, positive lead.
    Integer den_lcm = 1;
    for (const auto& [m, c] : f.terms()) den_lcm = lcm(den_lcm, Integer(c.get_den()));
    Integer content = 0;
    for (const auto& [m, c] : f.terms()) content = gcd(content, Integer(c * den_lcm));
    Rational scale(content, den_lcm);
    scale.canonicalize();
    if (f.leading_coefficient() < 0) scale = -scale;
    Polynomial primitive = f * (Rational(1) / scale);
    numerator_ *= Rational(1) / scale;
    multiply_denominator(primitive, 1);
  }
  cancel();
}

void LocalizedElement::multiply_denominator(const Polynomial& primitive, unsigned mult) {
  for (auto& [f, m] : denominator_)
    if (f == primitive) {
      m += mult;
      return;
    }
  denominator_.emplace_back(primitive, mult);
}

void LocalizedElement::cancel() {
  if (numerator_.is_zero()) {
    denominator_.clear();
    return;
  }
  for (auto& [f, m] : denominator_) {
    while (m > 0) {
      auto q = divide_exact(numerator_, f);
      if (!q) break;
      numerator_ = std::move(*q);
      --m;
    }
  }
  std::erase_if(denominator_, [](const auto& fm) { return fm.second == 0; });
}

LocalizedElement& LocalizedElement::operator+=(const LocalizedElement& other) {
  if (!same_ring(numerator_.ring(), other.numerator_.ring()))
    throw AmbientMismatch("localized elements live in different rings");
  auto multiplicity = [](const auto& denom, const Polynomial& f) -> unsigned {
    for (const auto& [g, m] : denom)
      if (g == f) return m;
    return 0;
  };
  // Common denominator: factor-wise maximum multiplicity.
  std::vector<std::pair<Polynomial, unsigned>> common = denominator_;
  for (const auto& [f, m] : other.denominator_) {
    auto it = std::find_if(common.begin(), common.end(), [&](const auto& x) { return x.first == f; });
    if (it == common.end()) {
      common.emplace_back(f, m);
    } else {
      it->second = std::max(it->second, m);
    }
  }
  Polynomial left = numerator_;
  Polynomial right = other.numerator_;
  for (const auto& [f, m] : common) {
    left *= pow(f, m - multiplicity(denominator_, f));
    right *= pow(f, m - multiplicity(other.denominator_, f));
  }
  numerator_ = left + right;
  denominator_ = std::move(common);
  cancel();
  return *this;
}

LocalizedElement& LocalizedElement::operator*=(const LocalizedElement& other) {
  numerator_ *= other.numerator_;
  for (const auto& [f, m] : other.denominator_) multiply_denominator(f, m);
  cancel();
  return *this;
}

std::optional<Polynomial> LocalizedElement::to_polynomial() const {
  if (!denominator_.empty()) return std::nullopt;
  return numerator_;
}

std::string LocalizedElement::to_string() const {
  if (denominator_.empty()) return numerator_.to_string();
  std::string den;
  for (const auto& [f, m] : denominator_) {
    if (!den.empty()) den += '*';
    den += "(" + f.to_string() + ")";
    if (m > 1) den += "^" + std::to_string(m);
  }
  return "(" + numerator_.to_string() + ")/" + den;
}

Polynomial integrate_by_localization(const Polynomial& alpha, const ProjectiveAction& A) {
  require_distinct(A);
  auto deg = weighted_degree(alpha);
  if (deg.kind() == WeightedDegree::Kind::inhomogeneous)
    throw InvalidArgument("localization integrand must be homogeneous: " + alpha.to_string());
  const auto& lattice = A.lattice();
  LocalizedElement sum(Polynomial(lattice.ring()));
  for (std::size_t r = 0; r <= A.dimension(); ++r) {
    std::vector<Polynomial> forms;
    for (std::size_t s = 0; s <= A.dimension(); ++s)
      if (s != r) forms.push_back(char_linear_form(A.weights()[s] - A.weights()[r], lattice));
    sum += LocalizedElement(restrict_to_fixed(alpha, r, A), forms);
  }
  auto value = sum.to_polynomial();
  if (!value)
    throw VerificationFailure("localization sum does not clear denominators: " + sum.to_string());
  if (!value->is_zero() &&
      weighted_degree(*value) !=
          WeightedDegree::of(deg.value() - static_cast<std::int64_t>(A.dimension())))
    throw VerificationFailure("localization result has the wrong degree: " + value->to_string());
  return *value;
}

}  // namespace equichow
