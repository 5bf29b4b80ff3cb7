#include "equichow/serialize.hpp"

#include "equichow/error.hpp"

namespace equichow {

Json to_json(const Polynomial& p) {
  Json terms = Json::array();
  const auto& ring = *p.ring();
  for (const auto& [m, c] : p.terms()) {
    Json term = Json::array({c.get_str()});
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m.exponent(i) > 0) {
        term.push_back(ring.variable(i).name);
        term.push_back(m.exponent(i));
      }
    terms.push_back(std::move(term));
  }
  return terms;
}

Json to_json(const RingPresentation& R) {
  Json vars = Json::array();
  for (const auto& v : R.ring()->variables()) vars.push_back({{"name", v.name}, {"degree", v.degree}});
  Json rels = Json::array();
  for (const auto& r : R.relations()) rels.push_back(to_json(r));
  return Json{{"variables", std::move(vars)},
              {"coefficient_domain", to_string(R.domain())},
              {"relations", std::move(rels)},
              {"strategy", R.strategy().to_string()}};
}

Json to_json(const GradedAbelianGroup& g) {
  Json torsion = Json::array();
  for (const auto& t : g.torsion) torsion.push_back(t.get_str());
  return Json{{"free_rank", g.free_rank}, {"torsion", std::move(torsion)}, {"text", g.to_string()}};
}

namespace {

Rational parse_rational(const std::string& s, const std::string& where) {
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0) throw ParseError(where + ": invalid coefficient '" + s + "'");
  if (q.get_den() == 0) throw ParseError(where + ": zero denominator");
  q.canonicalize();
  return q;
}

}  // namespace

Polynomial polynomial_from_json(const Json& j, const RingPtr& ring) {
  if (!j.is_array()) throw ParseError("polynomial must be a list of terms");
  Polynomial p(ring);
  for (std::size_t t = 0; t < j.size(); ++t) {
    const auto& term = j[t];
    std::string where = "term " + std::to_string(t);
    if (!term.is_array() || term.empty() || term.size() % 2 == 0 || !term[0].is_string())
      throw ParseError(where + ": expected [coefficient, name, exponent, ...]");
    Rational c = parse_rational(term[0].get<std::string>(), where);
    std::vector<std::uint32_t> e(ring->size(), 0);
    for (std::size_t k = 1; k < term.size(); k += 2) {
      if (!term[k].is_string() || !term[k + 1].is_number_unsigned())
        throw ParseError(where + ": expected variable name and non-negative exponent");
      auto name = term[k].get<std::string>();
      auto idx = ring->index_of(name);
      if (!idx) throw ParseError(where + ": unknown variable '" + name + "'");
      e[*idx] += term[k + 1].get<std::uint32_t>();
    }
    p.add_term(c, Monomial(std::move(e), *ring));
  }
  return p;
}

RingPtr ring_from_json(const Json& variables) {
  if (!variables.is_array()) throw ParseError("variables: expected a list");
  std::vector<PolyRing::Variable> vars;
  for (std::size_t i = 0; i < variables.size(); ++i) {
    const auto& v = variables[i];
    std::string where = "variables[" + std::to_string(i) + "]";
    if (!v.is_object() || !v.contains("name") || !v["name"].is_string())
      throw ParseError(where + ": expected {name, degree}");
    std::int64_t degree = 1;
    if (v.contains("degree")) {
      if (!v["degree"].is_number_integer()) throw ParseError(where + ".degree: expected an integer");
      degree = v["degree"].get<std::int64_t>();
    }
    vars.push_back({v["name"].get<std::string>(), degree});
  }
  try {
    return PolyRing::make(std::move(vars));
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("variables: ") + e.what());
  }
}

RingPresentation presentation_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("presentation must be a JSON object");
  for (const char* key : {"variables", "coefficient_domain", "relations", "strategy"})
    if (!j.contains(key)) throw ParseError(std::string("presentation: missing field '") + key + "'");
  auto ring = ring_from_json(j["variables"]);
  if (!j["coefficient_domain"].is_string()) throw ParseError("coefficient_domain: expected a string");
  auto domain = parse_coefficient_domain(j["coefficient_domain"].get<std::string>());
  if (!j["relations"].is_array()) throw ParseError("relations: expected a list");
  std::vector<Polynomial> rels;
  for (std::size_t i = 0; i < j["relations"].size(); ++i) {
    try {
      rels.push_back(polynomial_from_json(j["relations"][i], ring));
    } catch (const ParseError& e) {
      throw ParseError("relations[" + std::to_string(i) + "]: " + e.what());
    }
  }
  if (!j["strategy"].is_string()) throw ParseError("strategy: expected a string");
  auto strategy = ReductionStrategy::parse(j["strategy"].get<std::string>());
  return RingPresentation(ring, domain, std::move(rels), std::move(strategy));
}

}  // namespace equichow
