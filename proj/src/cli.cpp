#include "equichow/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "equichow/characters.hpp"
#include "equichow/error.hpp"
#include "equichow/graded.hpp"
#include "equichow/moduli.hpp"
#include "equichow/point.hpp"
#include "equichow/projective.hpp"

namespace equichow::cli {

namespace {

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string field(const std::string& path, const std::string& what) { return path + ": " + what; }

std::int64_t json_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw ParseError(field(path, "expected an integer"));
  return j.get<std::int64_t>();
}

}  // namespace

QuotientScenario scenario_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("scenario must be a JSON object");
  if (!j.contains("torus_rank")) throw ParseError("torus_rank: missing");
  auto rank = json_int(j["torus_rank"], "torus_rank");
  if (rank < 1) throw InvalidArgument("torus_rank: must be positive");
  CharacterLattice lattice(static_cast<std::size_t>(rank));

  if (!j.contains("weights") || !j["weights"].is_array()) throw ParseError("weights: expected a list");
  const auto& jw = j["weights"];
  if (jw.empty()) throw InvalidArgument("weights: representation has no characters");
  std::vector<Character> chars;
  for (std::size_t i = 0; i < jw.size(); ++i) {
    std::string path = "weights[" + std::to_string(i) + "]";
    if (!jw[i].is_array()) throw ParseError(field(path, "expected a list of integers"));
    if (jw[i].size() != static_cast<std::size_t>(rank))
      throw InvalidArgument(field(path, "has " + std::to_string(jw[i].size()) +
                                            " entries, torus_rank is " + std::to_string(rank)));
    std::vector<std::int64_t> w;
    for (std::size_t k = 0; k < jw[i].size(); ++k)
      w.push_back(json_int(jw[i][k], path + "[" + std::to_string(k) + "]"));
    chars.emplace_back(std::move(w));
  }
  Representation V(lattice, chars);

  std::vector<InvariantSubspace> removed;
  if (j.contains("removed")) {
    const auto& jr = j["removed"];
    if (!jr.is_array()) throw ParseError("removed: expected a list");
    for (std::size_t i = 0; i < jr.size(); ++i) {
      std::string path = "removed[" + std::to_string(i) + "]";
      const auto& entry = jr[i];
      if (!entry.is_object()) throw ParseError(field(path, "expected an object"));
      bool has_kept = entry.contains("kept");
      bool has_quot = entry.contains("quotient_weights");
      if (has_kept == has_quot)
        throw ParseError(field(path, "expected exactly one of 'kept' or 'quotient_weights'"));
      if (has_kept) {
        if (!entry["kept"].is_array()) throw ParseError(field(path + ".kept", "expected a list"));
        std::vector<std::size_t> kept;
        for (std::size_t k = 0; k < entry["kept"].size(); ++k) {
          std::string ipath = path + ".kept[" + std::to_string(k) + "]";
          auto idx = json_int(entry["kept"][k], ipath);
          if (idx < 0 || static_cast<std::size_t>(idx) >= chars.size())
            throw InvalidArgument(field(ipath, "index " + std::to_string(idx) + " out of range for " +
                                                   std::to_string(chars.size()) + " characters"));
          kept.push_back(static_cast<std::size_t>(idx));
        }
        try {
          removed.push_back(InvariantSubspace::from_kept(std::move(kept)));
        } catch (const InvalidArgument& e) {
          throw InvalidArgument(field(path + ".kept", e.what()));
        }
      } else {
        const auto& jq = entry["quotient_weights"];
        if (!jq.is_array()) throw ParseError(field(path + ".quotient_weights", "expected a list"));
        std::vector<Character> qw;
        for (std::size_t k = 0; k < jq.size(); ++k) {
          std::string qpath = path + ".quotient_weights[" + std::to_string(k) + "]";
          if (!jq[k].is_array() || jq[k].size() != static_cast<std::size_t>(rank))
            throw InvalidArgument(field(qpath, "expected " + std::to_string(rank) + " integers"));
          std::vector<std::int64_t> w;
          for (std::size_t m = 0; m < jq[k].size(); ++m) w.push_back(json_int(jq[k][m], qpath));
          qw.emplace_back(std::move(w));
        }
        auto L = InvariantSubspace::from_quotient_weights(std::move(qw));
        try {
          L.quotient_characters(V);
        } catch (const InvalidArgument& e) {
          throw InvalidArgument(field(path + ".quotient_weights", e.what()));
        }
        removed.push_back(std::move(L));
      }
    }
  }

  std::vector<Polynomial> classes;
  if (j.contains("classes")) {
    const auto& jc = j["classes"];
    if (!jc.is_array()) throw ParseError("classes: expected a list of strings");
    for (std::size_t i = 0; i < jc.size(); ++i) {
      std::string path = "classes[" + std::to_string(i) + "]";
      if (!jc[i].is_string()) throw ParseError(field(path, "expected a string"));
      Polynomial c(lattice.ring());
      try {
        c = parse_polynomial(jc[i].get<std::string>(), lattice.ring());
      } catch (const Error& e) {
        throw ParseError(field(path, e.what()));
      }
      if (!is_homogeneous(c)) throw InvalidArgument(field(path, "class is not homogeneous"));
      if (!c.has_integer_coefficients())
        throw InvalidArgument(field(path, "class must have integer coefficients"));
      classes.push_back(std::move(c));
    }
  }
  if (removed.empty() && classes.empty())
    throw InvalidArgument("scenario: 'removed' and 'classes' are both empty");
  return QuotientScenario{std::move(V), std::move(removed), std::move(classes)};
}

QuotientScenario load_scenario(const std::string& path) {
  auto j = read_json_file(path);
  try {
    return scenario_from_json(j);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  } catch (const InvalidArgument& e) {
    throw InvalidArgument(path + ": " + e.what());
  }
}

namespace {

enum class Format { text, json };

Json group_entry(std::int64_t d, const GradedAbelianGroup& g) {
  Json e = to_json(g);
  e["degree"] = d;
  return e;
}

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

// point-ring ----------------------------------------------------------------

void cmd_point_ring(const std::string& group_text, Format format, std::ostream& out) {
  auto group = GroupSpec::parse(group_text);
  auto R = point_ring(group);
  if (format == Format::json) {
    emit_json(out, {{"command", "point-ring"},
                    {"group", group.to_string()},
                    {"text", R.to_string()},
                    {"presentation", to_json(R)}});
    return;
  }
  out << R.to_string() << '\n' << "degrees: " << R.degrees_string() << '\n';
}

// proj ----------------------------------------------------------------------

void cmd_proj(const std::string& weights_text, const std::vector<std::string>& integrands,
              Format format, std::ostream& out) {
  auto weights = parse_weights(weights_text);
  ProjectiveAction A(CharacterLattice(weights.front().rank()), weights);
  auto R = proj_ring(A);
  auto rank = module_rank(A);

  std::vector<FixedPointDatum> points;
  if (A.has_distinct_weights()) points = fixed_points(A);
  std::vector<std::pair<std::string, Polynomial>> integrals;
  for (const auto& text : integrands) {
    auto alpha = parse_polynomial(text, A.ring());
    integrals.emplace_back(text, integrate_by_localization(alpha, A));
  }

  if (format == Format::json) {
    Json jw = Json::array();
    for (const auto& w : weights) jw.push_back(w.weights());
    Json jp = Json::array();
    for (const auto& p : points)
      jp.push_back({{"index", p.index},
                    {"h", to_json(p.hyperplane_restriction)},
                    {"h_text", p.hyperplane_restriction.to_string()},
                    {"euler", to_json(p.euler)},
                    {"euler_text", p.euler.to_string()}});
    Json ji = Json::array();
    for (const auto& [text, value] : integrals)
      ji.push_back({{"integrand", text}, {"value", to_json(value)}, {"text", value.to_string()}});
    emit_json(out, {{"command", "proj"},
                    {"weights", std::move(jw)},
                    {"text", R.to_string()},
                    {"presentation", to_json(R)},
                    {"module_rank", rank},
                    {"fixed_points", std::move(jp)},
                    {"integrals", std::move(ji)}});
    return;
  }
  out << R.to_string() << '\n'
      << "degrees: " << R.degrees_string() << '\n'
      << "module rank: " << rank << '\n';
  if (points.empty()) {
    out << "fixed points: weights are not distinct\n";
  } else {
    out << "fixed points:\n";
    for (const auto& p : points)
      out << "  p" << p.index << ": h -> " << p.hyperplane_restriction.to_string()
          << ", euler = " << p.euler.to_string() << '\n';
  }
  for (const auto& [text, value] : integrals)
    out << "integral(" << text << ") = " << value.to_string() << '\n';
}

// quotient ------------------------------------------------------------------

void cmd_quotient(const std::string& path, std::int64_t max_degree, Format format,
                  std::ostream& out) {
  auto scenario = load_scenario(path);
  auto rational = quotient_presentation(scenario);
  std::optional<RingPresentation> integral;
  std::string integral_note;
  try {
    integral = integral_presentation(scenario);
  } catch (const StrategyMismatch& e) {
    integral_note = e.what();
  }

  std::vector<std::size_t> ranks;
  std::vector<GradedAbelianGroup> groups;
  for (std::int64_t d = 0; d <= max_degree; ++d) {
    ranks.push_back(rational_graded_rank(rational, d));
    if (integral) groups.push_back(graded_piece(*integral, d));
  }

  if (format == Format::json) {
    Json jr = Json::array();
    for (std::int64_t d = 0; d <= max_degree; ++d)
      jr.push_back({{"degree", d}, {"rank", ranks[static_cast<std::size_t>(d)]}});
    Json j{{"command", "quotient"},
           {"scenario", path},
           {"rational", {{"text", rational.to_string()}, {"presentation", to_json(rational)}}},
           {"rational_ranks", std::move(jr)}};
    if (integral) {
      Json jg = Json::array();
      for (std::int64_t d = 0; d <= max_degree; ++d)
        jg.push_back(group_entry(d, groups[static_cast<std::size_t>(d)]));
      j["integral"] = {{"text", integral->to_string()}, {"presentation", to_json(*integral)}};
      j["graded_pieces"] = std::move(jg);
    } else {
      j["integral"] = nullptr;
      j["integral_note"] = integral_note;
    }
    emit_json(out, j);
    return;
  }
  out << "rational: " << rational.to_string() << '\n';
  if (integral) {
    out << "integral: " << integral->to_string() << '\n';
  } else {
    out << "integral: unavailable (" << integral_note << ")\n";
  }
  for (std::int64_t d = 0; d <= max_degree; ++d) {
    out << "degree " << d << ": ";
    if (integral) out << groups[static_cast<std::size_t>(d)].to_string() << ", ";
    out << "rank over Q " << ranks[static_cast<std::size_t>(d)] << '\n';
  }
}

// moduli --------------------------------------------------------------------

Json report_json(const ModuliReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  Json graded = Json::array();
  for (const auto& [d, g] : r.graded_invariants) graded.push_back(group_entry(d, g));
  return {{"command", "moduli"},
          {"name", r.name},
          {"golden", r.golden},
          {"text", r.presentation.to_string()},
          {"presentation", to_json(r.presentation)},
          {"checks", std::move(checks)},
          {"graded_pieces", std::move(graded)}};
}

void report_text(const ModuliReport& r, std::ostream& out) {
  out << r.presentation.to_string() << '\n'
      << "degrees: " << r.presentation.degrees_string() << '\n'
      << "golden: " << r.golden << '\n'
      << "checks:\n";
  for (const auto& c : r.checks) out << "  [" << (c.passed ? "ok" : "FAILED") << "] " << c.name << ": " << c.detail << '\n';
  out << "graded pieces:\n";
  for (const auto& [d, g] : r.graded_invariants) out << "  A^" << d << " = " << g.to_string() << '\n';
}

void cmd_moduli(const std::string& which, Format format, std::ostream& out) {
  if (which == "picard") {
    auto g = picard_m11();
    const std::string golden = "Z/12";
    if (g.to_string() != golden)
      throw VerificationFailure("picard: degree-1 piece is " + g.to_string() + ", expected " + golden);
    if (format == Format::json) {
      Json j = to_json(g);
      j = {{"command", "moduli"}, {"name", "picard"}, {"golden", golden}, {"degree", 1},
           {"group", std::move(j)}, {"text", g.to_string()}};
      emit_json(out, j);
    } else {
      out << g.to_string() << '\n' << "A^1(M_{1,1}) = Pic(M_{1,1}) via Smith normal form\n";
    }
    return;
  }
  auto report = which == "m11" ? m11_chow() : m11bar_chow();
  if (format == Format::json) {
    emit_json(out, report_json(report));
  } else {
    report_text(report, out);
  }
}

// reduce / graded -------------------------------------------------------------

RingPresentation load_presentation(const std::string& path) {
  auto j = read_json_file(path);
  try {
    if (j.is_object() && j.contains("presentation")) return presentation_from_json(j["presentation"]);
    return presentation_from_json(j);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void cmd_reduce(const std::string& path, const std::vector<std::string>& polys, Format format,
                std::ostream& out) {
  auto R = load_presentation(path);
  Json results = Json::array();
  std::ostringstream text;
  for (const auto& s : polys) {
    auto nf = normal_form(parse_polynomial(s, R.ring()), R);
    results.push_back({{"input", s}, {"normal_form", to_json(nf)}, {"text", nf.to_string()}});
    text << nf.to_string() << '\n';
  }
  if (format == Format::json) {
    emit_json(out, {{"command", "reduce"}, {"presentation", R.to_string()}, {"results", std::move(results)}});
  } else {
    out << text.str();
  }
}

void cmd_graded(const std::string& path, std::int64_t lo, std::int64_t hi, Format format,
                std::ostream& out) {
  auto R = load_presentation(path);
  Json pieces = Json::array();
  std::ostringstream text;
  for (std::int64_t d = lo; d <= hi; ++d) {
    if (R.domain() == CoefficientDomain::integers) {
      auto g = graded_piece(R, d);
      pieces.push_back(group_entry(d, g));
      text << "A^" << d << " = " << g.to_string() << '\n';
    } else {
      auto rank = rational_graded_rank(R, d);
      pieces.push_back({{"degree", d}, {"rank", rank}});
      text << "A^" << d << " = " << (rank == 0 ? "0" : rank == 1 ? "Q" : "Q^" + std::to_string(rank)) << '\n';
    }
  }
  if (format == Format::json) {
    emit_json(out, {{"command", "graded"}, {"presentation", R.to_string()}, {"graded_pieces", std::move(pieces)}});
  } else {
    out << text.str();
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equivariant Chow ring computations", "equichow"};
  app.require_subcommand(1);
  std::string format_text = "text";
  app.add_option("--format", format_text, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::string group;
  auto* point = app.add_subcommand("point-ring", "Chow ring of a point for Gm, T<n>, GL<n>, SL<n>");
  point->add_option("--group", group, "Group, e.g. Gm, T2, GL3, SL3")->required();

  std::string weights;
  std::vector<std::string> integrands;
  auto* proj = app.add_subcommand("proj", "Equivariant Chow ring of P^n with a diagonal torus action");
  proj->add_option("--weights", weights, "Weights, e.g. 0,1,2 or \"1,0;0,1\"")
      ->required()
      ->allow_extra_args(false);
  proj->add_option("--integrate", integrands, "Class to integrate by localization (repeatable)")
      ->allow_extra_args(false);

  std::string scenario;
  std::int64_t max_degree = 4;
  auto* quot = app.add_subcommand("quotient", "Presentation of an open subset of a representation");
  quot->add_option("--scenario", scenario, "Scenario JSON file")->required()->check(CLI::ExistingFile);
  quot->add_option("--max-degree", max_degree, "Largest degree to tabulate")
      ->check(CLI::Range(0, 64))
      ->capture_default_str();

  std::string which;
  auto* moduli = app.add_subcommand("moduli", "Chow rings of moduli of elliptic curves");
  moduli->add_option("which", which, "m11, m11bar or picard")
      ->required()
      ->check(CLI::IsMember({"m11", "m11bar", "picard"}));

  std::string presentation;
  std::vector<std::string> polys;
  auto* reduce = app.add_subcommand("reduce", "Normal forms in a presented ring");
  reduce->add_option("--presentation", presentation, "Presentation JSON (or command output)")
      ->required()
      ->check(CLI::ExistingFile);
  reduce->add_option("--poly", polys, "Polynomial to reduce (repeatable)")->required()->allow_extra_args(false);

  std::string graded_presentation;
  std::optional<std::int64_t> degree;
  std::int64_t graded_max = 4;
  auto* graded = app.add_subcommand("graded", "Graded pieces of a presented ring");
  graded->add_option("--presentation", graded_presentation, "Presentation JSON (or command output)")
      ->required()
      ->check(CLI::ExistingFile);
  graded->add_option("--degree", degree, "Single degree")->check(CLI::Range(0, 64));
  graded->add_option("--max-degree", graded_max, "Tabulate degrees 0..d")
      ->check(CLI::Range(0, 64))
      ->capture_default_str();

  for (auto* sub : {point, proj, quot, moduli, reduce, graded}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "equichow: " << e.what() << '\n';
    return kUsageError;
  }

  Format format = format_text == "json" ? Format::json : Format::text;
  std::ostringstream buffer;
  try {
    if (*point) {
      cmd_point_ring(group, format, buffer);
    } else if (*proj) {
      cmd_proj(weights, integrands, format, buffer);
    } else if (*quot) {
      cmd_quotient(scenario, max_degree, format, buffer);
    } else if (*moduli) {
      cmd_moduli(which, format, buffer);
    } else if (*reduce) {
      cmd_reduce(presentation, polys, format, buffer);
    } else if (*graded) {
      std::int64_t lo = degree ? *degree : 0;
      std::int64_t hi = degree ? *degree : graded_max;
      cmd_graded(graded_presentation, lo, hi, format, buffer);
    }
  } catch (const VerificationFailure& e) {
    err << "equichow: verification failed: " << e.what() << '\n';
    return kVerificationFailure;
  } catch (const Error& e) {
    err << "equichow: " << e.what() << '\n';
    return kUsageError;
  }
  out << buffer.str();
  return kSuccess;
}

}  // namespace equichow::cli
