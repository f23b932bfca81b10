#pragma once

#include "bialg/free_as.hpp"
#include "bialg/free_trees.hpp"
#include "bialg/homology.hpp"
#include "bialg/idempotents.hpp"
#include "bialg/json_io.hpp"
#include "bialg/lie.hpp"
#include "bialg/relations.hpp"
#include "bialg/series.hpp"
#include "bialg/structure.hpp"
#include "bialg/tables.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <string>
#include <vector>

// Named bundles of checks; each returns a JSON object with a "holds" field.
// Reports carry no timings so that repeated runs are byte-identical.
namespace bialg {

inline ModelPtr make_model(const std::string& name, int alphabet) {
  if (name == "as") return std::make_shared<AsModel>(alphabet);
  if (name == "nil") return std::make_shared<NilModel>(alphabet);
  if (name == "zinb") return std::make_shared<ZinbModel>(alphabet);
  if (name == "mag") return std::make_shared<MagModel>(alphabet);
  if (name == "dup") return std::make_shared<DupModel>(alphabet);
  if (name == "lie") return std::make_shared<LieModel>(alphabet);
  throw std::invalid_argument("unknown model '" + name + "'");
}

inline std::vector<std::string> model_names() { return {"as", "dup", "lie", "mag", "nil", "zinb"}; }

namespace suite {

inline Json catalan_dimensions() {
  DupModel dup(1);
  auto catalan = gen_series("Dup", 6);
  Json dims = Json::array();
  bool holds = true;
  for (int n = 1; n <= 6; ++n) {
    auto d = dup.basis(n).size();
    dims.push_back(d);
    holds = holds && Rational(d) == catalan[n];
  }
  return {{"holds", holds}, {"dims", dims}};
}

struct RelationCase {
  std::string model, coproduct, product, relation;
  int alphabet, max_degree;
};

inline Json relations() {
  const std::vector<RelationCase> cases = {
      {"as", "deconcat", "concat", "nui", 2, 6},
      {"dup", "delta", "left", "nui", 2, 6},
      {"dup", "delta", "right", "nui", 2, 6},
      {"mag", "dual", "mul", "magmatic", 2, 6},
      {"mag", "livernet", "mul", "Livernet", 2, 5},
      {"dup", "delta_left", "left", "biduplicial-left-left", 2, 5},
      {"dup", "delta_left", "right", "biduplicial-left-right", 2, 5},
      {"dup", "delta_right", "left", "biduplicial-right-left", 2, 5},
      {"dup", "delta_right", "right", "biduplicial-right-right", 2, 5},
      {"zinb", "deconcat", "left", "semi-Hopf-left", 2, 5},
  };
  const auto& lib = RelationLibrary::builtin();
  Json checks = Json::array();
  bool holds = true;
  for (const auto& c : cases) {
    auto model = make_model(c.model, c.alphabet);
    auto report = check_relation(*model, c.coproduct, c.product, lib.at(c.relation).expr, c.max_degree);
    Json j = to_json(report);
    j["model"] = c.model;
    j["coproduct"] = c.coproduct;
    j["product"] = c.product;
    j["relation"] = c.relation;
    j["alphabet"] = c.alphabet;
    j["maxDegree"] = c.max_degree;
    holds = holds && report.holds;
    checks.push_back(std::move(j));
  }
  MagModel mag(2);
  auto nap = check_law(mag, "livernet", CoalgebraLaw::Nap, 5);
  Json j = to_json(nap);
  j["model"] = "mag";
  j["coproduct"] = "livernet";
  j["law"] = "nap";
  j["alphabet"] = 2;
  j["maxDegree"] = 5;
  holds = holds && nap.holds;
  checks.push_back(std::move(j));
  return {{"holds", holds}, {"checks", checks}};
}

inline Json idempotents() {
  struct Case {
    std::string type;
    int alphabet, max_degree;
  };
  const std::vector<Case> cases = {{"dup", 1, 6}, {"as", 2, 6}, {"mag", 1, 6}, {"classical", 2, 5}};
  Json out = Json::array();
  bool holds = true;
  for (const auto& c : cases) {
    auto type = make_type(c.type, c.alphabet);
    auto e = versal_idempotent(type, c.max_degree);
    bool idempotent = e.compose(e) == e;
    Json ranks = Json::array(), prims = Json::array();
    bool ranks_match = true;
    for (int n = 1; n <= c.max_degree; ++n) {
      auto r = e.rank(n);
      auto p = primitive_part(type, n).size();
      ranks.push_back(r);
      prims.push_back(p);
      ranks_match = ranks_match && r == p;
    }
    Json j{{"type", c.type}, {"alphabet", c.alphabet}, {"maxDegree", c.max_degree}, {"idempotent", idempotent},
           {"ranks", ranks}, {"primDims", prims}, {"ranksMatchPrim", ranks_match}};
    bool oracle = true;
    if (c.type == "dup") {
      auto catalan = catalan_series(c.max_degree);
      for (int n = 1; n <= c.max_degree; ++n) oracle = oracle && Rational(prims[static_cast<std::size_t>(n - 1)].get<std::size_t>()) == catalan[n];
      j["primMatchesCatalan"] = oracle;
    } else if (c.type == "classical") {
      Json lie_dims = Json::array();
      for (int n = 1; n <= c.max_degree; ++n) {
        auto d = lie_subspace(c.alphabet, n).size();
        lie_dims.push_back(d);
        oracle = oracle && d == prims[static_cast<std::size_t>(n - 1)].get<std::size_t>();
      }
      j["bracketSpanDims"] = lie_dims;
      j["primMatchesBracketSpan"] = oracle;
    }
    j["holds"] = idempotent && ranks_match && oracle;
    holds = holds && idempotent && ranks_match && oracle;
    out.push_back(std::move(j));
  }
  return {{"holds", holds}, {"types", out}};
}

inline Json eulerian() {
  const int N = 5;
  auto type = make_type("classical", 2);
  ConvolutionContext ctx(type.model, type.product, type.coproduct, N);
  auto family = eulerian_family(ctx);
  bool versal_equals_e1 = versal_idempotent(type, N) == family[0];
  bool orthogonal = true;
  GradedEndo sum = ctx.zero();
  for (std::size_t i = 0; i < family.size(); ++i) {
    sum = sum + family[i];
    for (std::size_t j = 0; j < family.size(); ++j) {
      auto prod = family[i].compose(family[j]);
      orthogonal = orthogonal && (i == j ? prod == family[i] : prod == ctx.zero());
    }
  }
  bool sums_to_identity = sum == ctx.identity();
  auto dyn = dynkin(2, N);
  bool same_image = true;
  for (int n = 1; n <= N; ++n) {
    const auto& basis = family[0].basis(n);
    same_image = same_image && same_span(basis, columns(basis, dyn.matrix(n)), columns(basis, family[0].matrix(n)));
  }
  bool holds = versal_equals_e1 && orthogonal && sums_to_identity && same_image;
  return {{"holds", holds},
          {"alphabet", 2},
          {"maxDegree", N},
          {"versalEqualsE1", versal_equals_e1},
          {"orthogonal", orthogonal},
          {"sumIsIdentity", sums_to_identity},
          {"dynkinImageEqualsE1Image", same_image}};
}

inline Json pbw_table_json(const PbwTableReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json comps = Json::array();
    for (const auto& c : row.components) comps.push_back(to_json(c));
    rows.push_back({{"row", row.label}, {"holds", row.holds}, {"reassembles", row.reassembles}, {"components", comps}});
  }
  return {{"type", r.type}, {"holds", r.holds}, {"rows", rows}};
}

inline Json pbw_tables() {
  auto dup = duplicial_pbw_table();
  auto classical = classical_pbw_table();
  return {{"holds", dup.holds && classical.holds}, {"duplicial", pbw_table_json(dup)}, {"classical", pbw_table_json(classical)}};
}

inline Json lie() {
  auto internal = check_lie_internal(2, 4);
  LieModel model(2);
  auto lily = check_relation(model, "cobracket", "bracket", RelationLibrary::builtin().at("Lily").expr, 4);
  return {{"holds", internal.holds && lily.holds}, {"alphabet", 2}, {"maxDegree", 4},
          {"cobracketPreservesLie", to_json(internal)}, {"lily", to_json(lily)}};
}

inline Json series() {
  const int N = 12;
  Json checks = Json::array();
  bool holds = true;
  auto add = [&](const std::string& kind, const std::string& names, const SeriesIdentityReport& r, bool expect) {
    Json j = to_json(r);
    j["check"] = kind;
    j["names"] = names;
    j["expected"] = expect;
    holds = holds && r.holds == expect;
    checks.push_back(std::move(j));
  };
  add("triple", "Com,As,Lie", check_triple_identity("Com", "As", "Lie", N), true);
  add("triple", "As,Dup,Mag", check_triple_identity("As", "Dup", "Mag", N), true);
  add("koszul", "Dup,Dup!", check_koszul_dual("Dup", "Dup!", N), true);
  add("koszul", "Mag,Nil", check_koszul_dual("Mag", "Nil", N), true);
  // negative control: exp(e^t - 1) - 1 and t/(1-t) first differ at t^3
  auto control = check_triple_identity("Com", "As", "Com", N);
  add("triple", "Com,As,Com", control, false);
  bool control_at_3 = control.first_mismatch == 3;
  holds = holds && control_at_3;

  auto sab = gen_series("Sabinin", 5);
  Json sab_dims = Json::array();
  Rational fact = 1;
  const std::vector<int> expected = {1, 1, 8, 78, 1104};
  bool sab_ok = true;
  for (int n = 1; n <= 5; ++n) {
    fact *= n;
    Rational d = sab[n] * fact;
    sab_dims.push_back(to_string(d));
    sab_ok = sab_ok && d == expected[static_cast<std::size_t>(n - 1)];
  }
  holds = holds && sab_ok;
  return {{"holds", holds}, {"order", N}, {"identities", checks}, {"negativeControlFailsAt3", control_at_3},
          {"sabininDims", sab_dims}, {"sabininMatches", sab_ok}};
}

inline Json koszulity() {
  Json degrees = Json::array();
  bool holds = true;
  for (int n = 1; n <= 5; ++n) {
    auto r = total_homology(n);
    std::vector<std::size_t> expected(static_cast<std::size_t>(n), 0);
    if (n == 1) expected[0] = 1;
    bool ok = r.checks.all() && r.homology_dims == expected;
    holds = holds && ok;
    Json j = to_json(r);
    j["holds"] = ok;
    degrees.push_back(std::move(j));
  }
  return {{"holds", holds}, {"degrees", degrees}};
}

inline Json h2() {
  const std::vector<std::pair<std::string, std::string>> expected = {
      {"as", "iso"}, {"mag", "iso"}, {"bidup", "iso"}, {"dup", "epi-with-splitting"}};
  Json out = Json::array();
  bool holds = true;
  for (const auto& [name, verdict] : expected) {
    auto r = check_h2(make_type(name, default_alphabet(name)), 6);
    Json j = to_json(r);
    j["expected"] = verdict;
    holds = holds && r.verdict == verdict;
    out.push_back(std::move(j));
  }
  return {{"holds", holds}, {"types", out}};
}

struct Bundle {
  std::string name;
  std::function<Json()> run;
};

inline const std::vector<Bundle>& bundles() {
  static const std::vector<Bundle> all = {
      {"catalan-dimensions", catalan_dimensions},
      {"relations", relations},
      {"idempotents", idempotents},
      {"eulerian", eulerian},
      {"pbw-tables", pbw_tables},
      {"lie", lie},
      {"series", series},
      {"koszulity", koszulity},
      {"h2", h2},
  };
  return all;
}

// The table bundle: PBW expansions plus the series identities.
inline std::vector<std::string> table_bundles() { return {"pbw-tables", "series"}; }

inline Json run(const std::vector<std::string>& selected) {
  Json report = Json::object();
  Json results = Json::object();
  bool holds = true;
  for (const auto& name : selected) {
    auto it = std::find_if(bundles().begin(), bundles().end(), [&](const Bundle& b) { return b.name == name; });
    if (it == bundles().end()) throw std::invalid_argument("unknown suite bundle '" + name + "'");
    Json r = it->run();
    holds = holds && r.at("holds").get<bool>();
    results[name] = std::move(r);
  }
  report["bundles"] = std::move(results);
  report["holds"] = holds;
  return report;
}

inline Json run_all() {
  std::vector<std::string> names;
  for (const auto& b : bundles()) names.push_back(b.name);
  return run(names);
}

}  // namespace suite
}  // namespace bialg
