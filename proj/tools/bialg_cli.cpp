#include "bialg/bialg.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

using namespace bialg;

namespace {

// A usage problem found after argument parsing; exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Output {
  Json json;
  bool holds = true;
  std::string text;  // empty: fall back to JSON
  std::string csv;   // empty: csv unsupported for this command
};

std::string lines(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) out += s + "\n";
  return out;
}

template <class F>
auto usage_on_invalid(F&& f) {
  try {
    return f();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

int degree_bound(std::optional<int> d, int fallback) {
  int v = d.value_or(fallback);
  if (v < 1) throw UsageError("degree bounds must be at least 1");
  return v;
}

Tree parse_tree(const std::string& text) {
  return usage_on_invalid([&] { return Tree::parse(text); });
}

BialgebraType type_or_usage(const std::string& name, std::optional<int> alphabet) {
  const auto names = type_names();
  if (std::find(names.begin(), names.end(), name) == names.end())
    throw UsageError("unknown bialgebra type '" + name + "' (expected one of as, bidup, classical, dup, mag)");
  return usage_on_invalid([&] { return make_type(name, alphabet.value_or(default_alphabet(name))); });
}

ModelPtr model_or_usage(const std::string& name, int alphabet) {
  const auto names = model_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) throw UsageError("unknown model '" + name + "'");
  return usage_on_invalid([&] { return make_model(name, alphabet); });
}

LinComb element_or_usage(const BialgebraModel& m, const std::string& text) {
  try {
    return parse_element(m, text);
  } catch (const std::invalid_argument& e) {
    throw UsageError("bad element '" + text + "': " + e.what());
  }
}

Output trees_enumerate(int leaves) {
  if (leaves < 1) throw UsageError("--leaves must be at least 1");
  std::vector<std::string> out;
  for (const auto& t : enumerate_trees(leaves)) out.push_back(t.str());
  return {out, true, lines(out), "tree\n" + lines(out)};
}

Output trees_graft(const std::string& kind, const std::string& l, const std::string& r) {
  Tree a = parse_tree(l), b = parse_tree(r);
  Tree t = kind == "over" ? over(a, b) : kind == "under" ? under(a, b) : vee(a, b);
  return {{{"kind", kind}, {"left", a.str()}, {"right", b.str()}, {"result", t.str()}}, true, t.str() + "\n", ""};
}

Output trees_cut(const std::string& tree, int index) {
  Tree t = parse_tree(tree);
  if (index < 1 || index >= static_cast<int>(t.leaf_count()))
    throw UsageError("--index must lie in 1.." + std::to_string(static_cast<int>(t.leaf_count()) - 1));
  auto [a, b] = path_cut(t, index);
  return {{{"tree", t.str()}, {"index", index}, {"left", a.str()}, {"right", b.str()}}, true, a.str() + " " + b.str() + "\n", ""};
}

Output product_cmd(const std::string& model, int alphabet, const std::string& sym, const std::string& l, const std::string& r) {
  auto m = model_or_usage(model, alphabet);
  if (!m->has_product(sym)) throw UsageError("model '" + model + "' has no product '" + sym + "'");
  LinComb v = m->product(sym, element_or_usage(*m, l), element_or_usage(*m, r));
  return {{{"model", model}, {"product", sym}, {"result", to_json(v)}}, true, format_element(v) + "\n", ""};
}

Output coproduct_cmd(const std::string& model, int alphabet, const std::string& sym, const std::string& e) {
  auto m = model_or_usage(model, alphabet);
  if (!m->has_coproduct(sym)) throw UsageError("model '" + model + "' has no coproduct '" + sym + "'");
  LinComb v = m->coproduct(sym, element_or_usage(*m, e));
  return {{{"model", model}, {"coproduct", sym}, {"result", to_json(v)}}, true, format_element(v) + "\n", ""};
}

struct CheckArgs {
  std::string model, coproduct, product, relation, relation_file, law;
  int alphabet = 2;
  bool witness = false;
};

CompatExpr load_relation(const CheckArgs& a, std::string& name) {
  if (a.relation_file.empty()) {
    const auto& lib = RelationLibrary::builtin();
    if (a.relation.empty()) throw UsageError("check needs --relation, --relation-file or --law");
    if (!lib.contains(a.relation)) throw UsageError("unknown relation '" + a.relation + "'");
    name = a.relation;
    return lib.at(a.relation).expr;
  }
  std::ifstream in(a.relation_file);
  if (!in) throw UsageError("cannot read relation file '" + a.relation_file + "'");
  try {
    auto entry = relation_from_json(Json::parse(in));
    name = entry.name;
    return entry.expr;
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad relation file: ") + e.what());
  }
}

Output check_cmd(const CheckArgs& a, int max_degree) {
  auto m = model_or_usage(a.model, a.alphabet);
  if (!m->has_coproduct(a.coproduct)) throw UsageError("model '" + a.model + "' has no coproduct '" + a.coproduct + "'");
  Output o;
  if (!a.law.empty()) {
    CoalgebraLaw law = a.law == "coassociative"   ? CoalgebraLaw::Coassociative
                       : a.law == "cocommutative" ? CoalgebraLaw::Cocommutative
                                                  : CoalgebraLaw::Nap;
    auto r = check_law(*m, a.coproduct, law, max_degree);
    o.json = to_json(r);
    o.json["law"] = a.law;
    o.holds = r.holds;
    o.text = std::string(r.holds ? "holds" : "fails") + " (" + std::to_string(r.checked) + " elements)\n";
    if (a.witness && r.first_failure)
      o.text += "witness " + r.first_failure->element.str() + "\n  lhs " + format_element(r.first_failure->lhs) +
                "\n  rhs " + format_element(r.first_failure->rhs) + "\n";
  } else {
    if (!m->has_product(a.product)) throw UsageError("model '" + a.model + "' has no product '" + a.product + "'");
    std::string name;
    CompatExpr expr = load_relation(a, name);
    auto r = usage_on_invalid([&] { return check_relation(*m, a.coproduct, a.product, expr, max_degree); });
    o.json = to_json(r);
    o.json["relation"] = name;
    o.json["product"] = a.product;
    o.holds = r.holds;
    o.text = std::string(r.holds ? "holds" : "fails") + " (" + std::to_string(r.checked_pairs) + " pairs)\n";
    if (a.witness && r.first_failure) {
      const auto& f = *r.first_failure;
      o.text += "witness at degree " + std::to_string(f.degree) + ": a = " + format_element(f.left) +
                ", b = " + format_element(f.right) + "\n  lhs " + format_element(f.lhs) + "\n  rhs " +
                format_element(f.rhs) + "\n";
    }
  }
  o.json["model"] = a.model;
  o.json["coproduct"] = a.coproduct;
  o.json["alphabet"] = a.alphabet;
  o.json["maxDegree"] = max_degree;
  return o;
}

Output prim_cmd(const std::string& type_name, std::optional<int> alphabet, int degree) {
  auto type = type_or_usage(type_name, alphabet);
  auto basis = primitive_part(type, degree);
  std::vector<std::string> text;
  for (const auto& v : basis) text.push_back(format_element(v));
  return {{{"type", type_name}, {"alphabet", type.alphabet}, {"degree", degree}, {"dim", basis.size()}, {"basis", to_json(basis)}},
          true,
          "dim " + std::to_string(basis.size()) + "\n" + lines(text),
          ""};
}

Output pbw_cmd(const std::string& type_name, std::optional<int> alphabet, const std::string& element) {
  auto type = type_or_usage(type_name, alphabet);
  LinComb a = element_or_usage(*type.model, element);
  auto expansion = usage_on_invalid([&] { return pbw_expand(type, a); });
  LinComb back = pbw_reassemble(*type.model, expansion);
  std::string text;
  for (const auto& c : expansion)
    text += "k=" + std::to_string(c.k) + " " + c.cooperation + ": " + format_element(c.tensor) + "\n";
  return {{{"type", type_name}, {"element", to_json(a)}, {"components", to_json(expansion)}, {"reassembles", back == a}},
          back == a,
          text,
          ""};
}

Output idempotent_cmd(const std::string& type_name, std::optional<int> alphabet, const std::string& kind, int N,
                      const std::string& report) {
  auto type = type_or_usage(type_name, alphabet);
  GradedEndo e = GradedEndo::zero({});
  auto context = [&] {
    if (type.product.empty() || type.coproduct.empty())
      throw UsageError("type '" + type_name + "' has no single product/coproduct pair for convolution");
    try {
      return ConvolutionContext(type.model, type.product, type.coproduct, N);
    } catch (const std::domain_error& err) {
      throw UsageError(err.what());
    }
  };
  if (kind == "versal") {
    e = versal_idempotent(type, N);
  } else if (kind == "geometric") {
    e = geometric_idempotent(context());
  } else if (kind == "dynkin") {
    if (type_name != "as" && type_name != "classical") throw UsageError("the Dynkin idempotent lives on T(V): use as or classical");
    e = dynkin(type.alphabet, N);
  } else if (kind.rfind("eulerian:", 0) == 0) {
    int i = 0;
    try {
      i = std::stoi(kind.substr(9));
    } catch (const std::exception&) {
      throw UsageError("bad Eulerian index in '" + kind + "'");
    }
    if (i < 1 || i > N) throw UsageError("Eulerian index must lie in 1..max-degree");
    e = eulerian(context(), i);
  } else {
    throw UsageError("unknown idempotent kind '" + kind + "'");
  }

  Output o;
  o.json = {{"type", type_name}, {"alphabet", type.alphabet}, {"kind", kind}, {"maxDegree", N}};
  Json degrees = Json::array();
  std::string csv = "degree,dim,rank\n", text;
  for (int n : e.degrees()) {
    Json d{{"degree", n}, {"dim", e.basis(n).size()}, {"rank", e.rank(n)}};
    if (report == "matrix") {
      std::vector<std::string> keys;
      for (const auto& k : e.basis(n).keys()) keys.push_back(k.str());
      d["basis"] = keys;
      d["matrix"] = to_json(e.matrix(n));
    }
    csv += std::to_string(n) + "," + std::to_string(e.basis(n).size()) + "," + std::to_string(e.rank(n)) + "\n";
    text += "degree " + std::to_string(n) + ": rank " + std::to_string(e.rank(n)) + " of " + std::to_string(e.basis(n).size()) + "\n";
    degrees.push_back(std::move(d));
  }
  o.json["degrees"] = degrees;
  o.json["idempotent"] = e.compose(e) == e;
  o.holds = o.json["idempotent"].get<bool>();
  if (report == "ranks") {
    o.text = text;
    o.csv = csv;
  }
  return o;
}

Output verify_cmd(const std::string& type_name, std::optional<int> alphabet, const std::string& what, int N) {
  auto type = type_or_usage(type_name, alphabet);
  Output o;
  if (what == "h2") {
    auto r = check_h2(type, N);
    if (r.verdict == "unsupported cooperad")
      throw UsageError("h2 is not defined for type '" + type_name + "': unsupported cooperad");
    o.json = to_json(r);
    o.holds = r.verdict != "fail";
    o.text = r.verdict + "\n";
  } else {
    auto r = verify_structure_iso(type, N);
    o.json = to_json(r);
    o.holds = r.holds;
    for (const auto& row : r.rows)
      o.text += "degree " + std::to_string(row.degree) + ": dim A = " + row.dim_a.str() + ", composite = " + row.composite.str() + "\n";
  }
  return o;
}

Output series_show(const std::string& name, int order) {
  auto s = usage_on_invalid([&] { return gen_series(name, order); });
  Output o;
  o.json = to_json(s);
  o.json["name"] = canonical_series_name(name);
  o.text = s.str() + "\n";
  o.csv = "n,coefficient\n";
  for (int n = 1; n <= order; ++n) o.csv += std::to_string(n) + "," + to_string(s[n]) + "\n";
  return o;
}

std::vector<std::string> split_names(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string part; std::getline(in, part, ',');) out.push_back(part);
  return out;
}

Output series_check(const std::string& kind, const std::string& names, int order) {
  auto parts = split_names(names);
  SeriesIdentityReport r;
  if (kind == "triple") {
    if (parts.size() != 3) throw UsageError("--names for a triple check is C,A,P");
    r = usage_on_invalid([&] { return check_triple_identity(parts[0], parts[1], parts[2], order); });
  } else {
    if (parts.size() != 2) throw UsageError("--names for a koszul check is P,PDUAL");
    r = usage_on_invalid([&] { return check_koszul_dual(parts[0], parts[1], order); });
  }
  Output o;
  o.json = to_json(r);
  o.json["check"] = kind;
  o.json["names"] = names;
  o.holds = r.holds;
  o.text = r.holds ? "holds\n" : "fails at t^" + std::to_string(*r.first_mismatch) + "\n";
  return o;
}

Output homology_cmd(int n, bool check_only) {
  if (n < 1) throw UsageError("--internal-degree must be at least 1");
  auto r = total_homology(n, !check_only);
  Output o;
  o.json = to_json(r);
  o.holds = r.checks.all();
  std::ostringstream text;
  text << "differentials " << (r.checks.all() ? "ok" : "FAIL") << "\n";
  if (!check_only) {
    text << "H(Tot):";
    for (auto d : r.homology_dims) text << " " << d;
    text << "\n";
  }
  o.text = text.str();
  return o;
}

Output suite_cmd(bool tables, const std::vector<std::string>& bundle_names) {
  std::vector<std::string> selected = bundle_names;
  if (tables)
    for (const auto& b : suite::table_bundles())
      if (std::find(selected.begin(), selected.end(), b) == selected.end()) selected.push_back(b);
  Json report = usage_on_invalid([&] { return selected.empty() ? suite::run_all() : suite::run(selected); });
  Output o;
  o.holds = report["holds"].get<bool>();
  for (const auto& [name, r] : report["bundles"].items())
    o.text += (r["holds"].get<bool>() ? "PASS " : "FAIL ") + name + "\n";
  o.json = std::move(report);
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with generalized bialgebras, free operadic models and their idempotents"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  std::optional<int> max_degree, alphabet;
  unsigned long seed = 0;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text", "csv"}));
  app.add_option("--max-degree", max_degree, "Largest total degree examined");
  app.add_option("--seed", seed, "Seed for sampled checks; every shipped check is exhaustive, so output does not depend on it");
  app.add_option("--alphabet", alphabet, "Number of generators of the free model");

  std::optional<Output> result;
  auto run = [&](auto f) { return [&, f] { result = f(); }; };

  auto* trees = app.add_subcommand("trees", "Planar binary trees");
  trees->require_subcommand(1);
  int leaves = 0, index = 0;
  std::string kind = "vee", left, right, tree;
  auto* enumerate = trees->add_subcommand("enumerate", "All trees with a given number of leaves");
  enumerate->add_option("--leaves", leaves)->required();
  enumerate->callback(run([&] { return trees_enumerate(leaves); }));
  auto* graft = trees->add_subcommand("graft", "Over, under or vee grafting");
  graft->add_option("--kind", kind)->check(CLI::IsMember({"over", "under", "vee"}));
  graft->add_option("--left", left)->required();
  graft->add_option("--right", right)->required();
  graft->callback(run([&] { return trees_graft(kind, left, right); }));
  auto* cut = trees->add_subcommand("cut", "Cut along the path from leaf I to the root");
  cut->add_option("--tree", tree)->required();
  cut->add_option("--index", index)->required();
  cut->callback(run([&] { return trees_cut(tree, index); }));

  std::string model, symbol, element;
  auto* product = app.add_subcommand("product", "Product of two elements of a free model");
  product->add_option("--model", model)->required();
  product->add_option("--product", symbol)->required();
  product->add_option("--left", left)->required();
  product->add_option("--right", right)->required();
  product->callback(run([&] { return product_cmd(model, alphabet.value_or(3), symbol, left, right); }));

  auto* coproduct = app.add_subcommand("coproduct", "Coproduct of an element of a free model");
  coproduct->add_option("--model", model)->required();
  coproduct->add_option("--coproduct", symbol)->required();
  coproduct->add_option("--element", element)->required();
  coproduct->callback(run([&] { return coproduct_cmd(model, alphabet.value_or(3), symbol, element); }));

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "Exhaustive check of a compatibility relation or coalgebra law");
  check->add_option("--model", check_args.model)->required();
  check->add_option("--coproduct", check_args.coproduct)->required();
  check->add_option("--product", check_args.product);
  auto* rel = check->add_option("--relation", check_args.relation);
  auto* rel_file = check->add_option("--relation-file", check_args.relation_file);
  auto* law = check->add_option("--law", check_args.law)->check(CLI::IsMember({"coassociative", "cocommutative", "nap"}));
  rel->excludes(rel_file)->excludes(law);
  rel_file->excludes(law);
  check->add_flag("--witness", check_args.witness, "Print the first failing pair in text output");
  check->callback(run([&] {
    check_args.alphabet = alphabet.value_or(2);
    return check_cmd(check_args, degree_bound(max_degree, 4));
  }));

  std::string type;
  int degree = 0;
  auto* prim = app.add_subcommand("prim", "Basis of the primitive part in one degree");
  prim->add_option("--model", type)->required();
  prim->add_option("--degree", degree)->required();
  prim->callback(run([&] { return prim_cmd(type, alphabet, degree_bound(degree, 1)); }));

  auto* pbw = app.add_subcommand("pbw", "PBW-type expansion of an element");
  pbw->add_option("--model", type)->required();
  pbw->add_option("--element", element)->required();
  pbw->callback(run([&] { return pbw_cmd(type, alphabet, element); }));

  std::string idem_kind = "versal", report = "ranks";
  auto* idempotent = app.add_subcommand("idempotent", "Versal, Eulerian, Dynkin or geometric idempotent");
  idempotent->add_option("--model", type)->required();
  idempotent->add_option("--kind", idem_kind);
  idempotent->add_option("--report", report)->check(CLI::IsMember({"ranks", "matrix"}));
  idempotent->callback(run([&] { return idempotent_cmd(type, alphabet, idem_kind, degree_bound(max_degree, 4), report); }));

  std::string what;
  auto* verify = app.add_subcommand("verify", "Hypothesis H2 or the structure isomorphism, degree by degree");
  verify->add_option("--model", type)->required();
  verify->add_option("--what", what)->required()->check(CLI::IsMember({"h2", "structure-iso"}));
  verify->callback(run([&] { return verify_cmd(type, alphabet, what, degree_bound(max_degree, 5)); }));

  std::string show, check_kind, names;
  int order = 10;
  auto* series = app.add_subcommand("series", "Generating series and their identities");
  auto* show_opt = series->add_option("--show", show);
  auto* check_opt = series->add_option("--check", check_kind)->check(CLI::IsMember({"triple", "koszul"}));
  series->add_option("--names", names);
  series->add_option("--order", order);
  show_opt->excludes(check_opt);
  series->callback(run([&] {
    if (order < 1) throw UsageError("--order must be at least 1");
    if (!show.empty()) return series_show(show, order);
    if (check_kind.empty()) throw UsageError("series needs --show NAME or --check KIND");
    return series_check(check_kind, names, order);
  }));

  int internal_degree = 0;
  bool check_only = false;
  auto* homology = app.add_subcommand("homology", "Homology of the duplicial bicomplex");
  homology->add_option("--internal-degree", internal_degree)->required();
  homology->add_flag("--check-only", check_only, "Only verify the differential identities");
  homology->callback(run([&] { return homology_cmd(internal_degree, check_only); }));

  bool tables = false;
  std::vector<std::string> bundle_names;
  auto* suite = app.add_subcommand("suite", "Run the bundled checks; all of them by default");
  suite->add_flag("--tables,--paper-tables", tables, "PBW tables and series identities");
  suite->add_option("--bundle", bundle_names, "Run only the named bundles");
  suite->callback(run([&] { return suite_cmd(tables, bundle_names); }));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  if (!result) return 2;
  if (format == "csv") {
    if (result->csv.empty()) {
      std::cerr << "usage error: csv output is not available for this command\n";
      return 2;
    }
    std::cout << result->csv;
  } else if (format == "text" && !result->text.empty()) {
    std::cout << result->text;
  } else {
    std::cout << result->json.dump(2) << "\n";
  }
  return result->holds ? 0 : 1;
}
