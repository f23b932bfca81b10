#pragma once

#include "bialg/model.hpp"

#include <json.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bialg {

// One composite (out-ops) ∘ (slot permutation) ∘ (in-coops) with a coefficient.
// "id" passes a slot through. "$mu" and "$delta" stand for the product and
// coproduct the relation is checked against.
struct CompatTerm {
  Rational coeff = 1;
  std::vector<std::string> out_ops;
  std::vector<std::size_t> perm;  // output slot i takes intermediate slot perm[i]
  std::vector<std::string> in_coops;

  bool coops_trivial() const {
    for (const auto& c : in_coops)
      if (c != "id") return false;
    return true;
  }
};

struct CompatExpr {
  std::vector<CompatTerm> terms;

  // Terms whose input cooperations are all identities.
  CompatExpr phi1() const { return filtered(true); }
  CompatExpr phi2() const { return filtered(false); }

  void validate() const {
    for (const auto& t : terms) {
      if (t.in_coops.size() != 2) throw std::invalid_argument("relation terms take exactly two inputs");
      if (t.out_ops.size() != 2) throw std::invalid_argument("relation terms produce exactly two outputs");
      std::size_t mid_in = 0, mid_out = 0;
      for (const auto& c : t.in_coops) mid_in += c == "id" ? 1 : 2;
      for (const auto& o : t.out_ops) mid_out += o == "id" ? 1 : 2;
      if (mid_in != t.perm.size() || mid_out != t.perm.size())
        throw std::invalid_argument("block arities of a relation term do not balance");
      std::vector<bool> seen(t.perm.size(), false);
      for (auto p : t.perm) {
        if (p >= t.perm.size() || seen[p]) throw std::invalid_argument("relation term slot map is not a permutation");
        seen[p] = true;
      }
    }
  }

 private:
  CompatExpr filtered(bool trivial) const {
    CompatExpr out;
    for (const auto& t : terms)
      if (t.coops_trivial() == trivial) out.terms.push_back(t);
    return out;
  }
};

struct RelationEntry {
  std::string name;
  std::string description;
  CompatExpr expr;
  // Default left-hand side symbols, used when the caller names none.
  std::optional<std::string> coproduct;
  std::optional<std::string> product;
};

inline CompatExpr compat_from_json(const nlohmann::json& j) {
  CompatExpr e;
  for (const auto& t : j.at("terms")) {
    CompatTerm term;
    const auto& c = t.at("coeff");
    term.coeff = c.is_string() ? parse_rational(c.get<std::string>()) : Rational(c.get<long long>());
    term.out_ops = t.at("outOps").get<std::vector<std::string>>();
    term.perm = t.at("perm").get<std::vector<std::size_t>>();
    term.in_coops = t.at("inCoops").get<std::vector<std::string>>();
    e.terms.push_back(std::move(term));
  }
  e.validate();
  return e;
}

inline nlohmann::json compat_to_json(const CompatExpr& e) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : e.terms)
    terms.push_back({{"coeff", to_string(t.coeff)}, {"outOps", t.out_ops}, {"perm", t.perm}, {"inCoops", t.in_coops}});
  return {{"terms", terms}};
}

inline RelationEntry relation_from_json(const nlohmann::json& j) {
  RelationEntry r;
  r.name = j.at("name").get<std::string>();
  r.description = j.value("description", "");
  r.expr = compat_from_json(j);
  if (j.contains("coproduct")) r.coproduct = j["coproduct"].get<std::string>();
  if (j.contains("product")) r.product = j["product"].get<std::string>();
  return r;
}

namespace detail {
// Letters A..G name the seven shapes of a binary compatibility relation:
// A x⊗y, B y⊗x, C x1⊗x2·y, D x1·y⊗x2, E x·y1⊗y2, F y1⊗x·y2, G x1·y1⊗x2·y2.
inline constexpr const char* relation_library_json = R"json([
  {"name": "Hopf", "description": "nonunital Hopf: A+B+C+D+E+F+G",
   "terms": [
     {"coeff": "1", "inCoops": ["id", "id"], "perm": [0, 1], "outOps": ["id", "id"]},
     {"coeff": "1", "inCoops": ["id", "id"], "perm": [1, 0], "outOps": ["id", "id"]},
     {"coeff": "1", "inCoops": ["$delta", "id"], "perm": [0, 1, 2], "outOps": ["id", "$mu"]},
     {"coeff": "1", "inCoops": ["$delta", "id"], "perm": [0, 2, 1], "outOps": ["$mu", "id"]},
     {"coeff": "1", "inCoops": ["id", "$delta"], "perm": [0, 1, 2], "outOps": ["$mu", "id"]},
     {"coeff": "1", "inCoops": ["id", "$delta"], "perm": [1, 0, 2], "outOps": ["id", "$mu"]},
     {"coeff": "1", "inCoops": ["$delta", "$delta"], "perm": [0, 2, 1, 3], "outOps": ["$mu", "$mu"]}]},
  {"name": "nui", "description": "nonunital infinitesimal: A+C+E",
   "terms": [
     {"coeff": "1", "inCoops": ["id", "id"], "perm": [0, 1], "outOps": ["id", "id"]},
     {"coeff": "1", "inCoops": ["$delta", "id"], "perm": [0, 1, 2], "outOps": ["id", "$mu"]},
     {"coeff": "1", "inCoops": ["id", "$delta"], "perm": [0, 1, 2], "outOps": ["$mu", "id"]}]},
  {"name": "magmatic", "description": "A only",
   "terms": [
     {"coeff": "1", "inCoops": ["id", "id"], "perm": [0, 1], "outOps": ["id", "id"]}]},
  {"name": "Livernet", "description": "A+C+D",
   "terms": [
     {"coeff": "1", "inCoops": ["id", "id"], "perm": [0, 1], "outOps": ["id", "id"]},
     {"coeff": "1", "inCoops": ["$delta", "id"], "perm": [0, 1, 2], "outOps": ["id", "$mu"]},
     {"coeff": "1", "inCoops": ["$delta", "id"], "perm": [0, 2, 1], "outOps": ["$mu", "id"]}]},
  {"name": "Lily", "description": "2(A-B) + (C+D+E+F)/2",
   "terms": [
     {"coeff": "2", "inCoops": ["id", "id"], "perm": [0, 1], "outOps": ["id", "id"]},
     {"coeff": "-2", "inCoops": ["id", "id"], "perm": [1, 0], "outOps": ["id", "id"]},
     {"coeff": "1/2", "inCoops": ["$delta", "id"], "perm": [0, 1, 2], "outOps": ["id", "$mu"]},
     {"coeff": "1/2", "inCoops": ["$delta", "id"], "perm": [0, 2, 1], "outOps": ["$mu", "id"]},
     {"coeff": "1/2", "inCoops": ["id", "$delta"], "perm": [0, 1, 2], "outOps": ["$mu", "id"]},
     {"coeff": "1/2", "inCoops": ["id", "$delta"], "perm": [1, 0, 2], "outOps": ["id", "$mu"]}]},
  {"name": "semi-Hopf-left",
   "description": "d(a<b) = a|b + a<b1|b2 + a1<b|a2 + a1|a2*b + a1<b1|a2*b2, with * = star",
   "product": "left", "coproduct": "deconcat",
   "terms": [
     {"coeff": "1", "inCoops": ["id", "id"], "perm": [0, 1], "outOps": ["id", "id"]},
     {"coeff": "1", "inCoops": ["id", "$delta"], "perm": [0, 1, 2], "outOps": ["$mu", "id"]},
     {"coeff": "1", "inCoops": ["$delta", "id"], "perm": [0, 2, 1], "outOps": ["$mu", "id"]},
     {"coeff": "1", "inCoops": ["$delta", "id"], "perm": [0, 1, 2], "outOps": ["id", "star"]},
     {"coeff": "1", "inCoops": ["$delta", "$delta"], "perm": [0, 2, 1, 3], "outOps": ["$mu", "star"]}]},
  {"name": "nil", "description": "(Id - mu delta)x (x) (Id - mu delta)y",
   "terms": [
     {"coeff": "1", "inCoops": ["id", "id"], "perm": [0, 1], "outOps": ["id", "id"]},
     {"coeff": "-1", "inCoops": ["$delta", "id"], "perm": [0, 1, 2], "outOps": ["$mu", "id"]},
     {"coeff": "-1", "inCoops": ["id", "$delta"], "perm": [0, 1, 2], "outOps": ["id", "$mu"]},
     {"coeff": "1", "inCoops": ["$delta", "$delta"], "perm": [0, 1, 2, 3], "outOps": ["$mu", "$mu"]}]},
  {"name": "biduplicial-left-left", "description": "delta_left(x<y) = A + C + E in delta_left and <",
   "coproduct": "delta_left", "product": "left",
   "terms": [
     {"coeff": "1", "inCoops": ["id", "id"], "perm": [0, 1], "outOps": ["id", "id"]},
     {"coeff": "1", "inCoops": ["delta_left", "id"], "perm": [0, 1, 2], "outOps": ["id", "left"]},
     {"coeff": "1", "inCoops": ["id", "delta_left"], "perm": [0, 1, 2], "outOps": ["left", "id"]}]},
  {"name": "biduplicial-left-right", "description": "delta_left(x>y) = x>y1 | y2",
   "coproduct": "delta_left", "product": "right",
   "terms": [
     {"coeff": "1", "inCoops": ["id", "delta_left"], "perm": [0, 1, 2], "outOps": ["right", "id"]}]},
  {"name": "biduplicial-right-left", "description": "delta_right(x<y) = x1 | x2<y",
   "coproduct": "delta_right", "product": "left",
   "terms": [
     {"coeff": "1", "inCoops": ["delta_right", "id"], "perm": [0, 1, 2], "outOps": ["id", "left"]}]},
  {"name": "biduplicial-right-right", "description": "delta_right(x>y) = A + C + E in delta_right and >",
   "coproduct": "delta_right", "product": "right",
   "terms": [
     {"coeff": "1", "inCoops": ["id", "id"], "perm": [0, 1], "outOps": ["id", "id"]},
     {"coeff": "1", "inCoops": ["delta_right", "id"], "perm": [0, 1, 2], "outOps": ["id", "right"]},
     {"coeff": "1", "inCoops": ["id", "delta_right"], "perm": [0, 1, 2], "outOps": ["right", "id"]}]}
])json";
}  // namespace detail

class RelationLibrary {
 public:
  // The shipped relations, parsed once. Copy it to add entries.
  static const RelationLibrary& builtin() {
    static const RelationLibrary lib = [] {
      RelationLibrary l;
      for (const auto& j : nlohmann::json::parse(detail::relation_library_json)) l.add(relation_from_json(j));
      return l;
    }();
    return lib;
  }

  void add(RelationEntry e) {
    auto name = e.name;
    entries_.insert_or_assign(std::move(name), std::move(e));
  }

  const RelationEntry& at(const std::string& name) const {
    auto it = entries_.find(name);
    if (it == entries_.end()) throw std::invalid_argument("unknown relation '" + name + "'");
    return it->second;
  }
  bool contains(const std::string& name) const { return entries_.count(name) != 0; }
  const std::map<std::string, RelationEntry>& entries() const { return entries_; }

 private:
  std::map<std::string, RelationEntry> entries_;
};

namespace detail {
inline const std::string& resolve(const std::string& sym, const std::string& mu, const std::string& delta) {
  if (sym == "$mu") return mu;
  if (sym == "$delta") return delta;
  return sym;
}
}  // namespace detail

// Evaluates the right-hand side Φ on (a, b); the result is a LinComb of pairs.
inline LinComb eval_compat(const CompatExpr& expr, const BialgebraModel& model, const LinComb& a, const LinComb& b,
                           const std::string& mu, const std::string& delta) {
  LinComb out;
  const LinComb args[2] = {a, b};
  for (const auto& term : expr.terms) {
    LinComb mid;
    bool first = true;
    for (std::size_t i = 0; i < 2; ++i) {
      const auto& c = detail::resolve(term.in_coops[i], mu, delta);
      LinComb piece = c == "id" ? args[i] : model.coproduct(c, args[i]);
      mid = first ? piece : tensor(mid, piece);
      first = false;
    }
    mid = permute_factors(mid, term.perm);
    for (const auto& [k, coeff] : mid) {
      auto f = k.factors();
      std::size_t slot = 0;
      LinComb value;
      bool start = true;
      for (const auto& op_raw : term.out_ops) {
        const auto& op = detail::resolve(op_raw, mu, delta);
        LinComb block = op == "id" ? LinComb(Key(f[slot]))
                                   : model.product(op, LinComb(Key(f[slot])), LinComb(Key(f[slot + 1])));
        slot += op == "id" ? 1 : 2;
        value = start ? block : tensor(value, block);
        start = false;
        if (value.empty()) break;
      }
      out.add(value, coeff * term.coeff);
    }
  }
  return out;
}

struct RelationFailure {
  int degree = 0;
  LinComb left, right, lhs, rhs;
};

struct RelationReport {
  bool holds = true;
  std::size_t checked_pairs = 0;
  std::optional<RelationFailure> first_failure;
};

// Compares δ(μ(a,b)) with Φ(a,b) on all pairs of model elements with
// deg a + deg b ≤ max_degree, in increasing total degree.
inline RelationReport check_relation(const BialgebraModel& model, const std::string& delta, const std::string& mu,
                                     const CompatExpr& expr, int max_degree) {
  if (!model.has_coproduct(delta)) throw std::invalid_argument("model '" + model.name() + "' has no coproduct '" + delta + "'");
  if (!model.has_product(mu)) throw std::invalid_argument("model '" + model.name() + "' has no product '" + mu + "'");
  for (const auto& t : expr.terms) {
    for (const auto& c : t.in_coops)
      if (auto s = detail::resolve(c, mu, delta); s != "id" && !model.has_coproduct(s))
        throw std::invalid_argument("relation uses coproduct '" + s + "' absent from model '" + model.name() + "'");
    for (const auto& o : t.out_ops)
      if (auto s = detail::resolve(o, mu, delta); s != "id" && !model.has_product(s))
        throw std::invalid_argument("relation uses product '" + s + "' absent from model '" + model.name() + "'");
  }

  std::map<int, std::vector<LinComb>> elems;
  for (int d = 1; d < max_degree; ++d) elems[d] = model.elements(d);

  RelationReport report;
  for (int total = 2; total <= max_degree; ++total)
    for (int p = 1; p < total; ++p)
      for (const auto& a : elems[p])
        for (const auto& b : elems[total - p]) {
          ++report.checked_pairs;
          LinComb lhs = model.coproduct(delta, model.product(mu, a, b));
          LinComb rhs = eval_compat(expr, model, a, b, mu, delta);
          if (lhs != rhs) {
            report.holds = false;
            report.first_failure = RelationFailure{total, a, b, lhs, rhs};
            return report;
          }
        }
  return report;
}

enum class CoalgebraLaw { Coassociative, Cocommutative, Nap };

struct LawFailure {
  Key element;
  LinComb lhs, rhs;
};

struct LawReport {
  bool holds = true;
  std::size_t checked = 0;
  std::optional<LawFailure> first_failure;
};

// Coassociative: (δ⊗Id)δ = (Id⊗δ)δ. Cocommutative: τδ = δ.
// NAP^c: (δ⊗Id)δ = (Id⊗τ)(δ⊗Id)δ.
inline LawReport check_law(const BialgebraModel& model, const std::string& delta, CoalgebraLaw law, int max_degree) {
  auto cop = [&](const Key& k) { return model.coproduct(delta, LinComb(k)); };
  LawReport report;
  for (int n = 1; n <= max_degree; ++n)
    for (const auto& k : model.basis(n)) {
      ++report.checked;
      LinComb d = cop(k), lhs, rhs;
      switch (law) {
        case CoalgebraLaw::Coassociative:
          lhs = map_factor(d, 0, cop);
          rhs = map_factor(d, 1, cop);
          break;
        case CoalgebraLaw::Cocommutative:
          lhs = transpose(d);
          rhs = d;
          break;
        case CoalgebraLaw::Nap:
          lhs = map_factor(d, 0, cop);
          rhs = permute_factors(lhs, {0, 2, 1});
          break;
      }
      if (lhs != rhs) {
        report.holds = false;
        report.first_failure = LawFailure{k, lhs, rhs};
        return report;
      }
    }
  return report;
}

}  // namespace bialg
