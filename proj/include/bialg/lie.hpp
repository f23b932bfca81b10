#pragma once

#include "bialg/free_as.hpp"
#include "bialg/linalg.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bialg {

inline LinComb commutator(const LinComb& a, const LinComb& b) {
  LinComb out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      out.add(Key(ka.str() + kb.str()), ca * cb);
      out.add(Key(kb.str() + ka.str()), -ca * cb);
    }
  return out;
}

// [...[[x_{i1}, x_{i2}], x_{i3}], ..., x_{in}] for the letters of w.
inline LinComb left_nested_bracket(const std::string& w) {
  LinComb acc(Key(w.substr(0, 1)));
  for (std::size_t i = 1; i < w.size(); ++i) acc = commutator(acc, LinComb(Key(w.substr(i, 1))));
  return acc;
}

// Basis of the degree-n part of Lie(V) inside T̄(V): left-nested bracket
// monomials on all words, thinned to an independent family by exact rank.
inline std::vector<LinComb> lie_subspace(int alphabet, int n) {
  GradedBasis ambient([&] {
    std::vector<Key> keys;
    for (auto& w : words(alphabet, n)) keys.emplace_back(std::move(w));
    return keys;
  }());
  std::vector<LinComb> chosen;
  std::size_t rank = 0;
  for (const auto& w : words(alphabet, n)) {
    LinComb b = left_nested_bracket(w);
    if (b.empty()) continue;
    chosen.push_back(b);
    std::size_t r = span_rank(ambient, chosen);
    if (r == rank) chosen.pop_back();
    else rank = r;
  }
  return chosen;
}

// Lie(V) inside T̄(V) with the bracket and δ_{[,]} = δ − τδ for deconcatenation δ.
// Relations are checked on elements of Lie(V), not on all words.
class LieModel final : public WordModel {
 public:
  explicit LieModel(int alphabet) : WordModel(alphabet) {}

  std::string name() const override { return "lie"; }
  std::vector<std::string> products() const override { return {"bracket"}; }
  std::vector<std::string> coproducts() const override { return {"cobracket"}; }

  std::vector<LinComb> elements(int degree) const override { return lie_subspace(alphabet(), degree); }

 protected:
  LinComb product_on_keys(const std::string&, const Key& a, const Key& b) const override {
    return commutator(LinComb(a), LinComb(b));
  }
  LinComb coproduct_on_key(const std::string&, const Key& k) const override {
    LinComb d = deconcatenation(k);
    return d - transpose(d);
  }
};

struct LieInternalReport {
  bool holds = true;
  int checked_degree = 0;
  std::optional<LinComb> witness;  // a Lie element whose cobracket leaves Lie⊗Lie
};

// Checks δ_{[,]}(Lie_n) ⊂ ⊕_{p+q=n} Lie_p ⊗ Lie_q degree by degree.
inline LieInternalReport check_lie_internal(int alphabet, int max_degree) {
  LieModel lie(alphabet);
  LieInternalReport report;
  std::map<int, std::vector<LinComb>> basis;
  for (int d = 1; d <= max_degree; ++d) basis[d] = lie_subspace(alphabet, d);
  for (int n = 2; n <= max_degree; ++n) {
    std::vector<LinComb> target;
    std::vector<Key> ambient;
    for (int p = 1; p < n; ++p) {
      for (const auto& a : basis[p])
        for (const auto& b : basis[n - p]) target.push_back(tensor(a, b));
      for (const auto& u : words(alphabet, p))
        for (const auto& v : words(alphabet, n - p)) ambient.push_back(Key::tensor(Key(u), Key(v)));
    }
    std::sort(ambient.begin(), ambient.end());
    GradedBasis space(ambient);
    const std::size_t r = span_rank(space, target);
    for (const auto& z : basis[n]) {
      auto with = target;
      with.push_back(lie.coproduct("cobracket", z));
      if (span_rank(space, with) != r) {
        report.holds = false;
        report.witness = z;
        return report;
      }
    }
    report.checked_degree = n;
  }
  return report;
}

}  // namespace bialg
