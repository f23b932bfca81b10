#pragma once

#include "bialg/free_as.hpp"
#include "bialg/free_trees.hpp"
#include "bialg/linalg.hpp"

#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace bialg {

// How the cooperad C^c of a bialgebra type is presented.
enum class CooperadKind {
  Coassociative,   // As^c: one coassociative cooperation, iterated
  DualBasis,       // C^c_n dual to A_n through φ, with φ invertible
  Cocommutative,   // Com^c: symmetric, handled through the Eulerian family
};

// A bialgebra type realized on a free model: which coproducts cut out the
// primitives, how C^c is presented, and how n-tuples are multiplied back.
struct BialgebraType {
  std::string name;
  std::function<ModelPtr(int)> make_model;
  int alphabet = 1;
  ModelPtr model;
  std::vector<std::string> coproducts;  // Prim = common kernel of these
  CooperadKind cooperad = CooperadKind::Coassociative;
  // Coassociative and Cocommutative kinds.
  std::string product;
  std::string coproduct;
  std::function<MonomialSum(int)> splitting;
  std::string splitting_name;
  // DualBasis kind: product symbol -> paired coproduct symbol.
  std::map<std::string, std::string> pairing;
};

inline std::vector<std::string> type_names() { return {"as", "bidup", "classical", "dup", "mag"}; }

inline int default_alphabet(const std::string& type) {
  return type == "as" || type == "classical" ? 2 : 1;
}

inline BialgebraType make_type(const std::string& name, int alphabet) {
  BialgebraType t;
  t.name = name;
  t.alphabet = alphabet;
  auto single = [](const std::string& symbol) {
    return [symbol](int n) { return MonomialSum{{Rational(1), Monomial::right_nested(symbol, n)}}; };
  };
  if (name == "as") {
    t.make_model = [](int k) -> ModelPtr { return std::make_shared<AsModel>(k); };
    t.coproducts = {"deconcat"};
    t.product = "concat";
    t.coproduct = "deconcat";
    t.splitting = single("concat");
    t.splitting_name = "concat";
  } else if (name == "classical") {
    t.make_model = [](int k) -> ModelPtr { return std::make_shared<AsModel>(k); };
    t.coproducts = {"shuffle"};
    t.cooperad = CooperadKind::Cocommutative;
    t.product = "concat";
    t.coproduct = "shuffle";
    t.splitting = [](int n) {
      Rational f = 1;
      for (int i = 2; i <= n; ++i) f *= i;
      return MonomialSum{{1 / f, Monomial::right_nested("concat", n)}};
    };
    t.splitting_name = "symmetrized concat";
  } else if (name == "mag") {
    t.make_model = [](int k) -> ModelPtr { return std::make_shared<MagModel>(k); };
    t.coproducts = {"dual"};
    t.cooperad = CooperadKind::DualBasis;
    t.pairing = {{"mul", "dual"}};
    t.splitting_name = "dual basis";
  } else if (name == "dup") {
    t.make_model = [](int k) -> ModelPtr { return std::make_shared<DupModel>(k); };
    t.coproducts = {"delta"};
    t.product = "right";
    t.coproduct = "delta";
    // a1 ≻ (a2 ≻ (... ≻ an)) on generators is the left comb.
    t.splitting = single("right");
    t.splitting_name = "left comb";
  } else if (name == "bidup") {
    t.make_model = [](int k) -> ModelPtr { return std::make_shared<DupModel>(k); };
    t.coproducts = {"delta_left", "delta_right"};
    t.cooperad = CooperadKind::DualBasis;
    t.pairing = {{"left", "delta_left"}, {"right", "delta_right"}};
    t.splitting_name = "dual basis";
  } else {
    throw std::invalid_argument("unknown bialgebra type '" + name + "'");
  }
  t.model = t.make_model(alphabet);
  return t;
}

inline std::map<int, BasisPtr> graded_bases(const BialgebraModel& m, int max_degree) {
  std::map<int, BasisPtr> out;
  for (int n = 1; n <= max_degree; ++n) out.emplace(n, std::make_shared<GradedBasis>(m.basis(n)));
  return out;
}

// A cooperation of C^c_n paired with the product monomials that undo it.
struct SplitCooperation {
  std::string label;
  Monomial coop;
  MonomialSum split;
};

namespace detail {
inline Monomial substitute(const Monomial& m, const std::map<std::string, std::string>& symbols) {
  if (m.is_input()) return m;
  return Monomial::apply(symbols.at(m.symbol()), substitute(m.left(), symbols), substitute(m.right(), symbols));
}

inline Key diagonal_tensor(const Key& generator, int n) {
  return Key::join(std::vector<std::string>(static_cast<std::size_t>(n), generator.str()));
}
}  // namespace detail

// The matrix of φ_n: rows indexed by a basis of C^c_n, columns by the
// one-generator basis of A_n. Entry = coefficient of x⊗...⊗x in δ_c(μ(x,...,x)).
struct PhiMatrix {
  std::vector<std::string> row_labels;
  std::vector<Monomial> row_coops;
  std::vector<Key> columns;
  std::vector<Monomial> column_monomials;
  Matrix matrix;
};

inline PhiMatrix phi_map(const BialgebraType& type, int n) {
  if (type.cooperad == CooperadKind::Cocommutative)
    throw std::domain_error("unsupported cooperad: symmetric (Com^c) targets are not handled by phi_map");
  auto one = type.make_model(1);
  PhiMatrix phi;
  phi.columns = one->basis(n);
  for (const auto& c : phi.columns) phi.column_monomials.push_back(one->monomial_of(c));
  if (type.cooperad == CooperadKind::Coassociative) {
    phi.row_labels = {"delta^" + std::to_string(n - 1)};
    phi.row_coops = {Monomial::right_nested(type.coproduct, n)};
  } else {
    for (std::size_t j = 0; j < phi.columns.size(); ++j) {
      phi.row_labels.push_back(phi.columns[j].str());
      phi.row_coops.push_back(detail::substitute(phi.column_monomials[j], type.pairing));
    }
  }
  Key diag = detail::diagonal_tensor(one->generator(0), n);
  phi.matrix = Matrix(phi.row_coops.size(), phi.columns.size());
  for (std::size_t i = 0; i < phi.row_coops.size(); ++i)
    for (std::size_t j = 0; j < phi.columns.size(); ++j)
      phi.matrix(i, j) = one->cooperate(phi.row_coops[i], LinComb(phi.columns[j])).coefficient(diag);
  return phi;
}

// Cooperations of arity n together with their splittings s.
inline std::vector<SplitCooperation> split_cooperations(const BialgebraType& type, int n) {
  if (type.cooperad != CooperadKind::DualBasis)
    return {{"delta^" + std::to_string(n - 1), Monomial::right_nested(type.coproduct, n), type.splitting(n)}};
  auto phi = phi_map(type, n);
  Matrix inv = inverse(phi.matrix);
  std::vector<SplitCooperation> out;
  for (std::size_t i = 0; i < phi.row_coops.size(); ++i) {
    MonomialSum split;
    for (std::size_t j = 0; j < phi.columns.size(); ++j)
      if (inv(j, i) != 0) split.push_back({inv(j, i), phi.column_monomials[j]});
    out.push_back({phi.row_labels[i], phi.row_coops[i], std::move(split)});
  }
  return out;
}

}  // namespace bialg
