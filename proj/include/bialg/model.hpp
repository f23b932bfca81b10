#pragma once

#include "bialg/lincomb.hpp"
#include "bialg/words.hpp"

#include <algorithm>
#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bialg {

// A binary monomial in named (co)operations. Inputs are read left to right.
class Monomial {
 public:
  static Monomial input() { return Monomial(); }
  static Monomial apply(std::string symbol, Monomial l, Monomial r) {
    Monomial m;
    m.symbol_ = std::move(symbol);
    m.left_ = std::make_shared<const Monomial>(std::move(l));
    m.right_ = std::make_shared<const Monomial>(std::move(r));
    return m;
  }

  // n inputs combined as s(a1, s(a2, ... s(a_{n-1}, a_n))).
  static Monomial right_nested(const std::string& symbol, int arity) {
    if (arity < 1) throw std::invalid_argument("monomial arity must be positive");
    Monomial m = input();
    for (int i = 1; i < arity; ++i) m = apply(symbol, input(), std::move(m));
    return m;
  }
  static Monomial left_nested(const std::string& symbol, int arity) {
    if (arity < 1) throw std::invalid_argument("monomial arity must be positive");
    Monomial m = input();
    for (int i = 1; i < arity; ++i) m = apply(symbol, std::move(m), input());
    return m;
  }

  bool is_input() const { return !left_; }
  const std::string& symbol() const { return symbol_; }
  const Monomial& left() const { return *left_; }
  const Monomial& right() const { return *right_; }

  std::size_t arity() const { return is_input() ? 1 : left_->arity() + right_->arity(); }

  std::string str() const { return is_input() ? "_" : "(" + left_->str() + " " + symbol_ + " " + right_->str() + ")"; }

 private:
  std::string symbol_;
  std::shared_ptr<const Monomial> left_, right_;
};

struct WeightedMonomial {
  Rational coeff;
  Monomial monomial;
};
using MonomialSum = std::vector<WeightedMonomial>;

// A graded model with named products and reduced coproducts on an explicit basis.
class BialgebraModel {
 public:
  explicit BialgebraModel(int alphabet) : alphabet_(alphabet) {
    if (alphabet < 1 || alphabet > static_cast<int>(letter_chars.size()))
      throw std::invalid_argument("alphabet size must lie in 1.." + std::to_string(letter_chars.size()));
  }
  virtual ~BialgebraModel() = default;

  virtual std::string name() const = 0;
  virtual std::vector<std::string> products() const = 0;
  virtual std::vector<std::string> coproducts() const = 0;

  // Ordered basis of the degree-n component.
  virtual std::vector<Key> basis(int degree) const = 0;
  virtual int degree(const Key& k) const = 0;
  // Validates a literal and returns its canonical key.
  virtual Key parse_key(std::string_view text) const = 0;
  virtual Key generator(int letter_index) const = 0;

  // The elements a relation is checked on; by default the basis itself.
  virtual std::vector<LinComb> elements(int degree) const {
    std::vector<LinComb> out;
    for (const auto& k : basis(degree)) out.emplace_back(k);
    return out;
  }

  // Writes a basis key as a product monomial applied to its letters in order.
  virtual Monomial monomial_of(const Key& k) const {
    throw std::logic_error("model '" + name() + "' has no monomial presentation for '" + k.str() + "'");
  }

  // The letters of a key, in input order.
  virtual std::string letters_of(const Key& k) const = 0;

  int alphabet() const { return alphabet_; }

  bool has_product(std::string_view s) const { return contains(products(), s); }
  bool has_coproduct(std::string_view s) const { return contains(coproducts(), s); }

  LinComb product(const std::string& symbol, const LinComb& a, const LinComb& b) const {
    require_product(symbol);
    LinComb out;
    for (const auto& [ka, ca] : a)
      for (const auto& [kb, cb] : b) out.add(product_on_keys(symbol, ka, kb), ca * cb);
    return out;
  }

  LinComb coproduct(const std::string& symbol, const LinComb& a) const {
    require_coproduct(symbol);
    LinComb out;
    for (const auto& [k, c] : a) out.add(coproduct_on_key(symbol, k), c);
    return out;
  }

  // Evaluates a product monomial on a tuple of elements.
  LinComb evaluate(const Monomial& m, const std::vector<LinComb>& args) const {
    if (args.size() != m.arity()) throw std::invalid_argument("monomial arity does not match argument count");
    std::size_t next = 0;
    return evaluate_from(m, args, next);
  }

  // Applies a product monomial to every key of a tensor of matching arity.
  LinComb evaluate_on_tensor(const Monomial& m, const LinComb& t) const {
    LinComb out;
    for (const auto& [k, c] : t) {
      std::vector<LinComb> args;
      for (auto& f : k.factors()) args.emplace_back(Key(f));
      out.add(evaluate(m, args), c);
    }
    return out;
  }

  LinComb evaluate_on_tensor(const MonomialSum& s, const LinComb& t) const {
    LinComb out;
    for (const auto& wm : s) out.add(evaluate_on_tensor(wm.monomial, t), wm.coeff);
    return out;
  }

  // Applies an iterated cooperation, described by a monomial in coproduct symbols.
  LinComb cooperate(const Monomial& m, const LinComb& x) const {
    if (m.is_input()) return x;
    LinComb out;
    for (const auto& [k, c] : coproduct(m.symbol(), x)) {
      auto f = k.factors();
      out.add(tensor(cooperate(m.left(), LinComb(Key(f[0]))), cooperate(m.right(), LinComb(Key(f[1])))), c);
    }
    return out;
  }

  // Degree of a homogeneous element; throws on zero or inhomogeneous input.
  int degree_of(const LinComb& a) const {
    if (a.empty()) throw std::invalid_argument("degree of the zero element");
    int d = degree(a.begin()->first);
    for (const auto& [k, c] : a)
      if (degree(k) != d) throw std::invalid_argument("inhomogeneous element");
    return d;
  }

 protected:
  virtual LinComb product_on_keys(const std::string& symbol, const Key& a, const Key& b) const = 0;
  virtual LinComb coproduct_on_key(const std::string& symbol, const Key& k) const = 0;

  void require_product(const std::string& s) const {
    if (!has_product(s)) throw std::invalid_argument("model '" + name() + "' has no product '" + s + "'");
  }
  void require_coproduct(const std::string& s) const {
    if (!has_coproduct(s)) throw std::invalid_argument("model '" + name() + "' has no coproduct '" + s + "'");
  }

 private:
  static bool contains(const std::vector<std::string>& v, std::string_view s) {
    return std::find(v.begin(), v.end(), s) != v.end();
  }

  LinComb evaluate_from(const Monomial& m, const std::vector<LinComb>& args, std::size_t& next) const {
    if (m.is_input()) return args[next++];
    LinComb l = evaluate_from(m.left(), args, next);
    LinComb r = evaluate_from(m.right(), args, next);
    return product(m.symbol(), l, r);
  }

  int alphabet_;
};

using ModelPtr = std::shared_ptr<const BialgebraModel>;

}  // namespace bialg
