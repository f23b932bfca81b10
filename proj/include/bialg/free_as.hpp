#pragma once

#include "bialg/model.hpp"
#include "bialg/words.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace bialg {

// Shared plumbing for models whose basis is a set of words.
class WordModel : public BialgebraModel {
 public:
  using BialgebraModel::BialgebraModel;

  std::vector<Key> basis(int degree) const override {
    std::vector<Key> out;
    if (degree < 1 || degree > max_word_length()) return out;
    for (auto& w : words(alphabet(), degree)) out.emplace_back(std::move(w));
    return out;
  }
  int degree(const Key& k) const override { return static_cast<int>(k.str().size()); }
  Key parse_key(std::string_view text) const override {
    check_word(text, alphabet());
    if (static_cast<int>(text.size()) > max_word_length())
      throw std::invalid_argument("word '" + std::string(text) + "' exceeds the model's top degree");
    return Key(std::string(text));
  }
  Key generator(int i) const override { return Key(std::string(1, letter(i))); }
  std::string letters_of(const Key& k) const override { return k.str(); }

 protected:
  virtual int max_word_length() const { return 1 << 20; }

  static LinComb deconcatenation(const Key& k) {
    const auto& w = k.str();
    LinComb out;
    for (std::size_t i = 1; i < w.size(); ++i) out.add(Key::tensor(Key(w.substr(0, i)), Key(w.substr(i))), 1);
    return out;
  }
};

// Tensor algebra T̄(V): concatenation with deconcatenation (n.u.i.) or the
// unshuffle coproduct (classical Hopf).
class AsModel final : public WordModel {
 public:
  explicit AsModel(int alphabet) : WordModel(alphabet) {}

  std::string name() const override { return "as"; }
  std::vector<std::string> products() const override { return {"concat"}; }
  std::vector<std::string> coproducts() const override { return {"deconcat", "shuffle"}; }

  Monomial monomial_of(const Key& k) const override {
    return Monomial::right_nested("concat", static_cast<int>(k.str().size()));
  }

 protected:
  LinComb product_on_keys(const std::string&, const Key& a, const Key& b) const override {
    return LinComb(Key(a.str() + b.str()));
  }

  LinComb coproduct_on_key(const std::string& symbol, const Key& k) const override {
    if (symbol == "deconcat") return deconcatenation(k);
    return unshuffle(k.str());
  }

 private:
  // Proper splittings of the positions of w into two nonempty order-preserving blocks.
  static LinComb unshuffle(const std::string& w) {
    LinComb out;
    const std::size_t n = w.size();
    if (n > 30) throw std::length_error("unshuffle of a word longer than 30 letters");
    for (unsigned long mask = 1; mask + 1 < (1ul << n); ++mask) {
      std::string left, right;
      for (std::size_t i = 0; i < n; ++i) ((mask >> i) & 1ul ? left : right) += w[i];
      out.add(Key::tensor(Key(left), Key(right)), 1);
    }
    return out;
  }
};

// T̄(V) truncated above degree 2: every triple product vanishes.
class NilModel final : public WordModel {
 public:
  explicit NilModel(int alphabet) : WordModel(alphabet) {}

  std::string name() const override { return "nil"; }
  std::vector<std::string> products() const override { return {"mul"}; }
  std::vector<std::string> coproducts() const override { return {"delta"}; }

 protected:
  int max_word_length() const override { return 2; }

  LinComb product_on_keys(const std::string&, const Key& a, const Key& b) const override {
    if (a.str().size() + b.str().size() > 2) return {};
    return LinComb(Key(a.str() + b.str()));
  }
  LinComb coproduct_on_key(const std::string&, const Key& k) const override { return deconcatenation(k); }
};

// Zinbiel algebra on T̄(V): half-shuffle "left" keeps the first letter of the
// left argument first; "star" is the full shuffle a≺b + b≺a.
class ZinbModel final : public WordModel {
 public:
  explicit ZinbModel(int alphabet) : WordModel(alphabet) {}

  std::string name() const override { return "zinb"; }
  std::vector<std::string> products() const override { return {"left", "star"}; }
  std::vector<std::string> coproducts() const override { return {"deconcat"}; }

  Monomial monomial_of(const Key& k) const override {
    return Monomial::right_nested("left", static_cast<int>(k.str().size()));
  }

 protected:
  LinComb product_on_keys(const std::string& symbol, const Key& a, const Key& b) const override {
    if (symbol == "left") return half_shuffle(a.str(), b.str());
    return half_shuffle(a.str(), b.str()) + half_shuffle(b.str(), a.str());
  }
  LinComb coproduct_on_key(const std::string&, const Key& k) const override { return deconcatenation(k); }

 private:
  static LinComb half_shuffle(const std::string& u, const std::string& v) {
    LinComb out;
    for (auto& w : shuffles(std::string_view(u).substr(1), v)) out.add(Key(u.front() + w), 1);
    return out;
  }
};

}  // namespace bialg
