#pragma once

#include "bialg/model.hpp"
#include "bialg/tree.hpp"
#include "bialg/words.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bialg {

// Basis keys of the form "TREE:WORD".
struct DecoratedTree {
  Tree tree;
  std::string word;

  Key key() const { return Key(tree.str() + ":" + word); }

  static DecoratedTree from(const Key& k) {
    const auto& s = k.str();
    auto colon = s.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("expected TREE:WORD, got '" + s + "'");
    return {Tree::parse(std::string_view(s).substr(0, colon)), s.substr(colon + 1)};
  }
};

// Shared plumbing for the magmatic (n leaves, n letters) and duplicial
// (n+1 leaves, n letters) models.
class TreeWordModel : public BialgebraModel {
 public:
  using BialgebraModel::BialgebraModel;

  std::vector<Key> basis(int degree) const override {
    std::vector<Key> out;
    if (degree < 1) return out;
    for (const auto& t : enumerate_trees(degree + leaf_offset()))
      for (auto& w : words(alphabet(), degree)) out.push_back(DecoratedTree{t, w}.key());
    std::sort(out.begin(), out.end());
    return out;
  }

  int degree(const Key& k) const override {
    auto colon = k.str().find(':');
    return static_cast<int>(k.str().size() - colon - 1);
  }

  Key parse_key(std::string_view text) const override {
    auto colon = text.find(':');
    if (colon == std::string_view::npos) throw std::invalid_argument("expected TREE:WORD, got '" + std::string(text) + "'");
    auto t = Tree::parse(text.substr(0, colon));
    auto w = text.substr(colon + 1);
    check_word(w, alphabet());
    if (static_cast<int>(t.leaf_count()) != static_cast<int>(w.size()) + leaf_offset())
      throw std::invalid_argument("leaf count of '" + t.str() + "' does not fit word '" + std::string(w) + "'");
    return DecoratedTree{t, std::string(w)}.key();
  }

  std::string letters_of(const Key& k) const override { return DecoratedTree::from(k).word; }

 protected:
  virtual int leaf_offset() const = 0;

  // Builds the key for tree t carrying the prefix of length deg(t) of word.
  DecoratedTree piece(const Tree& t, const std::string& word, std::size_t start) const {
    auto len = t.leaf_count() - static_cast<std::size_t>(leaf_offset());
    return {t, word.substr(start, len)};
  }
};

// Free magmatic algebra: (t;u)·(s;w) = (t∨s; uw).
class MagModel final : public TreeWordModel {
 public:
  explicit MagModel(int alphabet) : TreeWordModel(alphabet) {}

  std::string name() const override { return "mag"; }
  std::vector<std::string> products() const override { return {"mul"}; }
  std::vector<std::string> coproducts() const override { return {"dual", "livernet", "hopf"}; }
  Key generator(int i) const override { return DecoratedTree{Tree::leaf(), std::string(1, letter(i))}.key(); }

  Monomial monomial_of(const Key& k) const override { return shape(DecoratedTree::from(k).tree); }

 protected:
  int leaf_offset() const override { return 0; }

  LinComb product_on_keys(const std::string&, const Key& a, const Key& b) const override {
    auto x = DecoratedTree::from(a), y = DecoratedTree::from(b);
    return LinComb(DecoratedTree{vee(x.tree, y.tree), x.word + y.word}.key());
  }

  LinComb coproduct_on_key(const std::string& symbol, const Key& k) const override {
    auto d = DecoratedTree::from(k);
    if (d.tree.is_leaf()) return {};
    auto [l, r] = d.tree.split();
    LinComb a(piece(l, d.word, 0).key());
    LinComb b(piece(r, d.word, l.leaf_count()).key());
    if (symbol == "dual") return tensor(a, b);
    if (symbol == "livernet") return livernet(a, b);
    return hopf(a, b);
  }

 private:
  static Monomial shape(const Tree& t) {
    if (t.is_leaf()) return Monomial::input();
    auto [l, r] = t.split();
    return Monomial::apply("mul", shape(l), shape(r));
  }

  // δ(a·b) = a⊗b + a1⊗a2·b + a1·b⊗a2
  LinComb livernet(const LinComb& a, const LinComb& b) const {
    LinComb out = tensor(a, b);
    for (const auto& [k, c] : coproduct("livernet", a)) {
      auto f = k.factors();
      LinComb a1(Key{f[0]}), a2(Key{f[1]});
      out.add(tensor(a1, product("mul", a2, b)), c);
      out.add(tensor(product("mul", a1, b), a2), c);
    }
    return out;
  }

  // Seven-term nonunital Hopf relation.
  LinComb hopf(const LinComb& a, const LinComb& b) const {
    LinComb out = tensor(a, b) + tensor(b, a);
    LinComb da = coproduct("hopf", a), db = coproduct("hopf", b);
    for (const auto& [k, c] : da) {
      auto f = k.factors();
      LinComb a1(Key{f[0]}), a2(Key{f[1]});
      out.add(tensor(a1, product("mul", a2, b)), c);
      out.add(tensor(product("mul", a1, b), a2), c);
    }
    for (const auto& [k, c] : db) {
      auto f = k.factors();
      LinComb b1(Key{f[0]}), b2(Key{f[1]});
      out.add(tensor(product("mul", a, b1), b2), c);
      out.add(tensor(b1, product("mul", a, b2)), c);
    }
    for (const auto& [ka, ca] : da)
      for (const auto& [kb, cb] : db) {
        auto fa = ka.factors(), fb = kb.factors();
        out.add(tensor(product("mul", LinComb(Key(fa[0])), LinComb(Key(fb[0]))),
                       product("mul", LinComb(Key(fa[1])), LinComb(Key(fb[1])))),
                ca * cb);
      }
    return out;
  }
};

// Free duplicial algebra on trees with n+1 leaves.
// x≺y = x\y (Under) and x≻y = x/y (Over); with this choice the middle
// relation (x≻y)≺z = x≻(y≺z) is the tree identity (t/s)\u = t/(s\u).
class DupModel final : public TreeWordModel {
 public:
  explicit DupModel(int alphabet) : TreeWordModel(alphabet) {}

  std::string name() const override { return "dup"; }
  std::vector<std::string> products() const override { return {"left", "right"}; }
  std::vector<std::string> coproducts() const override { return {"delta", "delta_left", "delta_right"}; }
  Key generator(int i) const override { return DecoratedTree{corolla(), std::string(1, letter(i))}.key(); }

  // t = t^l ≻ Y ≺ t^r.
  Monomial monomial_of(const Key& k) const override { return shape(DecoratedTree::from(k).tree); }

 protected:
  int leaf_offset() const override { return 1; }

  LinComb product_on_keys(const std::string& symbol, const Key& a, const Key& b) const override {
    auto x = DecoratedTree::from(a), y = DecoratedTree::from(b);
    Tree t = symbol == "left" ? under(x.tree, y.tree) : over(x.tree, y.tree);
    return LinComb(DecoratedTree{t, x.word + y.word}.key());
  }

  LinComb coproduct_on_key(const std::string& symbol, const Key& k) const override {
    auto d = DecoratedTree::from(k);
    LinComb out;
    if (symbol == "delta") {
      int n = static_cast<int>(d.word.size());
      for (int i = 1; i <= n - 1; ++i) {
        auto [r, s] = path_cut(d.tree, i);
        out.add(Key::tensor(piece(r, d.word, 0).key(), piece(s, d.word, static_cast<std::size_t>(i)).key()), 1);
      }
      return out;
    }
    for (auto& [t1, t2] : symbol == "delta_left" ? under_factorizations(d.tree) : over_factorizations(d.tree))
      out.add(Key::tensor(piece(t1, d.word, 0).key(), piece(t2, d.word, t1.leaf_count() - 1).key()), 1);
    return out;
  }

 private:
  static Monomial shape(const Tree& t) {
    auto [l, r] = t.split();
    Monomial m = Monomial::input();
    if (!l.is_leaf()) m = Monomial::apply("right", shape(l), std::move(m));
    if (!r.is_leaf()) m = Monomial::apply("left", std::move(m), shape(r));
    return m;
  }

  // All t = t1\t2 with t1, t2 not leaves: t2 is a proper subtree on the right edge.
  static std::vector<std::pair<Tree, Tree>> under_factorizations(const Tree& t) {
    std::vector<std::pair<Tree, Tree>> out;
    if (t.is_leaf()) return out;
    auto [l, r] = t.split();
    if (r.is_leaf()) return out;
    out.emplace_back(vee(l, Tree::leaf()), r);
    for (auto& [a, b] : under_factorizations(r)) out.emplace_back(vee(l, a), b);
    return out;
  }

  // All t = t1/t2 with t1, t2 not leaves: t1 is a proper subtree on the left edge.
  static std::vector<std::pair<Tree, Tree>> over_factorizations(const Tree& t) {
    std::vector<std::pair<Tree, Tree>> out;
    if (t.is_leaf()) return out;
    auto [l, r] = t.split();
    if (l.is_leaf()) return out;
    out.emplace_back(l, vee(Tree::leaf(), r));
    for (auto& [a, b] : over_factorizations(l)) out.emplace_back(a, vee(b, r));
    return out;
  }
};

}  // namespace bialg
