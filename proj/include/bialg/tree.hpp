#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bialg {

// Planar binary rooted tree, held in its canonical serialization:
// TREE := "." | "(" TREE "," TREE ")".
class Tree {
 public:
  Tree() : text_(".") {}

  static Tree leaf() { return Tree(); }

  static Tree parse(std::string_view text) {
    std::size_t pos = 0;
    if (!scan(text, pos) || pos != text.size())
      throw std::invalid_argument("malformed tree: '" + std::string(text) + "'");
    return Tree(std::string(text));
  }

  static Tree node(const Tree& l, const Tree& r) { return Tree("(" + l.text_ + "," + r.text_ + ")"); }

  bool is_leaf() const { return text_.size() == 1; }
  std::size_t leaf_count() const {
    std::size_t n = 0;
    for (char c : text_) n += c == '.';
    return n;
  }
  const std::string& str() const { return text_; }

  // (left subtree, right subtree) of a non-leaf tree.
  std::pair<Tree, Tree> split() const {
    if (is_leaf()) throw std::domain_error("split of a leaf");
    int depth = 0;
    for (std::size_t i = 1; i + 1 < text_.size(); ++i) {
      char c = text_[i];
      if (c == '(') ++depth;
      else if (c == ')') --depth;
      else if (c == ',' && depth == 0)
        return {Tree(text_.substr(1, i - 1)), Tree(text_.substr(i + 1, text_.size() - i - 2))};
    }
    throw std::logic_error("corrupt tree '" + text_ + "'");
  }

  friend auto operator<=>(const Tree&, const Tree&) = default;

 private:
  explicit Tree(std::string text) : text_(std::move(text)) {}

  static bool scan(std::string_view s, std::size_t& pos) {
    if (pos >= s.size()) return false;
    if (s[pos] == '.') { ++pos; return true; }
    if (s[pos] != '(') return false;
    ++pos;
    if (!scan(s, pos) || pos >= s.size() || s[pos] != ',') return false;
    ++pos;
    if (!scan(s, pos) || pos >= s.size() || s[pos] != ')') return false;
    ++pos;
    return true;
  }

  std::string text_;
};

inline Tree vee(const Tree& t, const Tree& s) { return Tree::node(t, s); }

// t/s: t grafted on the first leaf of s.
inline Tree over(const Tree& t, const Tree& s) {
  std::string out = s.str();
  out.replace(out.find('.'), 1, t.str());
  return Tree::parse(out);
}

// t\s: s grafted on the last leaf of t.
inline Tree under(const Tree& t, const Tree& s) {
  std::string out = t.str();
  out.replace(out.rfind('.'), 1, s.str());
  return Tree::parse(out);
}

inline Tree corolla() { return vee(Tree::leaf(), Tree::leaf()); }

// comb^l_1 = Y, comb^l_n = Y / comb^l_{n-1}; n internal nodes on the leftmost branch.
inline Tree left_comb(int n) {
  if (n < 1) throw std::invalid_argument("left_comb needs n >= 1");
  Tree t = corolla();
  for (int i = 1; i < n; ++i) t = over(corolla(), t);
  return t;
}

inline Tree right_comb(int n) {
  if (n < 1) throw std::invalid_argument("right_comb needs n >= 1");
  Tree t = corolla();
  for (int i = 1; i < n; ++i) t = under(t, corolla());
  return t;
}

// Left-to-right mirror image.
inline Tree mirror(const Tree& t) {
  if (t.is_leaf()) return t;
  auto [l, r] = t.split();
  return vee(mirror(r), mirror(l));
}

namespace detail {
inline std::vector<std::string> trees_with_leaves(int n) {
  if (n == 1) return {"."};
  std::vector<std::string> out;
  for (int k = 1; k < n; ++k)
    for (const auto& l : trees_with_leaves(k))
      for (const auto& r : trees_with_leaves(n - k)) out.push_back("(" + l + "," + r + ")");
  return out;
}
}  // namespace detail

// All trees with n leaves in the canonical (lexicographic) order.
inline std::vector<Tree> enumerate_trees(int leaves) {
  if (leaves < 1) throw std::invalid_argument("enumerate needs at least one leaf");
  auto strings = detail::trees_with_leaves(leaves);
  std::sort(strings.begin(), strings.end());
  std::vector<Tree> out;
  out.reserve(strings.size());
  for (auto& s : strings) out.push_back(Tree::parse(s));
  return out;
}

namespace detail {
// Cuts t along the path from leaf i (0-based) to the root. Leaf i itself
// becomes the last leaf of the left part and the first leaf of the right part.
inline std::pair<Tree, Tree> cut_at(const Tree& t, std::size_t i) {
  if (t.is_leaf()) return {Tree::leaf(), Tree::leaf()};
  auto [l, r] = t.split();
  std::size_t a = l.leaf_count();
  if (i < a) {
    auto [rl, sl] = cut_at(l, i);
    return {rl, vee(sl, r)};
  }
  auto [rr, sr] = cut_at(r, i - a);
  return {vee(l, rr), sr};
}
}  // namespace detail

// Leaves numbered 0..n; valid interior cuts are 1..n-1.
inline std::pair<Tree, Tree> path_cut(const Tree& t, int i) {
  int n = static_cast<int>(t.leaf_count()) - 1;
  if (i < 1 || i > n - 1)
    throw std::out_of_range("cut index " + std::to_string(i) + " outside 1.." + std::to_string(n - 1) +
                            " for tree '" + t.str() + "'");
  return detail::cut_at(t, static_cast<std::size_t>(i));
}

}  // namespace bialg
