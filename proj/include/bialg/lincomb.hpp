#pragma once

#include "bialg/rational.hpp"

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bialg {

// A basis key is stored in its serialized form. Tensor factors are joined by
// '|', so the total order on keys is the lexicographic order on that string.
class Key {
 public:
  static constexpr char separator = '|';

  Key() = default;
  explicit Key(std::string text) : text_(std::move(text)) {}

  static Key tensor(const Key& a, const Key& b) {
    return Key(a.text_ + separator + b.text_);
  }

  static Key join(const std::vector<std::string>& factors) {
    std::string out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) out += separator;
      out += factors[i];
    }
    return Key(std::move(out));
  }

  const std::string& str() const { return text_; }

  std::size_t arity() const {
    std::size_t n = 1;
    for (char c : text_) n += c == separator;
    return n;
  }

  std::vector<std::string> factors() const {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
      auto pos = text_.find(separator, start);
      out.push_back(text_.substr(start, pos - start));
      if (pos == std::string::npos) break;
      start = pos + 1;
    }
    return out;
  }

  friend auto operator<=>(const Key&, const Key&) = default;

 private:
  std::string text_;
};

// Finite formal sum of keys with rational coefficients; never stores a zero.
class LinComb {
 public:
  using Terms = std::map<Key, Rational>;

  LinComb() = default;
  explicit LinComb(const Key& k, Rational c = 1) { add(k, std::move(c)); }
  LinComb(std::initializer_list<std::pair<Key, Rational>> terms) {
    for (const auto& [k, c] : terms) add(k, c);
  }

  static LinComb of(std::string_view key, Rational c = 1) { return LinComb(Key(std::string(key)), std::move(c)); }

  void add(const Key& k, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add(const LinComb& other, const Rational& scale = 1) {
    if (scale == 0) return;
    for (const auto& [k, c] : other.terms_) add(k, c * scale);
  }

  Rational coefficient(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  LinComb& operator+=(const LinComb& o) { add(o); return *this; }
  LinComb& operator-=(const LinComb& o) { add(o, Rational(-1)); return *this; }
  LinComb& operator*=(const Rational& s) {
    if (s == 0) { terms_.clear(); return *this; }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator-(LinComb a) { return a *= Rational(-1); }
  friend LinComb operator*(const Rational& s, LinComb a) { return a *= s; }
  friend LinComb operator*(LinComb a, const Rational& s) { return a *= s; }
  friend bool operator==(const LinComb&, const LinComb&) = default;

 private:
  Terms terms_;
};

inline LinComb tensor(const LinComb& a, const LinComb& b) {
  LinComb out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) out.add(Key::tensor(ka, kb), ca * cb);
  return out;
}

// Reorders the tensor factors of every key: output slot i receives input slot perm[i].
inline LinComb permute_factors(const LinComb& a, const std::vector<std::size_t>& perm) {
  LinComb out;
  for (const auto& [k, c] : a) {
    auto f = k.factors();
    if (f.size() != perm.size())
      throw std::invalid_argument("permutation of size " + std::to_string(perm.size()) +
                                  " applied to key '" + k.str() + "'");
    std::vector<std::string> g(f.size());
    for (std::size_t i = 0; i < perm.size(); ++i) g[i] = f.at(perm[i]);
    out.add(Key::join(g), c);
  }
  return out;
}

inline LinComb transpose(const LinComb& a) {
  for (const auto& [k, c] : a)
    if (k.arity() != 2) throw std::invalid_argument("transpose of non-pair key '" + k.str() + "'");
  return permute_factors(a, {1, 0});
}

// Applies a linear map to the factor at `slot` of every tensor key.
template <class F>
LinComb map_factor(const LinComb& a, std::size_t slot, F&& f) {
  LinComb out;
  for (const auto& [k, c] : a) {
    auto factors = k.factors();
    LinComb image = f(Key(factors.at(slot)));
    for (const auto& [ki, ci] : image) {
      auto g = factors;
      g[slot] = ki.str();
      out.add(Key::join(g), c * ci);
    }
  }
  return out;
}

// Applies f to each factor simultaneously and multiplies out: (f⊗f⊗...⊗f)(a).
template <class F>
LinComb map_each_factor(const LinComb& a, F&& f) {
  LinComb out;
  for (const auto& [k, c] : a) {
    LinComb acc;
    bool first = true;
    for (const auto& factor : k.factors()) {
      LinComb image = f(Key(factor));
      acc = first ? image : tensor(acc, image);
      first = false;
      if (acc.empty()) break;
    }
    out.add(acc, c);
  }
  return out;
}

}  // namespace bialg
