#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bialg {

// Letters are single characters: x, y, z first, then the rest of the alphabet.
inline constexpr std::string_view letter_chars = "xyzabcdefghijklmnopqrstuvw";

inline char letter(int i) {
  if (i < 0 || i >= static_cast<int>(letter_chars.size())) throw std::out_of_range("letter index out of range");
  return letter_chars[static_cast<std::size_t>(i)];
}

inline int letter_index(char c) {
  auto pos = letter_chars.find(c);
  if (pos == std::string_view::npos) throw std::invalid_argument(std::string("unknown letter '") + c + "'");
  return static_cast<int>(pos);
}

inline void check_word(std::string_view w, int alphabet) {
  if (w.empty()) throw std::invalid_argument("empty word");
  for (char c : w)
    if (letter_index(c) >= alphabet)
      throw std::invalid_argument("word '" + std::string(w) + "' leaves the alphabet of size " + std::to_string(alphabet));
}

// All words of length n, sorted as strings.
inline std::vector<std::string> words(int alphabet, int n) {
  std::vector<std::string> out{""};
  for (int i = 0; i < n; ++i) {
    std::vector<std::string> next;
    next.reserve(out.size() * static_cast<std::size_t>(alphabet));
    for (const auto& w : out)
      for (int a = 0; a < alphabet; ++a) next.push_back(w + letter(a));
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// All interleavings of u and v, with multiplicity.
inline std::vector<std::string> shuffles(std::string_view u, std::string_view v) {
  if (u.empty()) return {std::string(v)};
  if (v.empty()) return {std::string(u)};
  std::vector<std::string> out;
  for (auto& w : shuffles(u.substr(1), v)) out.push_back(u.front() + w);
  for (auto& w : shuffles(u, v.substr(1))) out.push_back(v.front() + w);
  return out;
}

}  // namespace bialg
