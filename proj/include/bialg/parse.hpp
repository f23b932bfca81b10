#pragma once

#include "bialg/model.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace bialg {

namespace detail {
// A lone letter names the generator in every model, e.g. "x" for ".:x" in Mag.
inline Key parse_term_key(const BialgebraModel& model, const std::string& term) {
  if (term.size() == 1 && letter_chars.find(term[0]) != std::string_view::npos) {
    int i = letter_index(term[0]);
    if (i < model.alphabet()) return model.generator(i);
  }
  return model.parse_key(term);
}
}  // namespace detail

// Reads `c1*K1 + c2*K2 - K3` with rational ci; every key is validated by the model.
inline LinComb parse_element(const BialgebraModel& model, std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s += c;
  if (s.empty()) throw std::invalid_argument("empty element literal");

  LinComb out;
  std::size_t i = 0;
  while (i < s.size()) {
    Rational sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      if (s[i] == '-') sign = -1;
      ++i;
    } else if (i != 0) {
      throw std::invalid_argument("expected '+' or '-' in element literal at offset " + std::to_string(i));
    }
    std::size_t end = s.find_first_of("+-", i);
    std::string term = s.substr(i, end == std::string::npos ? std::string::npos : end - i);
    if (term.empty()) throw std::invalid_argument("missing term in element literal");
    Rational coeff = 1;
    if (auto star = term.find('*'); star != std::string::npos) {
      coeff = parse_rational(term.substr(0, star));
      term = term.substr(star + 1);
    }
    out.add(detail::parse_term_key(model, term), sign * coeff);
    i = end == std::string::npos ? s.size() : end;
  }
  return out;
}

// Inverse of parse_element: "K1 - 1/2*K2", or "0" for the zero element.
inline std::string format_element(const LinComb& v) {
  if (v.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : v) {
    Rational a = abs(c);
    if (out.empty()) out += c < 0 ? "-" : "";
    else out += c < 0 ? " - " : " + ";
    if (a != 1) out += to_string(a) + "*";
    out += k.str();
  }
  return out;
}

}  // namespace bialg
