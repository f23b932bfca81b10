#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace bialg {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// "p/q", or "p" when q = 1. The backend keeps values canonical after arithmetic.
inline std::string to_string(const Rational& q) {
  auto num = boost::multiprecision::numerator(q);
  auto den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace detail {
inline bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}
}  // namespace detail

// Accepts "p", "p/q" with an optional sign; the result is in lowest terms.
inline Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  auto num_text = text.substr(0, slash);
  auto den_text = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!detail::is_integer_literal(num_text) || !detail::is_integer_literal(den_text) ||
      den_text.front() == '-' || den_text.front() == '+')
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  if (num_text.front() == '+') num_text.remove_prefix(1);
  Integer num(std::string{num_text});
  Integer den(std::string{den_text});
  if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  return Rational(num, den);
}

}  // namespace bialg
