#pragma once

#include "bialg/rational.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bialg {

// Power series with rational coefficients a_0..a_N; products and compositions
// discard everything above t^N.
class TruncatedSeries {
 public:
  TruncatedSeries() : TruncatedSeries(1) {}
  explicit TruncatedSeries(int order) : coeffs_(check_order(order) + 1) {}
  TruncatedSeries(int order, const std::vector<Rational>& coeffs) : TruncatedSeries(order) {
    for (std::size_t i = 0; i < coeffs.size() && i < coeffs_.size(); ++i) coeffs_[i] = coeffs[i];
  }

  // The series t.
  static TruncatedSeries variable(int order) {
    TruncatedSeries s(order);
    if (order >= 1) s.coeffs_[1] = 1;
    return s;
  }
  static TruncatedSeries constant(int order, const Rational& c) {
    TruncatedSeries s(order);
    s.coeffs_[0] = c;
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
  Rational& operator[](int n) { return coeffs_.at(static_cast<std::size_t>(n)); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) {
    a.check_same_order(b);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
    return a;
  }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) {
    a.check_same_order(b);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] -= b.coeffs_[i];
    return a;
  }
  friend TruncatedSeries operator-(TruncatedSeries a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend TruncatedSeries operator*(const Rational& s, TruncatedSeries a) {
    for (auto& c : a.coeffs_) c *= s;
    return a;
  }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.check_same_order(b);
    TruncatedSeries out(a.order());
    const int N = a.order();
    for (int i = 0; i <= N; ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; i + j <= N; ++j) out[i + j] += a[i] * b[j];
    }
    return out;
  }
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  // f(-t)
  TruncatedSeries negate_argument() const {
    TruncatedSeries out = *this;
    for (int n = 1; n <= order(); n += 2) out[n] = -out[n];
    return out;
  }

  std::string str() const {
    std::string out;
    for (int n = 0; n <= order(); ++n) {
      if (coeffs_[static_cast<std::size_t>(n)] == 0) continue;
      if (!out.empty()) out += " + ";
      out += to_string(coeffs_[static_cast<std::size_t>(n)]);
      if (n > 0) out += n == 1 ? "*t" : "*t^" + std::to_string(n);
    }
    return out.empty() ? "0" : out;
  }

 private:
  static std::size_t check_order(int order) {
    if (order < 1) throw std::invalid_argument("series order must be at least 1");
    return static_cast<std::size_t>(order);
  }
  void check_same_order(const TruncatedSeries& b) const {
    if (order() != b.order()) throw std::invalid_argument("series orders differ");
  }

  std::vector<Rational> coeffs_;
};

namespace detail {
inline void require_no_constant(const TruncatedSeries& u, const char* what) {
  if (u[0] != 0) throw std::domain_error(std::string(what) + ": argument must have zero constant term");
}

// Σ_k w_k u^k for u without constant term.
inline TruncatedSeries substitute_weights(const std::vector<Rational>& w, const TruncatedSeries& u) {
  TruncatedSeries out(u.order());
  TruncatedSeries power = TruncatedSeries::constant(u.order(), 1);
  for (int k = 0; k <= u.order(); ++k) {
    if (k > 0) power = power * u;
    if (w[static_cast<std::size_t>(k)] != 0) out = out + w[static_cast<std::size_t>(k)] * power;
  }
  return out;
}
}  // namespace detail

// f(g(t)) by Horner's rule; g must have zero constant term.
inline TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g) {
  detail::require_no_constant(g, "compose");
  if (f.order() != g.order()) throw std::invalid_argument("series orders differ");
  const int N = f.order();
  TruncatedSeries out = TruncatedSeries::constant(N, f[N]);
  for (int k = N - 1; k >= 0; --k) out = out * g + TruncatedSeries::constant(N, f[k]);
  return out;
}

// √(1-u) through the binomial series.
inline TruncatedSeries sqrt1m(const TruncatedSeries& u) {
  detail::require_no_constant(u, "sqrt1m");
  std::vector<Rational> w(static_cast<std::size_t>(u.order()) + 1);
  Rational binom = 1;  // C(1/2, k) (-1)^k
  for (int k = 0; k <= u.order(); ++k) {
    if (k > 0) binom = binom * (Rational(1, 2) - (k - 1)) / k * -1;
    w[static_cast<std::size_t>(k)] = binom;
  }
  return detail::substitute_weights(w, u);
}

inline TruncatedSeries log1p(const TruncatedSeries& u) {
  detail::require_no_constant(u, "log1p");
  std::vector<Rational> w(static_cast<std::size_t>(u.order()) + 1);
  for (int k = 1; k <= u.order(); ++k) w[static_cast<std::size_t>(k)] = Rational(k % 2 == 1 ? 1 : -1, k);
  return detail::substitute_weights(w, u);
}

inline TruncatedSeries expm1(const TruncatedSeries& u) {
  detail::require_no_constant(u, "expm1");
  std::vector<Rational> w(static_cast<std::size_t>(u.order()) + 1);
  Rational fact = 1;
  for (int k = 1; k <= u.order(); ++k) {
    fact *= k;
    w[static_cast<std::size_t>(k)] = 1 / fact;
  }
  return detail::substitute_weights(w, u);
}

// c(t) = (1 - √(1-4t))/2 = t + t² + 2t³ + 5t⁴ + ...
inline TruncatedSeries catalan_series(int order) {
  TruncatedSeries four_t = Rational(4) * TruncatedSeries::variable(order);
  return Rational(1, 2) * (TruncatedSeries::constant(order, 1) - sqrt1m(four_t));
}

inline std::vector<std::string> series_names() {
  return {"As", "Com", "Dup", "Dup!", "Lie", "Mag", "Nil", "Sabinin"};
}

// Canonical spelling of a series name, matched case-insensitively.
inline std::string canonical_series_name(const std::string& name) {
  auto lower = [](std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
  };
  for (const auto& n : series_names())
    if (lower(n) == lower(name)) return n;
  throw std::invalid_argument("unknown series '" + name + "'");
}

// f^P(t) = Σ dim P(n)/n! tⁿ.
inline TruncatedSeries gen_series(const std::string& raw_name, int order) {
  const std::string name = canonical_series_name(raw_name);
  TruncatedSeries s(order);
  if (name == "As") {
    for (int n = 1; n <= order; ++n) s[n] = 1;
  } else if (name == "Com") {
    Rational fact = 1;
    for (int n = 1; n <= order; ++n) s[n] = 1 / (fact *= n);
  } else if (name == "Lie") {
    for (int n = 1; n <= order; ++n) s[n] = Rational(1, n);
  } else if (name == "Mag") {
    s = catalan_series(order);
  } else if (name == "Dup") {
    // c_n = C(2n, n)/(n+1)
    Integer c = 1;
    for (int n = 1; n <= order; ++n) {
      c = c * 2 * (2 * n - 1) / (n + 1);
      s[n] = Rational(c);
    }
  } else if (name == "Dup!") {
    for (int n = 1; n <= order; ++n) s[n] = n;
  } else if (name == "Nil") {
    s[1] = 1;
    if (order >= 2) s[2] = 1;
  } else {  // Sabinin
    s = log1p(catalan_series(order));
  }
  return s;
}

struct SeriesIdentityReport {
  bool holds = true;
  int order = 0;
  std::optional<int> first_mismatch;
  TruncatedSeries lhs, rhs;
};

namespace detail {
inline SeriesIdentityReport compare_series(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
  SeriesIdentityReport r{true, lhs.order(), std::nullopt, lhs, rhs};
  for (int n = 0; n <= lhs.order(); ++n)
    if (lhs[n] != rhs[n]) {
      r.holds = false;
      r.first_mismatch = n;
      break;
    }
  return r;
}
}  // namespace detail

// f^A(t) = f^C(f^P(t)).
inline SeriesIdentityReport check_triple_identity(const std::string& c, const std::string& a, const std::string& p, int order) {
  return detail::compare_series(gen_series(a, order), compose(gen_series(c, order), gen_series(p, order)));
}

// f^{P!}(-f^P(-t)) = t.
inline SeriesIdentityReport check_koszul_dual(const std::string& p, const std::string& pdual, int order) {
  auto inner = -gen_series(p, order).negate_argument();
  return detail::compare_series(compose(gen_series(pdual, order), inner), TruncatedSeries::variable(order));
}

}  // namespace bialg
