#pragma once

#include "bialg/lincomb.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bialg {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return q == 0; });
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: inner dimensions differ");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (b(k, j) != 0) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    a.check_same_shape(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    a.check_same_shape(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }
  friend Matrix operator*(const Rational& s, Matrix a) {
    for (auto& q : a.data_) q *= s;
    return a;
  }
  friend bool operator==(const Matrix&, const Matrix&) = default;

  // Rows stacked vertically; column counts must agree.
  static Matrix stack(const std::vector<Matrix>& blocks, std::size_t cols) {
    std::size_t rows = 0;
    for (const auto& b : blocks) {
      if (b.cols_ != cols) throw std::invalid_argument("stack: column count mismatch");
      rows += b.rows_;
    }
    Matrix out(rows, cols);
    std::size_t r0 = 0;
    for (const auto& b : blocks) {
      std::copy(b.data_.begin(), b.data_.end(), out.data_.begin() + static_cast<std::ptrdiff_t>(r0 * cols));
      r0 += b.rows_;
    }
    return out;
  }

 private:
  void check_same_shape(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw std::invalid_argument("matrix shapes differ");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Row echelon form over the integers, produced by fraction-free (Bareiss)
// elimination after clearing each row's denominators.
struct Echelon {
  std::vector<std::vector<Integer>> rows;  // the nonzero pivot rows only
  std::vector<std::size_t> pivots;         // pivot column of each row
  std::size_t cols = 0;
};

inline Echelon fraction_free_echelon(const Matrix& m) {
  const std::size_t R = m.rows(), C = m.cols();
  std::vector<std::vector<Integer>> a(R, std::vector<Integer>(C));
  for (std::size_t i = 0; i < R; ++i) {
    Integer lcm = 1;
    for (std::size_t j = 0; j < C; ++j)
      if (m(i, j) != 0) lcm = boost::multiprecision::lcm(lcm, Integer(boost::multiprecision::denominator(m(i, j))));
    for (std::size_t j = 0; j < C; ++j)
      if (m(i, j) != 0)
        a[i][j] = boost::multiprecision::numerator(m(i, j)) * (lcm / boost::multiprecision::denominator(m(i, j)));
  }

  Echelon out;
  out.cols = C;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t p = r;
    while (p < R && a[p][c] == 0) ++p;
    if (p == R) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < R; ++i) {
      for (std::size_t j = c + 1; j < C; ++j) {
        Integer v = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        a[i][j] = v / prev;  // exact by Sylvester's identity
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    out.pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  out.rows = std::move(a);
  return out;
}

inline std::size_t exact_rank(const Matrix& m) { return fraction_free_echelon(m).pivots.size(); }

// Basis of {v : m v = 0}; one vector per free column, with a 1 in that column.
inline std::vector<std::vector<Rational>> kernel_basis(const Matrix& m) {
  const Echelon e = fraction_free_echelon(m);
  const std::size_t C = m.cols();
  std::vector<bool> is_pivot(C, false);
  for (auto p : e.pivots) is_pivot[p] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < C; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(C);
    v[f] = 1;
    for (std::size_t k = e.pivots.size(); k-- > 0;) {
      const auto& row = e.rows[k];
      Rational s = 0;
      for (std::size_t j = e.pivots[k] + 1; j < C; ++j)
        if (row[j] != 0 && v[j] != 0) s += Rational(row[j]) * v[j];
      v[e.pivots[k]] = -s / Rational(row[e.pivots[k]]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// Inverse of a square matrix by Gauss-Jordan over the rationals.
inline Matrix inverse(const Matrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("inverse of a non-square matrix");
  Matrix a = m, inv = Matrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) throw std::domain_error("matrix is singular");
    if (p != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(p, j), a(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    Rational s = 1 / a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) *= s;
      inv(c, j) *= s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

// An ordered basis of one graded component, shared between maps on that component.
class GradedBasis {
 public:
  explicit GradedBasis(std::vector<Key> keys) : keys_(std::move(keys)) {
    for (std::size_t i = 0; i < keys_.size(); ++i) index_.emplace(keys_[i], i);
    if (index_.size() != keys_.size()) throw std::invalid_argument("duplicate key in graded basis");
  }

  const std::vector<Key>& keys() const { return keys_; }
  std::size_t size() const { return keys_.size(); }

  std::size_t index_of(const Key& k) const {
    auto it = index_.find(k);
    if (it == index_.end()) throw std::out_of_range("key '" + k.str() + "' not in basis");
    return it->second;
  }
  bool contains(const Key& k) const { return index_.count(k) != 0; }

  std::vector<Rational> coordinates(const LinComb& v) const {
    std::vector<Rational> out(keys_.size());
    for (const auto& [k, c] : v) out[index_of(k)] = c;
    return out;
  }

  LinComb vector(const std::vector<Rational>& coords) const {
    LinComb out;
    for (std::size_t i = 0; i < coords.size(); ++i) out.add(keys_[i], coords[i]);
    return out;
  }

  friend bool operator==(const GradedBasis& a, const GradedBasis& b) { return a.keys_ == b.keys_; }

 private:
  std::vector<Key> keys_;
  std::map<Key, std::size_t> index_;
};

using BasisPtr = std::shared_ptr<const GradedBasis>;

// Degreewise endomorphism of a graded based space; column j of the degree-n
// matrix is the image of the j-th basis key of that degree.
class GradedEndo {
 public:
  struct Component {
    BasisPtr basis;
    Matrix matrix;
  };

  GradedEndo() = default;

  static GradedEndo zero(const std::map<int, BasisPtr>& bases) {
    GradedEndo e;
    for (const auto& [n, b] : bases) e.comps_.emplace(n, Component{b, Matrix(b->size(), b->size())});
    return e;
  }
  static GradedEndo identity(const std::map<int, BasisPtr>& bases) {
    GradedEndo e;
    for (const auto& [n, b] : bases) e.comps_.emplace(n, Component{b, Matrix::identity(b->size())});
    return e;
  }

  // Builds the map from its action on basis keys.
  template <class F>
  static GradedEndo from_function(const std::map<int, BasisPtr>& bases, F&& f) {
    GradedEndo e;
    for (const auto& [n, b] : bases) {
      Matrix m(b->size(), b->size());
      for (std::size_t j = 0; j < b->size(); ++j) {
        LinComb image = f(b->keys()[j]);
        for (const auto& [k, c] : image) m(b->index_of(k), j) = c;
      }
      e.comps_.emplace(n, Component{b, std::move(m)});
    }
    return e;
  }

  void set(int degree, BasisPtr basis, Matrix m) {
    if (m.rows() != basis->size() || m.cols() != basis->size())
      throw std::invalid_argument("matrix does not match basis in degree " + std::to_string(degree));
    comps_[degree] = Component{std::move(basis), std::move(m)};
  }

  bool has_degree(int n) const { return comps_.count(n) != 0; }
  const Component& at(int n) const {
    auto it = comps_.find(n);
    if (it == comps_.end()) throw std::out_of_range("degree " + std::to_string(n) + " not covered");
    return it->second;
  }
  const Matrix& matrix(int n) const { return at(n).matrix; }
  const GradedBasis& basis(int n) const { return *at(n).basis; }
  std::vector<int> degrees() const {
    std::vector<int> out;
    for (const auto& [n, c] : comps_) out.push_back(n);
    return out;
  }
  std::map<int, BasisPtr> bases() const {
    std::map<int, BasisPtr> out;
    for (const auto& [n, c] : comps_) out.emplace(n, c.basis);
    return out;
  }

  LinComb apply_key(int degree, const Key& k) const {
    const auto& c = at(degree);
    std::size_t j = c.basis->index_of(k);
    LinComb out;
    for (std::size_t i = 0; i < c.basis->size(); ++i) out.add(c.basis->keys()[i], c.matrix(i, j));
    return out;
  }

  LinComb apply(int degree, const LinComb& v) const {
    const auto& c = at(degree);
    auto x = c.basis->coordinates(v);
    std::vector<Rational> y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = 0; j < x.size(); ++j)
        if (x[j] != 0 && c.matrix(i, j) != 0) y[i] += c.matrix(i, j) * x[j];
    return c.basis->vector(y);
  }

  // (this ∘ g): apply g first.
  GradedEndo compose(const GradedEndo& g) const { return combine(g, [](const Matrix& a, const Matrix& b) { return a * b; }); }

  friend GradedEndo operator+(const GradedEndo& a, const GradedEndo& b) {
    return a.combine(b, [](const Matrix& x, const Matrix& y) { return x + y; });
  }
  friend GradedEndo operator-(const GradedEndo& a, const GradedEndo& b) {
    return a.combine(b, [](const Matrix& x, const Matrix& y) { return x - y; });
  }
  friend GradedEndo operator*(const Rational& s, GradedEndo a) {
    for (auto& [n, c] : a.comps_) c.matrix = s * c.matrix;
    return a;
  }
  friend bool operator==(const GradedEndo& a, const GradedEndo& b) {
    if (a.comps_.size() != b.comps_.size()) return false;
    for (const auto& [n, c] : a.comps_) {
      auto it = b.comps_.find(n);
      if (it == b.comps_.end() || !(*c.basis == *it->second.basis) || !(c.matrix == it->second.matrix)) return false;
    }
    return true;
  }

  std::size_t rank(int n) const { return exact_rank(matrix(n)); }

 private:
  template <class Op>
  GradedEndo combine(const GradedEndo& g, Op op) const {
    if (comps_.size() != g.comps_.size()) throw std::invalid_argument("graded maps cover different degrees");
    GradedEndo out;
    for (const auto& [n, c] : comps_) {
      auto it = g.comps_.find(n);
      if (it == g.comps_.end() || !(*c.basis == *it->second.basis))
        throw std::invalid_argument("gradings disagree in degree " + std::to_string(n));
      out.comps_.emplace(n, Component{c.basis, op(c.matrix, it->second.matrix)});
    }
    return out;
  }

  std::map<int, Component> comps_;
};

// Span of a family of vectors: rank and membership.
inline std::size_t span_rank(const GradedBasis& basis, const std::vector<LinComb>& vectors) {
  Matrix m(vectors.size(), basis.size());
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (const auto& [k, c] : vectors[i]) m(i, basis.index_of(k)) = c;
  return exact_rank(m);
}

// Whether the two families span the same subspace.
inline bool same_span(const GradedBasis& basis, const std::vector<LinComb>& a, const std::vector<LinComb>& b) {
  auto ra = span_rank(basis, a);
  auto rb = span_rank(basis, b);
  if (ra != rb) return false;
  auto both = a;
  both.insert(both.end(), b.begin(), b.end());
  return span_rank(basis, both) == ra;
}

// Columns of a matrix as vectors in the given basis.
inline std::vector<LinComb> columns(const GradedBasis& basis, const Matrix& m) {
  std::vector<LinComb> out;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    LinComb v;
    for (std::size_t i = 0; i < m.rows(); ++i) v.add(basis.keys()[i], m(i, j));
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace bialg
