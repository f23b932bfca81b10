#pragma once

#include "bialg/free_trees.hpp"
#include "bialg/linalg.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bialg {

// The duplicial bicomplex in one internal degree on the one-generator free
// Dup algebra. C_pq is spanned by (p+q+1)-tuples of trees of total degree n;
// the same tuple basis serves every (p,q) on an antidiagonal.
class Bicomplex {
 public:
  using Bidegree = std::pair<int, int>;

  explicit Bicomplex(int n) : n_(n), dup_(1) {
    if (n < 1) throw std::invalid_argument("internal degree must be at least 1");
    for (int m = 0; m < n; ++m) tuples_.emplace_back(std::make_shared<GradedBasis>(tuples_of_degree(m + 1, n)));
    for (int m = 0; m < n; ++m)
      for (int p = 0; p <= m; ++p) {
        const int q = m - p;
        if (p > 0) dh_.emplace(Bidegree{p, q}, merge_matrix(p, q, 0, p, "right"));
        if (q > 0) dv_.emplace(Bidegree{p, q}, merge_matrix(p, q, p, p + q, "left"));
      }
  }

  int internal_degree() const { return n_; }
  const GradedBasis& basis(int p, int q) const { return *tuples_.at(static_cast<std::size_t>(p + q)); }
  std::size_t dim(int p, int q) const { return basis(p, q).size(); }

  // d^h: C_pq -> C_{p-1,q} and d^v: C_pq -> C_{p,q-1}; zero matrices at the edges.
  Matrix dh(int p, int q) const { return p > 0 ? dh_.at({p, q}) : Matrix(0, dim(p, q)); }
  Matrix dv(int p, int q) const { return q > 0 ? dv_.at({p, q}) : Matrix(0, dim(p, q)); }

  std::size_t tot_dim(int m) const { return static_cast<std::size_t>(m + 1) * tuples_.at(static_cast<std::size_t>(m))->size(); }

  // d^h + d^v : Tot_m -> Tot_{m-1}, with summands ordered by p.
  Matrix total_differential(int m) const {
    if (m <= 0 || m >= n_) return Matrix(m > 0 ? tot_dim(m - 1) : 0, m < n_ ? tot_dim(m) : 0);
    const std::size_t src = dim(0, m), dst = dim(0, m - 1);
    Matrix out(tot_dim(m - 1), tot_dim(m));
    auto place = [&](const Matrix& block, int row_p, int col_p) {
      for (std::size_t i = 0; i < block.rows(); ++i)
        for (std::size_t j = 0; j < block.cols(); ++j)
          out(static_cast<std::size_t>(row_p) * dst + i, static_cast<std::size_t>(col_p) * src + j) = block(i, j);
    };
    for (int p = 0; p <= m; ++p) {
      if (p > 0) place(dh(p, m - p), p - 1, p);
      if (m - p > 0) place(dv(p, m - p), p, p);
    }
    return out;
  }

 private:
  // All k-tuples of one-generator Dup basis keys with total degree n.
  std::vector<Key> tuples_of_degree(int k, int n) const {
    std::vector<Key> out;
    std::vector<std::string> current;
    auto rec = [&](auto&& self, int remaining, int slots) -> void {
      if (slots == 0) {
        if (remaining == 0) out.push_back(Key::join(current));
        return;
      }
      for (int d = 1; d <= remaining - (slots - 1); ++d)
        for (const auto& key : dup_.basis(d)) {
          current.push_back(key.str());
          self(self, remaining - d, slots - 1);
          current.pop_back();
        }
    };
    rec(rec, n, k);
    std::sort(out.begin(), out.end());
    return out;
  }

  // Σ_{i=lo}^{hi-1} (-1)^i (..., a_i op a_{i+1}, ...)
  Matrix merge_matrix(int p, int q, int lo, int hi, const std::string& op) const {
    const auto& src = basis(p, q);
    const auto& dst = *tuples_.at(static_cast<std::size_t>(p + q - 1));
    Matrix out(dst.size(), src.size());
    for (std::size_t j = 0; j < src.size(); ++j) {
      auto factors = src.keys()[j].factors();
      for (int i = lo; i < hi; ++i) {
        auto u = static_cast<std::size_t>(i);
        LinComb merged = dup_.product(op, LinComb(Key(factors[u])), LinComb(Key(factors[u + 1])));
        for (const auto& [k, c] : merged) {
          std::vector<std::string> g(factors.begin(), factors.begin() + static_cast<std::ptrdiff_t>(u));
          g.push_back(k.str());
          g.insert(g.end(), factors.begin() + static_cast<std::ptrdiff_t>(u) + 2, factors.end());
          out(dst.index_of(Key::join(g)), j) += (i % 2 == 0 ? c : -c);
        }
      }
    }
    return out;
  }

  int n_;
  DupModel dup_;
  std::vector<BasisPtr> tuples_;
  std::map<Bidegree, Matrix> dh_, dv_;
};

struct DifferentialChecks {
  bool dh_squared_zero = true;
  bool dv_squared_zero = true;
  bool anticommute = true;
  bool all() const { return dh_squared_zero && dv_squared_zero && anticommute; }
};

inline DifferentialChecks check_differentials(const Bicomplex& b) {
  DifferentialChecks r;
  const int n = b.internal_degree();
  for (int m = 0; m < n; ++m)
    for (int p = 0; p <= m; ++p) {
      const int q = m - p;
      if (p >= 2 && !(b.dh(p - 1, q) * b.dh(p, q)).is_zero()) r.dh_squared_zero = false;
      if (q >= 2 && !(b.dv(p, q - 1) * b.dv(p, q)).is_zero()) r.dv_squared_zero = false;
      if (p >= 1 && q >= 1 && !(b.dh(p, q - 1) * b.dv(p, q) + b.dv(p - 1, q) * b.dh(p, q)).is_zero())
        r.anticommute = false;
    }
  return r;
}

struct HomologyReport {
  int internal_degree = 0;
  std::vector<std::size_t> tot_dims;
  std::vector<std::size_t> homology_dims;  // H_m(Tot) for m = 0..n-1, read as H_{m+1} of the Dup complex
  DifferentialChecks checks;
  long long euler_characteristic = 0;
};

inline HomologyReport total_homology(int n, bool compute_homology = true) {
  Bicomplex b(n);
  HomologyReport r;
  r.internal_degree = n;
  r.checks = check_differentials(b);
  for (int m = 0; m < n; ++m) {
    r.tot_dims.push_back(b.tot_dim(m));
    r.euler_characteristic += (m % 2 == 0 ? 1 : -1) * static_cast<long long>(b.tot_dim(m));
  }
  if (!compute_homology) return r;
  if (!r.checks.all()) throw std::logic_error("bicomplex differentials fail their identities");
  std::vector<std::size_t> ranks(static_cast<std::size_t>(n) + 1, 0);  // ranks[m] = rank(Tot_m -> Tot_{m-1})
  for (int m = 1; m < n; ++m) ranks[static_cast<std::size_t>(m)] = exact_rank(b.total_differential(m));
  for (int m = 0; m < n; ++m)
    r.homology_dims.push_back(b.tot_dim(m) - ranks[static_cast<std::size_t>(m)] - ranks[static_cast<std::size_t>(m) + 1]);
  return r;
}

inline std::vector<std::size_t> total_homology_dims(int n) { return total_homology(n).homology_dims; }

}  // namespace bialg
