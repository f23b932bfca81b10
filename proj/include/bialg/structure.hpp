#pragma once

#include "bialg/idempotents.hpp"
#include "bialg/linalg.hpp"
#include "bialg/types.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bialg {

// Matrix of a linear map on the degree-n basis; rows are indexed by the keys
// that occur in the images, in key order.
inline Matrix map_matrix(const std::vector<Key>& domain, const std::vector<LinComb>& images) {
  std::map<Key, std::size_t> rows;
  for (const auto& img : images)
    for (const auto& [k, c] : img) rows.emplace(k, 0);
  std::size_t r = 0;
  for (auto& [k, i] : rows) i = r++;
  Matrix m(rows.size(), domain.size());
  for (std::size_t j = 0; j < images.size(); ++j)
    for (const auto& [k, c] : images[j]) m(rows.at(k), j) = c;
  return m;
}

// Common kernel of the type's generating coproducts in degree n.
inline std::vector<LinComb> primitive_part(const BialgebraType& type, int n) {
  const auto& m = *type.model;
  auto keys = m.basis(n);
  std::vector<Matrix> blocks;
  for (const auto& delta : type.coproducts) {
    std::vector<LinComb> images;
    for (const auto& k : keys) images.push_back(m.coproduct(delta, LinComb(k)));
    blocks.push_back(map_matrix(keys, images));
  }
  Matrix stacked = Matrix::stack(blocks, keys.size());
  GradedBasis basis(keys);
  std::vector<LinComb> out;
  for (const auto& v : kernel_basis(stacked)) out.push_back(basis.vector(v));
  return out;
}

struct H2Degree {
  int degree = 0;
  std::size_t dim_a = 0, dim_c = 0, rank = 0;
  std::string verdict;
};

struct H2Report {
  std::string type;
  std::string verdict;  // "iso", "epi-with-splitting", "fail" or "unsupported cooperad"
  std::string splitting;
  std::vector<H2Degree> degrees;
};

// φ∘s on the designated splitting monomial; equals [1] when s splits φ.
inline Matrix phi_after_splitting(const BialgebraType& type, const PhiMatrix& phi, int n) {
  auto one = type.make_model(1);
  std::vector<LinComb> gens(static_cast<std::size_t>(n), LinComb(one->generator(0)));
  LinComb image;
  for (const auto& wm : type.splitting(n)) image.add(one->evaluate(wm.monomial, gens), wm.coeff);
  GradedBasis cols(phi.columns);
  auto coords = cols.coordinates(image);
  Matrix v(coords.size(), 1);
  for (std::size_t i = 0; i < coords.size(); ++i) v(i, 0) = coords[i];
  return phi.matrix * v;
}

inline H2Report check_h2(const BialgebraType& type, int max_degree) {
  H2Report report;
  report.type = type.name;
  report.splitting = type.splitting_name;
  if (type.cooperad == CooperadKind::Cocommutative) {
    report.verdict = "unsupported cooperad";
    return report;
  }
  bool any_epi = false, any_fail = false;
  for (int n = 1; n <= max_degree; ++n) {
    H2Degree d;
    d.degree = n;
    if (n == 1) {
      d.dim_a = d.dim_c = d.rank = 1;
      d.verdict = "iso";
    } else {
      auto phi = phi_map(type, n);
      d.dim_a = phi.columns.size();
      d.dim_c = phi.row_coops.size();
      d.rank = exact_rank(phi.matrix);
      if (d.dim_a == d.dim_c && d.rank == d.dim_a) {
        d.verdict = "iso";
      } else if (d.rank == d.dim_c && type.splitting &&
                 phi_after_splitting(type, phi, n) == Matrix::identity(d.dim_c)) {
        d.verdict = "epi-with-splitting";
        any_epi = true;
      } else {
        d.verdict = "fail";
        any_fail = true;
      }
    }
    report.degrees.push_back(d);
  }
  report.verdict = any_fail ? "fail" : any_epi ? "epi-with-splitting" : "iso";
  return report;
}

struct StructureIsoRow {
  int degree = 0;
  Integer dim_a, composite;
  std::size_t dim_prim = 0;
};

struct StructureIsoReport {
  std::string type;
  bool holds = true;
  std::vector<StructureIsoRow> rows;
};

// dim A_n against dim (C^c ∘ Prim)_n. Nonsymmetric types are counted on one
// generator; the classical type on its working alphabet, where C^c(Prim) is
// the symmetric algebra on the graded space Prim.
inline StructureIsoReport verify_structure_iso(const BialgebraType& type, int max_degree) {
  StructureIsoReport report;
  report.type = type.name;
  const bool symmetric = type.cooperad == CooperadKind::Cocommutative;
  BialgebraType counting = symmetric ? type : make_type(type.name, 1);
  std::vector<Integer> prim(static_cast<std::size_t>(max_degree) + 1), a(prim.size()), c(prim.size());
  for (int n = 1; n <= max_degree; ++n) {
    prim[static_cast<std::size_t>(n)] = primitive_part(counting, n).size();
    a[static_cast<std::size_t>(n)] = counting.model->basis(n).size();
    c[static_cast<std::size_t>(n)] = type.cooperad == CooperadKind::DualBasis ? a[static_cast<std::size_t>(n)] : Integer(1);
  }

  std::vector<Integer> composite(prim.size());
  if (symmetric) {
    // Π_d (1 - t^d)^{-P_d}
    composite[0] = 1;
    for (int d = 1; d <= max_degree; ++d) {
      std::vector<Integer> next(prim.size());
      for (int n = 0; n <= max_degree; ++n) {
        Integer binom = 1;  // C(P_d + j - 1, j)
        for (int j = 0; n + j * d <= max_degree; ++j) {
          if (j > 0) binom = binom * (prim[static_cast<std::size_t>(d)] + j - 1) / j;
          next[static_cast<std::size_t>(n + j * d)] += composite[static_cast<std::size_t>(n)] * binom;
        }
      }
      composite = next;
    }
  } else {
    // tuples[k][n]: ordered k-tuples of primitive basis elements of total degree n
    std::vector<std::vector<Integer>> tuples(prim.size(), std::vector<Integer>(prim.size()));
    tuples[0][0] = 1;
    for (int k = 1; k <= max_degree; ++k)
      for (int n = 1; n <= max_degree; ++n)
        for (int last = 1; last <= n; ++last)
          tuples[static_cast<std::size_t>(k)][static_cast<std::size_t>(n)] +=
              tuples[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(n - last)] * prim[static_cast<std::size_t>(last)];
    for (int n = 1; n <= max_degree; ++n)
      for (int k = 1; k <= n; ++k)
        composite[static_cast<std::size_t>(n)] += c[static_cast<std::size_t>(k)] * tuples[static_cast<std::size_t>(k)][static_cast<std::size_t>(n)];
  }

  for (int n = 1; n <= max_degree; ++n) {
    auto i = static_cast<std::size_t>(n);
    StructureIsoRow row{n, a[i], composite[i], static_cast<std::size_t>(prim[i])};
    report.holds = report.holds && row.dim_a == row.composite;
    report.rows.push_back(row);
  }
  return report;
}

struct PbwComponent {
  int k = 0;
  std::string cooperation;
  LinComb tensor;  // an element of Prim^{⊗k}
  MonomialSum split;
};

// Component k = (e⊗...⊗e)(δ_c(a)) for each cooperation c of arity k.
inline std::vector<PbwComponent> pbw_expand(const BialgebraType& type, const LinComb& a) {
  const auto& m = *type.model;
  const int deg = m.degree_of(a);
  if (type.cooperad != CooperadKind::Cocommutative) {
    auto h2 = check_h2(type, deg);
    if (h2.verdict == "fail") throw std::domain_error("H2 not verified at this degree");
  }
  GradedEndo e = versal_idempotent(type, deg);
  auto apply_e = [&](const Key& k) { return e.apply_key(m.degree(k), k); };

  std::vector<PbwComponent> out;
  for (int k = 1; k <= deg; ++k) {
    std::vector<SplitCooperation> coops;
    if (k == 1) coops = {{"id", Monomial::input(), {{Rational(1), Monomial::input()}}}};
    else coops = split_cooperations(type, k);
    for (auto& sc : coops) {
      LinComb t = map_each_factor(m.cooperate(sc.coop, a), apply_e);
      if (!t.empty()) out.push_back({k, sc.label, std::move(t), sc.split});
    }
  }
  return out;
}

inline LinComb pbw_reassemble(const BialgebraModel& m, const std::vector<PbwComponent>& expansion) {
  LinComb out;
  for (const auto& c : expansion) out.add(m.evaluate_on_tensor(c.split, c.tensor));
  return out;
}

}  // namespace bialg
