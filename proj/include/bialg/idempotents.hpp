#pragma once

#include "bialg/lie.hpp"
#include "bialg/relations.hpp"
#include "bialg/linalg.hpp"
#include "bialg/types.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace bialg {

// The convolution algebra of graded endomorphisms, f⋆g = μ∘(f⊗g)∘δ.
class ConvolutionContext {
 public:
  ConvolutionContext(ModelPtr model, std::string product, std::string coproduct, int max_degree, bool verify = true)
      : model_(std::move(model)), product_(std::move(product)), coproduct_(std::move(coproduct)),
        max_degree_(max_degree), bases_(graded_bases(*model_, max_degree)) {
    if (max_degree < 1) throw std::invalid_argument("max degree must be at least 1");
    if (!model_->has_product(product_) || !model_->has_coproduct(coproduct_))
      throw std::invalid_argument("model '" + model_->name() + "' lacks '" + product_ + "' or '" + coproduct_ + "'");
    if (verify) verify_laws();
  }

  const BialgebraModel& model() const { return *model_; }
  int max_degree() const { return max_degree_; }
  const std::map<int, BasisPtr>& bases() const { return bases_; }
  GradedEndo identity() const { return GradedEndo::identity(bases_); }
  GradedEndo zero() const { return GradedEndo::zero(bases_); }

  GradedEndo convolve(const GradedEndo& f, const GradedEndo& g) const {
    return GradedEndo::from_function(bases_, [&](const Key& x) {
      LinComb out;
      for (const auto& [k, c] : model_->coproduct(coproduct_, LinComb(x))) {
        auto parts = k.factors();
        Key a(parts[0]), b(parts[1]);
        LinComb fa = f.apply_key(model_->degree(a), a);
        LinComb gb = g.apply_key(model_->degree(b), b);
        out.add(model_->product(product_, fa, gb), c);
      }
      return out;
    });
  }

  // f⋆f⋆...⋆f with n factors.
  GradedEndo power(const GradedEndo& f, int n) const {
    if (n < 1) throw std::invalid_argument("convolution power needs n >= 1");
    GradedEndo out = f;
    for (int i = 1; i < n; ++i) out = convolve(out, f);
    return out;
  }

 private:
  void verify_laws() const {
    const auto& m = *model_;
    for (int total = 3; total <= max_degree_; ++total)
      for (int p = 1; p + 1 < total; ++p)
        for (int q = 1; p + q < total; ++q)
          for (const auto& a : m.basis(p))
            for (const auto& b : m.basis(q))
              for (const auto& c : m.basis(total - p - q)) {
                LinComb A(a), B(b), C(c);
                if (m.product(product_, m.product(product_, A, B), C) != m.product(product_, A, m.product(product_, B, C)))
                  throw std::domain_error("product '" + product_ + "' is not associative on " + a.str() + "," + b.str() + "," + c.str());
              }
    auto report = check_law(m, coproduct_, CoalgebraLaw::Coassociative, max_degree_);
    if (!report.holds)
      throw std::domain_error("coproduct '" + coproduct_ + "' is not coassociative at " + report.first_failure->element.str());
  }

  ModelPtr model_;
  std::string product_, coproduct_;
  int max_degree_;
  std::map<int, BasisPtr> bases_;
};

// e⁽¹⁾ = J - J⋆²/2 + J⋆³/3 - ..., which stops at J⋆ᴺ in degrees ≤ N.
inline GradedEndo eulerian_first(const ConvolutionContext& ctx) {
  GradedEndo j = ctx.identity();
  GradedEndo power = j;
  GradedEndo sum = j;
  for (int k = 2; k <= ctx.max_degree(); ++k) {
    power = ctx.convolve(power, j);
    Rational c = Rational(k % 2 == 0 ? -1 : 1) / k;
    sum = sum + c * power;
  }
  return sum;
}

// e⁽ⁱ⁾ = (e⁽¹⁾)⋆ⁱ / i!.
inline GradedEndo eulerian(const ConvolutionContext& ctx, int i) {
  if (i < 1) throw std::invalid_argument("Eulerian index must be at least 1");
  GradedEndo e1 = eulerian_first(ctx);
  Rational fact = 1;
  for (int k = 2; k <= i; ++k) fact *= k;
  return (1 / fact) * ctx.power(e1, i);
}

// All of e⁽¹⁾..e⁽ᴺ⁾, sharing the convolution powers of e⁽¹⁾.
inline std::vector<GradedEndo> eulerian_family(const ConvolutionContext& ctx) {
  std::vector<GradedEndo> out;
  GradedEndo e1 = eulerian_first(ctx);
  GradedEndo power = e1;
  Rational fact = 1;
  out.push_back(e1);
  for (int i = 2; i <= ctx.max_degree(); ++i) {
    power = ctx.convolve(power, e1);
    fact *= i;
    out.push_back((1 / fact) * power);
  }
  return out;
}

// x1...xn ↦ (1/n)[...[[x1,x2],x3],...,xn] on T̄(V).
inline GradedEndo dynkin(int alphabet, int max_degree) {
  AsModel as(alphabet);
  return GradedEndo::from_function(graded_bases(as, max_degree), [](const Key& w) {
    return Rational(1, static_cast<long>(w.str().size())) * left_nested_bracket(w.str());
  });
}

// Σ (-1)^{n-1} Id⋆ⁿ, finite in each degree.
inline GradedEndo geometric_idempotent(const ConvolutionContext& ctx) {
  GradedEndo j = ctx.identity();
  GradedEndo power = j;
  GradedEndo sum = j;
  for (int n = 2; n <= ctx.max_degree(); ++n) {
    power = ctx.convolve(power, j);
    sum = sum + Rational(n % 2 == 0 ? -1 : 1) * power;
  }
  return sum;
}

namespace detail {
inline LinComb apply_omega(const BialgebraModel& m, const std::vector<SplitCooperation>& coops, const LinComb& v) {
  LinComb out;
  for (const auto& sc : coops) out.add(m.evaluate_on_tensor(sc.split, m.cooperate(sc.coop, v)));
  return out;
}

inline std::vector<std::vector<SplitCooperation>> split_tables(const BialgebraType& type, int max_degree) {
  std::vector<std::vector<SplitCooperation>> table(static_cast<std::size_t>(max_degree) + 1);
  for (int n = 2; n <= max_degree; ++n) table[static_cast<std::size_t>(n)] = split_cooperations(type, n);
  return table;
}

inline ConvolutionContext classical_context(const BialgebraType& type, int max_degree) {
  return ConvolutionContext(type.model, type.product, type.coproduct, max_degree);
}
}  // namespace detail

// ω⁽ⁿ⁾ = Σ_c s(c)∘δ_c over the cooperations of arity n. For the classical
// type, ω⁽ⁿ⁾ := Σ_{k≥n} e⁽ᵏ⁾.
inline GradedEndo omega(const BialgebraType& type, int n, int max_degree) {
  if (n < 2) throw std::invalid_argument("omega needs n >= 2");
  auto bases = graded_bases(*type.model, max_degree);
  if (type.cooperad == CooperadKind::Cocommutative) {
    auto ctx = detail::classical_context(type, max_degree);
    auto family = eulerian_family(ctx);
    GradedEndo sum = ctx.zero();
    for (int k = n; k <= max_degree; ++k) sum = sum + family[static_cast<std::size_t>(k - 1)];
    return sum;
  }
  if (n > max_degree) return GradedEndo::zero(bases);
  auto coops = split_cooperations(type, n);
  return GradedEndo::from_function(bases, [&](const Key& x) { return detail::apply_omega(*type.model, coops, LinComb(x)); });
}

// e = (Id - ω⁽²⁾)∘(Id - ω⁽³⁾)∘...; in degree d only factors up to ω⁽ᵈ⁾ act.
inline GradedEndo versal_idempotent(const BialgebraType& type, int max_degree) {
  auto bases = graded_bases(*type.model, max_degree);
  if (type.cooperad == CooperadKind::Cocommutative) {
    auto ctx = detail::classical_context(type, max_degree);
    auto family = eulerian_family(ctx);
    GradedEndo e = ctx.identity();
    for (int n = max_degree; n >= 2; --n) {
      GradedEndo w = ctx.zero();
      for (int k = n; k <= max_degree; ++k) w = w + family[static_cast<std::size_t>(k - 1)];
      e = (ctx.identity() - w).compose(e);
    }
    return e;
  }
  auto table = detail::split_tables(type, max_degree);
  const auto& m = *type.model;
  return GradedEndo::from_function(bases, [&](const Key& x) {
    LinComb v(x);
    for (int n = m.degree(x); n >= 2; --n) v -= detail::apply_omega(m, table[static_cast<std::size_t>(n)], v);
    return v;
  });
}

}  // namespace bialg
