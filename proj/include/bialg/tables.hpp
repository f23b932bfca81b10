#pragma once

#include "bialg/lie.hpp"
#include "bialg/structure.hpp"

#include <string>
#include <vector>

// The low-degree PBW expansions: for Dup(V) against T^c(Mag(V)) with
// x·y = x≺y − x≻y, and for T(V) against S^c(Lie(V)).
namespace bialg {

struct PbwTableRow {
  std::string label;
  LinComb element;
  std::vector<LinComb> expected;  // expected[k-1] is the arity-k part
};

struct PbwRowResult {
  std::string label;
  bool holds = true;
  bool reassembles = true;
  std::vector<LinComb> components;
};

struct PbwTableReport {
  std::string type;
  bool holds = true;
  std::vector<PbwRowResult> rows;
};

// Rows on the letters x, y, z. Columns are the tensors (e⊗...⊗e)(δ^{k-1} a) in Mag^{⊗k}.
inline std::vector<PbwTableRow> duplicial_pbw_rows(const BialgebraModel& dup) {
  LinComb x(dup.generator(0)), y(dup.generator(1)), z(dup.generator(2));
  auto lt = [&](const LinComb& a, const LinComb& b) { return dup.product("left", a, b); };
  auto gt = [&](const LinComb& a, const LinComb& b) { return dup.product("right", a, b); };
  auto dot = [&](const LinComb& a, const LinComb& b) { return lt(a, b) - gt(a, b); };
  const LinComb zero;
  const LinComb xyz = tensor(tensor(x, y), z);
  return {
      {"x", x, {x}},
      {"x>y", gt(x, y), {zero, tensor(x, y)}},
      {"x<y", lt(x, y), {dot(x, y), tensor(x, y)}},
      {"x>y>z", gt(gt(x, y), z), {zero, zero, xyz}},
      {"(x<y)>z", gt(lt(x, y), z), {zero, tensor(dot(x, y), z), xyz}},
      {"x>y<z", lt(gt(x, y), z), {zero, tensor(x, dot(y, z)), xyz}},
      {"x<(y>z)", lt(x, gt(y, z)), {dot(dot(x, y), z) - dot(x, dot(y, z)), tensor(dot(x, y), z), xyz}},
      {"x<y<z", lt(lt(x, y), z), {dot(dot(x, y), z), tensor(dot(x, y), z) + tensor(x, dot(y, z)), xyz}},
  };
}

// Classical rows; columns are the reassembled parts in T(V), i.e. the arity-k
// part multiplied back by the symmetrized product.
inline std::vector<PbwTableRow> classical_pbw_rows() {
  auto w = [](const char* s) { return LinComb::of(s); };
  auto br = commutator;
  LinComb x = w("x"), y = w("y"), z = w("z");
  auto cat = [](const LinComb& a, const LinComb& b) {
    LinComb out;
    for (const auto& [ka, ca] : a)
      for (const auto& [kb, cb] : b) out.add(Key(ka.str() + kb.str()), ca * cb);
    return out;
  };
  LinComb all_perms = w("xyz") + w("xzy") + w("yxz") + w("yzx") + w("zxy") + w("zyx");
  return {
      {"x", x, {x}},
      {"xy", w("xy"), {Rational(1, 2) * br(x, y), Rational(1, 2) * (w("xy") + w("yx"))}},
      {"xyz",
       w("xyz"),
       {Rational(1, 6) * (br(br(x, y), z) + br(x, br(y, z))),
        Rational(1, 4) * (cat(x, br(y, z)) + cat(br(y, z), x) + cat(y, br(x, z)) + cat(br(x, z), y) +
                          cat(z, br(x, y)) + cat(br(x, y), z)),
        Rational(1, 6) * all_perms}},
  };
}

namespace detail {
inline PbwTableReport run_pbw_table(const BialgebraType& type, const std::vector<PbwTableRow>& rows, bool reassembled) {
  PbwTableReport report;
  report.type = type.name;
  const auto& m = *type.model;
  for (const auto& row : rows) {
    auto expansion = pbw_expand(type, row.element);
    PbwRowResult r;
    r.label = row.label;
    r.components.resize(row.expected.size());
    for (const auto& c : expansion) {
      if (c.k > static_cast<int>(row.expected.size())) {
        r.holds = false;
        continue;
      }
      auto& slot = r.components[static_cast<std::size_t>(c.k - 1)];
      slot += reassembled ? m.evaluate_on_tensor(c.split, c.tensor) : c.tensor;
    }
    r.holds = r.holds && r.components == row.expected;
    r.reassembles = pbw_reassemble(m, expansion) == row.element;
    report.holds = report.holds && r.holds && r.reassembles;
    report.rows.push_back(std::move(r));
  }
  return report;
}
}  // namespace detail

inline PbwTableReport duplicial_pbw_table() {
  auto type = make_type("dup", 3);
  return detail::run_pbw_table(type, duplicial_pbw_rows(*type.model), false);
}

inline PbwTableReport classical_pbw_table() {
  return detail::run_pbw_table(make_type("classical", 3), classical_pbw_rows(), true);
}

}  // namespace bialg
