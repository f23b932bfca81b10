// One PASS/FAIL line per acceptance criterion, with wall time against its limit.
// Expected values are written out literally here rather than taken from the library.
#include "bialg/bialg.hpp"

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace bialg;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> run;
};

// Accumulates sub-checks; the first failing one is reported.
struct Checker {
  Outcome out;
  void expect(bool ok, const std::string& what) {
    if (!ok && out.pass) {
      out.pass = false;
      out.detail = what;
    }
  }
};

LinComb k(const char* key, Rational c = 1) { return LinComb::of(key, std::move(c)); }

Outcome catalan_dimensions() {
  Checker c;
  DupModel dup(1);
  const std::size_t expected[] = {1, 2, 5, 14, 42, 132};
  for (int n = 1; n <= 6; ++n) {
    auto got = dup.basis(n).size();
    c.expect(got == expected[n - 1], "dim Dup_" + std::to_string(n) + " = " + std::to_string(got));
  }
  return c.out;
}

Outcome relation_suite() {
  Checker c;
  const auto& lib = RelationLibrary::builtin();
  AsModel as(2);
  DupModel dup(2);
  MagModel mag(2);
  ZinbModel zinb(2);
  auto rel = [&](const BialgebraModel& m, const char* delta, const char* mu, const char* name, int deg) {
    auto r = check_relation(m, delta, mu, lib.at(name).expr, deg);
    c.expect(r.holds, std::string(name) + " on (" + m.name() + ", " + delta + ", " + mu + ")");
  };
  rel(as, "deconcat", "concat", "nui", 6);
  rel(dup, "delta", "left", "nui", 6);
  rel(dup, "delta", "right", "nui", 6);
  rel(mag, "dual", "mul", "magmatic", 6);
  rel(mag, "livernet", "mul", "Livernet", 5);
  c.expect(check_law(mag, "livernet", CoalgebraLaw::Nap, 5).holds, "NAP law on (mag, livernet)");
  rel(dup, "delta_left", "left", "biduplicial-left-left", 5);
  rel(dup, "delta_left", "right", "biduplicial-left-right", 5);
  rel(dup, "delta_right", "left", "biduplicial-right-left", 5);
  rel(dup, "delta_right", "right", "biduplicial-right-right", 5);
  rel(zinb, "deconcat", "left", "semi-Hopf-left", 5);
  return c.out;
}

Outcome idempotency_and_primitives() {
  Checker c;
  struct Case {
    const char* type;
    int alphabet, max_degree;
  };
  for (const auto& [name, alphabet, N] : {Case{"dup", 1, 6}, Case{"as", 2, 6}, Case{"mag", 1, 6}, Case{"classical", 2, 5}}) {
    auto type = make_type(name, alphabet);
    auto e = versal_idempotent(type, N);
    c.expect(e.compose(e) == e, std::string("e^2 != e for ") + name);
    for (int n = 1; n <= N; ++n) {
      auto prim = primitive_part(type, n).size();
      c.expect(e.rank(n) == prim, std::string("rank e_n != dim Prim_n for ") + name + " at " + std::to_string(n));
      if (std::string(name) == "dup") {
        const std::size_t catalan_prev[] = {1, 1, 2, 5, 14, 42};
        c.expect(prim == catalan_prev[n - 1], "dim Prim Dup_" + std::to_string(n) + " = " + std::to_string(prim));
      }
      if (std::string(name) == "classical") {
        const std::size_t bracket_span[] = {2, 1, 2, 3, 6};
        c.expect(prim == bracket_span[n - 1], "dim Prim T(V)_" + std::to_string(n) + " = " + std::to_string(prim));
      }
    }
  }
  return c.out;
}

Outcome eulerian_equality() {
  Checker c;
  const int N = 5;
  ConvolutionContext ctx(std::make_shared<AsModel>(2), "concat", "shuffle", N);
  auto family = eulerian_family(ctx);
  c.expect(versal_idempotent(make_type("classical", 2), N) == family[0], "versal e differs from e1");
  GradedEndo sum = ctx.zero();
  for (std::size_t i = 0; i < family.size(); ++i) {
    sum = sum + family[i];
    for (std::size_t j = 0; j < family.size(); ++j) {
      auto prod = family[i].compose(family[j]);
      c.expect(i == j ? prod == family[i] : prod == ctx.zero(),
               "e" + std::to_string(i + 1) + " e" + std::to_string(j + 1) + " wrong");
    }
  }
  c.expect(sum == ctx.identity(), "Eulerian idempotents do not sum to Id");
  auto d = dynkin(2, N);
  for (int n = 1; n <= N; ++n)
    c.expect(same_span(family[0].basis(n), columns(family[0].basis(n), family[0].matrix(n)), columns(d.basis(n), d.matrix(n))),
             "Im Dynkin != Im e1 in degree " + std::to_string(n));
  return c.out;
}

Outcome pbw_tables() {
  Checker c;
  // x·y = x≺y − x≻y written on trees
  const LinComb dot_xy = k("(.,(.,.)):xy") - k("((.,.),.):xy");
  const LinComb dot_yz = k("(.,(.,.)):yz") - k("((.,.),.):yz");
  const LinComb x = k("(.,.):x"), y = k("(.,.):y"), z = k("(.,.):z");
  const LinComb xyz = k("(.,.):x|(.,.):y|(.,.):z");
  const LinComb zero;
  struct Row {
    const char* label;
    LinComb element;
    std::vector<LinComb> expected;
  };
  const std::vector<Row> dup_rows = {
      {"x>y", k("((.,.),.):xy"), {zero, k("(.,.):x|(.,.):y")}},
      {"x<y", k("(.,(.,.)):xy"), {dot_xy, k("(.,.):x|(.,.):y")}},
      {"(x>y)>z", k("(((.,.),.),.):xyz"), {zero, zero, xyz}},
      {"(x<y)>z", k("((.,(.,.)),.):xyz"), {zero, tensor(dot_xy, z), xyz}},
      {"(x>y)<z", k("((.,.),(.,.)):xyz"), {zero, tensor(x, dot_yz), xyz}},
      {"x<(y>z)", k("(.,((.,.),.)):xyz"), {k("(.,((.,.),.)):xyz") - k("((.,(.,.)),.):xyz"), tensor(dot_xy, z), xyz}},
      {"(x<y)<z",
       k("(.,(.,(.,.))):xyz"),
       {k("(.,(.,(.,.))):xyz") - k("((.,.),(.,.)):xyz") - k("((.,(.,.)),.):xyz") + k("(((.,.),.),.):xyz"),
        tensor(dot_xy, z) + tensor(x, dot_yz), xyz}},
  };
  auto dup = make_type("dup", 3);
  for (const auto& row : dup_rows) {
    std::vector<LinComb> got(row.expected.size());
    bool extra = false;
    auto expansion = pbw_expand(dup, row.element);
    for (const auto& comp : expansion) {
      if (comp.k > static_cast<int>(got.size())) extra = true;
      else got[static_cast<std::size_t>(comp.k - 1)] += comp.tensor;
    }
    c.expect(!extra && got == row.expected, std::string("duplicial row ") + row.label);
    c.expect(pbw_reassemble(*dup.model, expansion) == row.element, std::string("duplicial row ") + row.label + " does not reassemble");
  }

  // T(V) = S^c(Lie(V)): arity-k parts multiplied back into T(V)
  const std::vector<Row> classical_rows = {
      {"xy", k("xy"), {Rational(1, 2) * (k("xy") - k("yx")), Rational(1, 2) * (k("xy") + k("yx"))}},
      {"xyz",
       k("xyz"),
       {Rational(1, 6) * (k("xyz", 2) - k("xzy") - k("yxz") - k("yzx") - k("zxy") + k("zyx", 2)),
        Rational(1, 2) * (k("xyz") - k("zyx")),
        Rational(1, 6) * (k("xyz") + k("xzy") + k("yxz") + k("yzx") + k("zxy") + k("zyx"))}},
  };
  auto classical = make_type("classical", 3);
  for (const auto& row : classical_rows) {
    std::vector<LinComb> got(row.expected.size());
    for (const auto& comp : pbw_expand(classical, row.element))
      got[static_cast<std::size_t>(comp.k - 1)] += classical.model->evaluate_on_tensor(comp.split, comp.tensor);
    c.expect(got == row.expected, std::string("classical row ") + row.label);
  }
  return c.out;
}

Outcome lily() {
  Checker c;
  auto internal = check_lie_internal(2, 4);
  if (!internal.holds)
    c.expect(false, "cobracket leaves Lie(x)Lie in degree " + std::to_string(internal.checked_degree + 1) +
                        " on " + format_element(*internal.witness));
  LieModel lie(2);
  auto r = check_relation(lie, "cobracket", "bracket", RelationLibrary::builtin().at("Lily").expr, 4);
  if (!r.holds)
    c.expect(false, "Lily fails at degree " + std::to_string(r.first_failure->degree) + " on a = " +
                        format_element(r.first_failure->left) + ", b = " + format_element(r.first_failure->right));
  if (!internal.holds && !r.holds) c.out.detail += "; Lily also fails";
  return c.out;
}

Outcome series_identities() {
  Checker c;
  const int N = 12;
  c.expect(check_triple_identity("Com", "As", "Lie", N).holds, "As = Com o Lie");
  c.expect(check_triple_identity("As", "Dup", "Mag", N).holds, "Dup = As o Mag");
  c.expect(check_koszul_dual("Dup", "Dup!", N).holds, "Dup! o -Dup(-t) = t");
  c.expect(check_koszul_dual("Mag", "Nil", N).holds, "Nil o -Mag(-t) = t");
  auto sab = gen_series("Sabinin", 5);
  const long long expected[] = {1, 1, 8, 78, 1104};
  Rational fact = 1;
  for (int n = 1; n <= 5; ++n) {
    fact *= n;
    c.expect(sab[n] * fact == expected[n - 1], "Sabinin dimension in degree " + std::to_string(n));
  }
  auto control = check_triple_identity("Com", "As", "Com", N);
  c.expect(!control.holds && control.first_mismatch == 3, "negative control Com o Com did not fail at t^3");
  return c.out;
}

Outcome koszulity() {
  Checker c;
  for (int n = 1; n <= 5; ++n) {
    auto r = total_homology(n);
    c.expect(r.checks.all(), "differential identities fail at n = " + std::to_string(n));
    std::vector<std::size_t> expected(static_cast<std::size_t>(n), 0);
    if (n == 1) expected[0] = 1;
    c.expect(r.homology_dims == expected, "nonzero homology at n = " + std::to_string(n));
  }
  return c.out;
}

Outcome h2_classification() {
  Checker c;
  const std::pair<const char*, const char*> expected[] = {
      {"as", "iso"}, {"mag", "iso"}, {"bidup", "iso"}, {"dup", "epi-with-splitting"}};
  for (const auto& [name, verdict] : expected) {
    auto r = check_h2(make_type(name, 1), 6);
    c.expect(r.verdict == verdict, std::string(name) + " gives " + r.verdict);
  }
  c.expect(check_h2(make_type("dup", 1), 6).splitting == "left comb", "dup splitting is not the left comb");
  return c.out;
}

std::string run_suite() {
  std::string out;
  FILE* pipe = popen((std::string(BIALG_CLI_PATH) + " suite 2>/dev/null").c_str(), "r");
  if (!pipe) return out;
  std::array<char, 65536> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  pclose(pipe);
  return out;
}

Outcome determinism() {
  Checker c;
  auto a = run_suite(), b = run_suite();
  c.expect(!a.empty(), "suite produced no output");
  c.expect(a == b, "two suite runs differ");
  return c.out;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Catalan dimensions of Dup", 1, catalan_dimensions},
      {2, "relation suite", 120, relation_suite},
      {3, "versal idempotent and primitives", 180, idempotency_and_primitives},
      {4, "Eulerian equality", 60, eulerian_equality},
      {5, "PBW tables", 10, pbw_tables},
      {6, "Lie internality and Lily", 60, lily},
      {7, "series identities", 1, series_identities},
      {8, "Koszulity witness", 300, koszulity},
      {9, "H2 classification", 30, h2_classification},
      {10, "determinism of the suite", 900, determinism},
  };
  int failures = 0;
  for (const auto& cr : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = cr.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = secs < cr.limit_seconds;
    bool pass = o.pass && in_time;
    if (!pass) ++failures;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(3);
    line << (pass ? "PASS" : "FAIL") << " criterion " << cr.id << ": " << cr.name << " (" << secs << " s, limit "
         << cr.limit_seconds << " s)";
    if (!o.pass) line << " -- " << o.detail;
    else if (!in_time) line << " -- over time limit";
    std::cout << line.str() << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
