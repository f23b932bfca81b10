#include "bialg/free_trees.hpp"
#include "bialg/idempotents.hpp"
#include "bialg/structure.hpp"
#include "bialg/tables.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace bialg;

namespace {

LinComb random_element(const BialgebraModel& m, int degree, std::mt19937& rng) {
  auto keys = m.basis(degree);
  std::uniform_int_distribution<int> coeff(-3, 3);
  LinComb v;
  for (const auto& k : keys) v.add(k, coeff(rng));
  if (v.empty()) v.add(keys.front(), 1);
  return v;
}

}  // namespace

TEST(H2, VerdictsPerType) {
  const std::map<std::string, std::string> expected = {
      {"as", "iso"}, {"mag", "iso"}, {"bidup", "iso"}, {"dup", "epi-with-splitting"}};
  for (const auto& [name, verdict] : expected) {
    auto r = check_h2(make_type(name, 1), 5);
    EXPECT_EQ(r.verdict, verdict) << name;
    ASSERT_EQ(r.degrees.size(), 5u);
    for (const auto& d : r.degrees) {
      EXPECT_EQ(d.rank, d.dim_c) << name << " " << d.degree;
      EXPECT_NE(d.verdict, "fail");
    }
  }
  EXPECT_EQ(check_h2(make_type("classical", 2), 4).verdict, "unsupported cooperad");
}

TEST(H2, DuplicialDimensions) {
  auto r = check_h2(make_type("dup", 1), 4);
  // A_n is Catalan, C^c_n = As^c_n is one-dimensional
  const std::size_t catalan[] = {0, 1, 2, 5, 14};
  for (const auto& d : r.degrees) {
    EXPECT_EQ(d.dim_a, catalan[d.degree]);
    EXPECT_EQ(d.dim_c, 1u);
  }
  EXPECT_EQ(r.degrees[0].verdict, "iso");
  EXPECT_EQ(r.degrees[1].verdict, "epi-with-splitting");
}

TEST(H2, SplittingComposesToTheIdentity) {
  auto type = make_type("dup", 1);
  for (int n = 2; n <= 5; ++n) {
    auto phi = phi_map(type, n);
    EXPECT_EQ(phi_after_splitting(type, phi, n), Matrix::identity(1)) << n;
  }
}

TEST(H2, DualBasisTypesHaveInvertiblePhi) {
  for (const char* name : {"mag", "bidup"}) {
    auto type = make_type(name, 1);
    for (int n = 2; n <= 4; ++n) {
      auto phi = phi_map(type, n);
      ASSERT_EQ(phi.matrix.rows(), phi.matrix.cols());
      EXPECT_EQ(inverse(phi.matrix) * phi.matrix, Matrix::identity(phi.matrix.rows())) << name << " " << n;
    }
  }
}

TEST(StructureIso, HoldsForEveryType) {
  for (const auto& name : type_names()) {
    auto r = verify_structure_iso(make_type(name, default_alphabet(name)), 5);
    EXPECT_TRUE(r.holds) << name;
    for (const auto& row : r.rows) EXPECT_EQ(row.dim_a, row.composite) << name << " " << row.degree;
  }
}

TEST(StructureIso, PrimitiveDimensions) {
  auto dup = verify_structure_iso(make_type("dup", 1), 6);
  const std::size_t catalan[] = {1, 1, 2, 5, 14, 42};
  for (const auto& row : dup.rows) EXPECT_EQ(row.dim_prim, catalan[row.degree - 1]);
  auto as = verify_structure_iso(make_type("as", 2), 4);
  EXPECT_EQ(as.rows[0].dim_prim, 1u);
  for (std::size_t i = 1; i < as.rows.size(); ++i) EXPECT_EQ(as.rows[i].dim_prim, 0u);
  auto classical = verify_structure_iso(make_type("classical", 2), 5);
  const std::size_t witt[] = {2, 1, 2, 3, 6};
  for (const auto& row : classical.rows) EXPECT_EQ(row.dim_prim, witt[row.degree - 1]);
}

TEST(Pbw, ExpansionReassemblesRandomElements) {
  std::mt19937 rng(5);
  for (const auto& name : type_names()) {
    auto type = make_type(name, 2);
    const int max_deg = name == "classical" ? 4 : 3;
    for (int n = 1; n <= max_deg; ++n)
      for (int trial = 0; trial < 3; ++trial) {
        LinComb a = random_element(*type.model, n, rng);
        auto expansion = pbw_expand(type, a);
        EXPECT_EQ(pbw_reassemble(*type.model, expansion), a) << name << " degree " << n;
      }
  }
}

TEST(Pbw, ComponentFactorsArePrimitive) {
  std::mt19937 rng(9);
  for (const char* name : {"dup", "bidup", "mag", "as"}) {
    auto type = make_type(name, 2);
    for (const auto& c : pbw_expand(type, random_element(*type.model, 3, rng))) {
      EXPECT_GE(c.k, 1);
      for (const auto& [key, coeff] : c.tensor) EXPECT_EQ(key.arity(), static_cast<std::size_t>(c.k));
      // apply each coproduct slotwise; every term must die
      for (std::size_t slot = 0; slot < static_cast<std::size_t>(c.k); ++slot)
        for (const auto& d : type.coproducts)
          EXPECT_TRUE(map_factor(c.tensor, slot, [&](const Key& k) { return type.model->coproduct(d, LinComb(k)); }).empty())
              << name << " " << c.cooperation;
    }
  }
}

TEST(Pbw, PrimitiveElementsAreTheirOwnExpansion) {
  DupModel dup(2);
  LinComb x(dup.generator(0)), y(dup.generator(1));
  LinComb v = dup.product("left", x, y) - dup.product("right", x, y);
  auto expansion = pbw_expand(make_type("dup", 2), v);
  ASSERT_EQ(expansion.size(), 1u);
  EXPECT_EQ(expansion[0].k, 1);
  EXPECT_EQ(expansion[0].tensor, v);
}

TEST(PbwTables, DuplicialRowsHold) {
  auto r = duplicial_pbw_table();
  EXPECT_TRUE(r.holds);
  ASSERT_EQ(r.rows.size(), 8u);
  for (const auto& row : r.rows) {
    EXPECT_TRUE(row.holds) << row.label;
    EXPECT_TRUE(row.reassembles) << row.label;
  }
}

TEST(PbwTables, ClassicalRowsHold) {
  auto r = classical_pbw_table();
  EXPECT_TRUE(r.holds);
  ASSERT_EQ(r.rows.size(), 3u);
  for (const auto& row : r.rows) EXPECT_TRUE(row.holds) << row.label;
}

TEST(PbwTables, ExpectedColumnsAreNotTrivial) {
  // a perturbed expectation must be caught
  auto type = make_type("dup", 3);
  auto rows = duplicial_pbw_rows(*type.model);
  rows[2].expected[0] = -rows[2].expected[0];
  EXPECT_FALSE(detail::run_pbw_table(type, rows, false).holds);
}
