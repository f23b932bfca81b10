#include "bialg/free_as.hpp"
#include "bialg/free_trees.hpp"
#include "bialg/lie.hpp"
#include "bialg/relations.hpp"

#include <gtest/gtest.h>

using namespace bialg;

namespace {

const RelationLibrary& lib() { return RelationLibrary::builtin(); }

RelationReport run(const BialgebraModel& m, const std::string& delta, const std::string& mu, const std::string& rel, int deg) {
  return check_relation(m, delta, mu, lib().at(rel).expr, deg);
}

}  // namespace

TEST(RelationLibrary, ShipsTheNamedRelations) {
  for (const char* n : {"Hopf", "nui", "magmatic", "Livernet", "Lily", "semi-Hopf-left", "nil", "biduplicial-left-left",
                        "biduplicial-left-right", "biduplicial-right-left", "biduplicial-right-right"})
    EXPECT_TRUE(lib().contains(n)) << n;
  EXPECT_THROW(lib().at("nope"), std::invalid_argument);
  EXPECT_EQ(lib().at("Hopf").expr.terms.size(), 7u);
  EXPECT_EQ(lib().at("nui").expr.phi1().terms.size(), 1u);
  EXPECT_EQ(lib().at("nui").expr.phi2().terms.size(), 2u);
}

TEST(RelationLibrary, JsonRoundTrip) {
  for (const auto& [name, e] : lib().entries()) {
    auto j = compat_to_json(e.expr);
    auto back = compat_from_json(j);
    EXPECT_EQ(compat_to_json(back), j) << name;
  }
}

TEST(RelationLibrary, RejectsMalformedTerms) {
  auto term = [](std::vector<std::size_t> perm, std::vector<std::string> in, std::vector<std::string> out) {
    return nlohmann::json{{"terms", {{{"coeff", "1"}, {"perm", perm}, {"inCoops", in}, {"outOps", out}}}}};
  };
  EXPECT_NO_THROW(compat_from_json(term({0, 1}, {"id", "id"}, {"id", "id"})));
  EXPECT_THROW(compat_from_json(term({0, 0}, {"id", "id"}, {"id", "id"})), std::invalid_argument);
  EXPECT_THROW(compat_from_json(term({0, 1, 2}, {"id", "id"}, {"id", "id"})), std::invalid_argument);
  EXPECT_THROW(compat_from_json(term({0, 1}, {"id"}, {"id", "id"})), std::invalid_argument);
  EXPECT_THROW(compat_from_json(term({0, 1, 2}, {"$delta", "id"}, {"id", "id"})), std::invalid_argument);
}

TEST(Relations, StandardCompatibilitiesHold) {
  AsModel as(2);
  DupModel dup(2);
  MagModel mag(2);
  ZinbModel zinb(2);
  NilModel nil(2);
  EXPECT_TRUE(run(as, "deconcat", "concat", "nui", 6).holds);
  EXPECT_TRUE(run(dup, "delta", "left", "nui", 5).holds);
  EXPECT_TRUE(run(dup, "delta", "right", "nui", 5).holds);
  EXPECT_TRUE(run(mag, "dual", "mul", "magmatic", 5).holds);
  EXPECT_TRUE(run(mag, "livernet", "mul", "Livernet", 5).holds);
  EXPECT_TRUE(run(zinb, "deconcat", "left", "semi-Hopf-left", 5).holds);
  EXPECT_TRUE(run(nil, "delta", "mul", "nil", 4).holds);
  EXPECT_TRUE(run(as, "shuffle", "concat", "Hopf", 5).holds);
}

TEST(Relations, BiduplicialPieces) {
  DupModel dup(2);
  for (const auto& [name, e] : lib().entries()) {
    if (name.rfind("biduplicial", 0) != 0) continue;
    EXPECT_TRUE(check_relation(dup, *e.coproduct, *e.product, e.expr, 5).holds) << name;
  }
}

TEST(Relations, ReportsCheckedPairs) {
  AsModel as(1);
  // one word per degree; pairs (p,q) with p+q <= 4 number 1+2+3
  EXPECT_EQ(run(as, "deconcat", "concat", "nui", 4).checked_pairs, 6u);
}

TEST(Relations, HopfFailsOnTheLivernetCoproduct) {
  MagModel mag(2);
  auto r = run(mag, "livernet", "mul", "Hopf", 4);
  ASSERT_FALSE(r.holds);
  ASSERT_TRUE(r.first_failure);
  EXPECT_EQ(r.first_failure->degree, 2);
  EXPECT_EQ(r.first_failure->left, LinComb::of(".:x"));
  EXPECT_EQ(r.first_failure->right, LinComb::of(".:x"));
  EXPECT_NE(r.first_failure->lhs, r.first_failure->rhs);
}

TEST(Relations, NuiFailsForTheUnshuffle) {
  AsModel as(2);
  auto r = run(as, "shuffle", "concat", "nui", 3);
  ASSERT_FALSE(r.holds);
  EXPECT_EQ(r.first_failure->degree, 2);
}

TEST(Relations, LilyHoldsInLowDegreeAndFailsAtFour) {
  LieModel lie(2);
  EXPECT_TRUE(run(lie, "cobracket", "bracket", "Lily", 3).holds);
  auto r = run(lie, "cobracket", "bracket", "Lily", 4);
  ASSERT_FALSE(r.holds);
  EXPECT_EQ(r.first_failure->degree, 4);
  EXPECT_EQ(r.first_failure->left, LinComb::of("x"));
  EXPECT_EQ(r.first_failure->right,
            LinComb::of("xxy", -1) + LinComb::of("xyx", 2) - LinComb::of("yxx"));
}

TEST(Relations, CobracketDoesNotPreserveLie) {
  auto r = check_lie_internal(2, 4);
  EXPECT_FALSE(r.holds);
  EXPECT_EQ(r.checked_degree, 3);
  ASSERT_TRUE(r.witness);
  for (const auto& [k, c] : *r.witness) EXPECT_EQ(k.str().size(), 4u);
  EXPECT_TRUE(check_lie_internal(2, 3).holds);
}

TEST(Relations, UserSuppliedRelation) {
  // δ(xy) = x⊗y + x1⊗x2·y + x·y1⊗y2, written out by hand
  auto j = nlohmann::json::parse(R"({"name": "mine", "coproduct": "deconcat", "product": "concat", "terms": [
    {"coeff": 1, "inCoops": ["id", "id"], "perm": [0, 1], "outOps": ["id", "id"]},
    {"coeff": "1", "inCoops": ["$delta", "id"], "perm": [0, 1, 2], "outOps": ["id", "$mu"]},
    {"coeff": "1", "inCoops": ["id", "$delta"], "perm": [0, 1, 2], "outOps": ["$mu", "id"]}]})");
  auto entry = relation_from_json(j);
  EXPECT_EQ(entry.name, "mine");
  EXPECT_EQ(*entry.coproduct, "deconcat");
  RelationLibrary copy = lib();
  copy.add(entry);
  EXPECT_TRUE(copy.contains("mine"));
  EXPECT_FALSE(lib().contains("mine"));
  AsModel as(2);
  EXPECT_TRUE(check_relation(as, "deconcat", "concat", entry.expr, 5).holds);
}

TEST(Relations, RejectsSymbolsTheModelLacks) {
  AsModel as(2);
  EXPECT_THROW(run(as, "delta", "concat", "nui", 3), std::invalid_argument);
  EXPECT_THROW(run(as, "deconcat", "left", "nui", 3), std::invalid_argument);
  DupModel dup(2);
  EXPECT_THROW(run(dup, "delta", "left", "semi-Hopf-left", 3), std::invalid_argument);
}

TEST(CoalgebraLaws, NapDetectsFailure) {
  AsModel as(2);
  auto r = check_law(as, "deconcat", CoalgebraLaw::Nap, 4);
  ASSERT_FALSE(r.holds);
  EXPECT_EQ(r.first_failure->element, Key("xxy"));
}
