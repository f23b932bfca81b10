#pragma once

#include "bialg/homology.hpp"
#include "bialg/lie.hpp"
#include "bialg/relations.hpp"
#include "bialg/series.hpp"
#include "bialg/structure.hpp"

#include <json.hpp>

#include <string>
#include <vector>

// JSON views of the library's values and reports. nlohmann::json keeps object
// keys sorted, so serialization is canonical.
namespace bialg {

using Json = nlohmann::json;

inline Json to_json(const Rational& q) { return to_string(q); }

inline Json to_json(const LinComb& v) {
  Json out = Json::object();
  for (const auto& [k, c] : v) out[k.str()] = to_string(c);
  return out;
}

inline Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json to_json(const std::vector<LinComb>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(to_json(v));
  return out;
}

inline Json to_json(const RelationReport& r) {
  Json out{{"holds", r.holds}, {"checkedPairs", r.checked_pairs}};
  if (r.first_failure) {
    const auto& f = *r.first_failure;
    out["firstFailure"] = {{"degree", f.degree}, {"left", to_json(f.left)}, {"right", to_json(f.right)},
                           {"lhs", to_json(f.lhs)}, {"rhs", to_json(f.rhs)}};
  }
  return out;
}

inline Json to_json(const LawReport& r) {
  Json out{{"holds", r.holds}, {"checkedElements", r.checked}};
  if (r.first_failure)
    out["firstFailure"] = {{"element", r.first_failure->element.str()}, {"lhs", to_json(r.first_failure->lhs)},
                           {"rhs", to_json(r.first_failure->rhs)}};
  return out;
}

inline Json to_json(const LieInternalReport& r) {
  Json out{{"holds", r.holds}, {"checkedThroughDegree", r.checked_degree}};
  if (r.witness) out["witness"] = to_json(*r.witness);
  return out;
}

inline Json to_json(const H2Report& r) {
  Json degrees = Json::array();
  for (const auto& d : r.degrees)
    degrees.push_back({{"degree", d.degree}, {"dimA", d.dim_a}, {"dimC", d.dim_c}, {"rank", d.rank}, {"verdict", d.verdict}});
  return {{"type", r.type}, {"verdict", r.verdict}, {"splitting", r.splitting}, {"degrees", degrees}};
}

inline Json to_json(const StructureIsoReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"degree", row.degree}, {"dimA", row.dim_a.str()}, {"dimComposite", row.composite.str()},
                    {"dimPrim", row.dim_prim}});
  return {{"type", r.type}, {"holds", r.holds}, {"degrees", rows}};
}

inline Json to_json(const std::vector<PbwComponent>& expansion) {
  Json out = Json::array();
  for (const auto& c : expansion)
    out.push_back({{"k", c.k}, {"cooperation", c.cooperation}, {"component", to_json(c.tensor)}});
  return out;
}

// Coefficients a_1..a_N; a constant term is reported only when present.
inline Json to_json(const TruncatedSeries& s) {
  Json coeffs = Json::array();
  for (int n = 1; n <= s.order(); ++n) coeffs.push_back(to_string(s[n]));
  Json out{{"order", s.order()}, {"coefficients", coeffs}};
  if (s[0] != 0) out["constant"] = to_string(s[0]);
  return out;
}

inline Json to_json(const SeriesIdentityReport& r) {
  Json out{{"holds", r.holds}, {"order", r.order}, {"lhs", to_json(r.lhs)}, {"rhs", to_json(r.rhs)}};
  if (r.first_mismatch) out["firstMismatch"] = *r.first_mismatch;
  return out;
}

inline Json to_json(const HomologyReport& r) {
  Json out{{"internalDegree", r.internal_degree},
           {"totDims", r.tot_dims},
           {"eulerCharacteristic", r.euler_characteristic},
           {"differentialChecks",
            {{"dhSquaredZero", r.checks.dh_squared_zero}, {"dvSquaredZero", r.checks.dv_squared_zero},
             {"anticommute", r.checks.anticommute}}},
           {"shift", "H_m(Tot) corresponds to H_{m+1} of the duplicial operadic complex"}};
  if (!r.homology_dims.empty()) out["homologyDims"] = r.homology_dims;
  return out;
}

}  // namespace bialg
