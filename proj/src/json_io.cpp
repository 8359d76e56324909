#include "cwsurgery/json_io.hpp"

#include <limits>

#include "cwsurgery/error.hpp"

namespace cwsurgery {

namespace {

Json integer_list(const std::vector<Integer>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(integer_json(v));
  return out;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw DomainError(std::string("link data lacks field '") + key + "'");
  }
  return j.at(key);
}

template <class Fn>
auto read_field(const Json& j, const char* key, Fn&& parse) {
  const Json& v = field(j, key);
  try {
    return parse(v);
  } catch (const DomainError& e) {
    throw DomainError(std::string("link field '") + key + "': " + e.what());
  }
}

}  // namespace

Json integer_json(const Integer& v) {
  if (v.fits_slong_p()) {
    const long x = v.get_si();
    if (x >= std::numeric_limits<std::int64_t>::min() &&
        x <= std::numeric_limits<std::int64_t>::max()) {
      return Json(static_cast<std::int64_t>(x));
    }
  }
  return Json(v.get_str());
}

Json rational_json(const Rational& v) { return Json(v.str()); }

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Integer(std::to_string(j.get<std::uint64_t>()))
                                  : Integer(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw DomainError("expected an integer, got " + j.dump());
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(integer_from_json(j));
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw DomainError("expected an exact rational \"P/Q\", got " + j.dump());
}

Slope slope_from_json(const Json& j) {
  if (j.is_number_integer()) return Slope(integer_from_json(j), 1);
  if (j.is_string()) return Slope::parse(j.get<std::string>());
  throw DomainError("expected a slope \"P/Q\", got " + j.dump());
}

TwoComponentLinkData link_from_json(const Json& j) {
  return TwoComponentLinkData{read_field(j, "a2x", integer_from_json),
                              read_field(j, "a2y", integer_from_json),
                              read_field(j, "a3", rational_from_json),
                              read_field(j, "lk", integer_from_json),
                              read_field(j, "fx", slope_from_json),
                              read_field(j, "fy", slope_from_json)};
}

Json link_json(const TwoComponentLinkData& link) {
  Json j;
  j["a2x"] = integer_json(link.a2x);
  j["a2y"] = integer_json(link.a2y);
  j["a3"] = rational_json(link.a3);
  j["lk"] = integer_json(link.lk);
  j["fx"] = link.fx.str();
  j["fy"] = link.fy.str();
  return j;
}

Json breakdown_json(const SurgeryFormulaBreakdown& b) {
  Json terms;
  terms["a2x_fy"] = rational_json(b.a2x_term);
  terms["fy_unit"] = rational_json(b.fy_unit_term);
  terms["fy_qx"] = rational_json(b.fy_qx_term);
  terms["fy_link"] = rational_json(b.fy_link_term);
  terms["a2y_fx"] = rational_json(b.a2y_term);
  terms["fx_unit"] = rational_json(b.fx_unit_term);
  terms["fx_qy"] = rational_json(b.fx_qy_term);
  terms["fx_link"] = rational_json(b.fx_link_term);
  terms["two_v3"] = rational_json(b.v3_term);
  terms["dedekind_x"] = rational_json(b.dedekind_x_term);
  terms["dedekind_y"] = rational_json(b.dedekind_y_term);
  Json j;
  j["terms"] = std::move(terms);
  j["rhs"] = rational_json(b.rhs);
  j["det"] = rational_json(b.form.det);
  j["signature"] = b.form.signature;
  j["lambda"] = rational_json(b.lambda);
  return j;
}

Json report_json(const ObstructionReport& r) {
  Json j;
  j["p"] = integer_json(r.p);
  j["q"] = integer_json(r.q);
  j["n"] = integer_json(r.n);
  j["l"] = integer_json(r.l);
  j["c"] = integer_json(r.c);
  j["p0"] = integer_json(r.p0);
  j["n0"] = integer_json(r.n0);
  j["verdict"] = std::string(to_string(r.verdict));
  Json rules = Json::array();
  for (const auto& f : r.fired_rules) rules.push_back({{"rule", f.rule}, {"reason", f.reason}});
  j["fired_rules"] = std::move(rules);
  Json cands = Json::array();
  for (const auto& c : r.candidates) {
    cands.push_back({{"m", integer_json(c.solution.m)},
                     {"eps", c.solution.eps},
                     {"eliminated_by", c.eliminated_by}});
  }
  j["candidates"] = std::move(cands);
  return j;
}

Json scan_json(const ScanReport& r) {
  Json j;
  j["p"] = integer_json(r.p);
  j["q"] = integer_json(r.q);
  j["d"] = integer_json(r.decomposition.d);
  j["p_prime"] = integer_json(r.decomposition.p_prime);
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    entries.push_back({{"l", integer_json(e.l)}, {"verdict", std::string(to_string(e.verdict))}});
  }
  j["entries"] = std::move(entries);
  j["all_obstructed"] = r.all_obstructed();
  j["surviving_l"] = integer_list(r.surviving_l());
  return j;
}

Json grid_cell_json(const GridCell& cell) {
  Json j;
  j["p"] = integer_json(cell.p);
  j["q"] = integer_json(cell.q);
  j["slopes_checked"] = cell.slopes_checked;
  j["by_homology"] = cell.by_homology;
  j["by_key"] = cell.by_key;
  j["by_dedekind"] = cell.by_dedekind;
  j["surviving_l"] = integer_list(cell.surviving_l);
  return j;
}

Json case_json(const CaseResult& r) {
  Json j;
  j["c"] = integer_json(r.c);
  j["n"] = integer_json(r.n);
  j["outcome"] = std::string(to_string(r.outcome));
  j["reason"] = r.reason;
  if (!r.surviving_l.empty()) j["surviving_l"] = integer_list(r.surviving_l);
  return j;
}

Json certificate_json(const Certificate& c) {
  Json j;
  j["p"] = integer_json(c.p);
  j["q"] = integer_json(c.q);
  j["class"] = std::string(to_string(c.manifold_class));
  j["clause"] = c.clause;
  j["n_bound"] = integer_json(c.n_bound);
  j["n_bound_reason"] = c.n_bound_reason;
  Json cases = Json::array();
  for (const auto& r : c.cases) cases.push_back(case_json(r));
  j["cases"] = std::move(cases);
  j["issued"] = c.issued;
  if (!c.issued) j["refusal"] = c.refusal;
  return j;
}

Json record_json(const KnotRecord& r) {
  Json j;
  j["name"] = r.name;
  j["det"] = integer_json(r.determinant);
  j["dbc_lspace"] = std::string(to_string(r.dbc_is_lspace));
  j["u"] = r.unknotting_number ? integer_json(*r.unknotting_number) : Json(nullptr);
  j["u_h2"] = r.h2_unknotting_number ? integer_json(*r.h2_unknotting_number) : Json(nullptr);
  j["dbc_surgery"] = r.dbc_surgery ? Json(r.dbc_surgery->str()) : Json(nullptr);
  j["provenance"] = r.provenance;
  return j;
}

Json verdict_json(const CosmeticVerdict& v) {
  Json j;
  j["name"] = v.name;
  Json conds;
  for (const char* key : {"a", "b", "bPrime", "c"}) {
    auto it = v.conditions.find(key);
    conds[key] = std::string(to_string(it == v.conditions.end() ? ConditionState::Unknown : it->second));
  }
  j["conditions"] = std::move(conds);
  j["verdict"] = std::string(to_string(v.verdict));
  j["reasons"] = v.reasons;
  if (v.witness) {
    Json w;
    w["a2"] = integer_json(v.witness->a2);
    w["lambda"] = rational_json(v.witness->lambda);
    w["scan_all_obstructed"] =
        v.witness->scan_all_obstructed ? Json(*v.witness->scan_all_obstructed) : Json(nullptr);
    j["witness"] = std::move(w);
  }
  return j;
}

Json partition_json(const CosmeticPartition& p) {
  Json j;
  j["open"] = p.open;
  j["resolved"] = p.resolved;
  return j;
}

}  // namespace cwsurgery
