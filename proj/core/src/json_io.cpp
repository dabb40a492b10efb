#include "dt4/json_io.hpp"

namespace dt4 {

namespace {

Json terms_json(const LaurentPoly& p) {
  Json terms = Json::array();
  for (auto& [m, c] : p.terms()) {
    Json t;
    t["e"] = m.e;
    t["c"] = rat_str(c);
    terms.push_back(std::move(t));
  }
  return terms;
}

LaurentPoly terms_from_json(const Json& j, std::size_t nvars) {
  LaurentPoly p(nvars);
  for (auto& t : j) {
    Mono m(nvars);
    std::size_t i = 0;
    for (auto& e : t.at("e")) m.e.at(i++) = e.get<int32_t>();
    p.add_term(m, rat_parse(t.at("c").get<std::string>()));
  }
  return p;
}

template <class C>
Json series_json(const Series<C>& s) {
  Json j;
  j["dt4-schema"] = 1;
  j["lattice_denominator"] = 4;
  const VarTable& vt = *s.table();
  Json cv = Json::array(), sv = Json::array();
  for (std::size_t i = 0; i < vt.size(); ++i)
    (vt.is_series(i) ? sv : cv).push_back(vt.name(i));
  j["coeff_vars"] = std::move(cv);
  j["series_vars"] = std::move(sv);
  j["order"] = s.order();
  Json terms = Json::array();
  for (auto& [e, c] : s.terms()) {
    Json t;
    t["e"] = e;
    RationalFn f = c.to_rational_fn();
    t["coeff"] = json_of(f);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

}  // namespace

Json json_of(const LaurentPoly& p) {
  Json j;
  j["lattice_denominator"] = 4;
  j["terms"] = terms_json(p);
  return j;
}

LaurentPoly laurent_from_json(const Json& j, std::size_t nvars) {
  return terms_from_json(j.at("terms"), nvars);
}

Json json_of(const RationalFn& f) {
  Json j;
  j["num"] = terms_json(f.num());
  j["den"] = terms_json(f.den());
  return j;
}

RationalFn rationalfn_from_json(const Json& j, std::size_t nvars) {
  return RationalFn(terms_from_json(j.at("num"), nvars), terms_from_json(j.at("den"), nvars));
}

Json json_of(const Series<KFrac>& s) { return series_json(s); }
Json json_of(const Series<CohomFrac>& s) { return series_json(s); }

Json fingerprint_json(const Series<Zp>& s) {
  Json j;
  j["terms"] = Json::array();
  for (auto& [e, c] : s.terms()) {
    Json t;
    t["e"] = e;
    t["residue"] = c.v;
    j["terms"].push_back(std::move(t));
  }
  return j;
}

Json json_of(const Report& r, bool with_timings) {
  Json j;
  j["name"] = r.name;
  j["pass"] = r.pass;
  Json checks = Json::array();
  for (auto& c : r.checks) {
    Json cj;
    cj["exponent"] = c.label;
    cj["status"] = c.pass ? "pass" : "fail";
    if (with_timings) cj["ms"] = c.ms;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  if (!r.sign_vector.empty()) j["sign_vector"] = r.sign_vector;
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

}  // namespace dt4
