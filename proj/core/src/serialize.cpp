#include "algebroid/serialize.hpp"

#include "algebroid/parser.hpp"

namespace algebroid {

namespace {

constexpr std::int64_t kSafeInteger = std::int64_t{1} << 53;

Json integers(const std::vector<std::int64_t>& v) {
  Json out = Json::array();
  for (auto x : v) out.push_back(json_integer(x));
  return out;
}

}  // namespace

Json json_integer(std::int64_t value) {
  if (value >= TruncatedSeries::kExact) return "exact";
  if (value >= kSafeInteger || value <= -kSafeInteger) return std::to_string(value);
  return value;
}

Json to_json(const Rational& r) { return r.get_str(); }

Json to_json(const TruncatedSeries& s) {
  Json terms = Json::array();
  for (const auto& [e, c] : s.terms()) terms.push_back(Json::array({json_integer(e), to_json(c)}));
  return Json{{"terms", terms}, {"precision", json_integer(s.precision())}};
}

Json to_json(const PlaneBranch& b) {
  return Json{{"text", render_branch(b)}, {"x", to_json(b.x())}, {"y", to_json(b.y())}};
}

Json to_json(const CharExponents& e) {
  return Json{{"delta", integers(e.delta)}, {"d", integers(e.d)}};
}

Json to_json(const NumericalSemigroup& s) {
  return Json{{"generators", integers(s.min_generators())},
              {"conductor", json_integer(s.conductor())},
              {"frobenius", json_integer(s.frobenius())},
              {"gap_count", json_integer(s.gap_count())},
              {"gaps", integers(s.gaps())}};
}

Json to_json(const AperySet& a) {
  return Json{{"base", json_integer(a.base)}, {"values", integers(a.values)}};
}

Json to_json(const MultiplicitySequence& e) {
  Json runs = Json::array();
  for (const auto& r : e.runs()) runs.push_back(Json::array({json_integer(r.entry), json_integer(r.count)}));
  return Json{{"runs", runs}};
}

Json to_json(const BivariatePoly& p) {
  Json out = Json::array();
  for (const auto& [ab, c] : p) {
    out.push_back(Json::array({json_integer(ab.first), json_integer(ab.second), to_json(c)}));
  }
  return out;
}

Json to_json(const Relation& r) {
  return Json{{"index", r.index},
              {"power", json_integer(r.power)},
              {"monomial", integers(r.monomial)},
              {"text", to_string(r)}};
}

Json to_json(const Presentation& p) {
  Json rels = Json::array();
  for (const auto& r : p.relations) rels.push_back(to_json(r));
  return Json{{"generators", integers(p.generators)},
              {"relations", rels},
              {"best_effort", p.best_effort}};
}

Json to_json(const GeneratingFunction& gf) {
  return Json{{"numerator", integers(gf.numerator)},
              {"denominator", integers(gf.denominator)},
              {"text", to_string(gf)}};
}

Json to_json(const PlaneCertificate& c) {
  return Json{{"plane", c.plane}, {"d", integers(c.d)}, {"reason", c.reason}};
}

Json to_json(const Descent& d) {
  Json out{{"verdict", std::string(to_string(d.verdict))}, {"candidate", integers(d.candidate)}};
  if (d.result) out["result"] = to_json(*d.result);
  return out;
}

std::string render_json(const Json& j) { return j.dump(); }

}  // namespace algebroid
