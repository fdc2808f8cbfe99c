#pragma once

#include <nlohmann/json.hpp>

#include <string>

#include "algebroid/branch.hpp"
#include "algebroid/multseq.hpp"
#include "algebroid/presentation.hpp"
#include "algebroid/semigroup.hpp"
#include "algebroid/series.hpp"

namespace algebroid {

/// Keys keep insertion order so output is byte-stable.
using Json = nlohmann::ordered_json;

/// Integers beyond 2^53 become decimal strings; the exact precision marker
/// becomes "exact".
Json json_integer(std::int64_t value);

Json to_json(const Rational& r);
Json to_json(const TruncatedSeries& s);
Json to_json(const PlaneBranch& b);
Json to_json(const CharExponents& e);
Json to_json(const NumericalSemigroup& s);
Json to_json(const AperySet& a);
Json to_json(const MultiplicitySequence& e);
Json to_json(const BivariatePoly& p);
Json to_json(const Relation& r);
Json to_json(const Presentation& p);
Json to_json(const GeneratingFunction& gf);
Json to_json(const PlaneCertificate& c);
Json to_json(const Descent& d);

/// Compact single-line dump.
std::string render_json(const Json& j);

}  // namespace algebroid
