#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "algebroid/multseq.hpp"
#include "algebroid/plane_branch.hpp"

namespace algebroid {

/// "x = <series>; y = <series> [; prec = N]" in any order, whitespace and
/// newlines allowed between tokens. Without prec both series are exact
/// polynomials; with prec, terms at or beyond N are dropped.
/// Throws SyntaxError (codes SyntaxError, DuplicateVariable,
/// NonPositiveExponent) or the PlaneBranch validation errors.
PlaneBranch parse_branch(std::string_view input);

/// A single series: "0" or a signed sum of [rat*]t^n terms, at `precision`.
TruncatedSeries parse_series(std::string_view input,
                             std::int64_t precision = TruncatedSeries::kExact);

/// "<a,b,c>" or "a,b,c". Throws SyntaxError or NotNumericalSemigroup.
std::vector<std::int64_t> parse_semigroup(std::string_view input);

/// "30,12^2,6^13,4,2^9,1^2": entries e or runs e^h. Throws SyntaxError or
/// NotNonIncreasing.
MultiplicitySequence parse_multseq(std::string_view input);

std::string render_series(const TruncatedSeries& s);
std::string render_branch(const PlaneBranch& b);
std::string render_semigroup(const std::vector<std::int64_t>& generators);
std::string render_multseq(const MultiplicitySequence& e);

}  // namespace algebroid
