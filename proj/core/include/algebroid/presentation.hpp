#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "algebroid/semigroup.hpp"

namespace algebroid {

/// Exponents (n_0, ..., n_k) of a monomial Y_0^{n_0} ... Y_k^{n_k}.
using ExponentVector = std::vector<std::int64_t>;

/// Representation of `value` as sum n_j * generators[j]. The bounded form
/// n_j < d_{j-1}/d_j (j >= 1) is found by residue extraction from the last
/// generator down; when that fails (possible only for non-plane generator
/// lists) an exhaustive search preferring small high-index exponents is used.
/// Throws NotMember when no representation exists.
ExponentVector normal_form(const std::vector<std::int64_t>& generators, std::int64_t value);

/// normal_form over the minimal generators of s.
ExponentVector normal_form(const NumericalSemigroup& s, std::int64_t value);

/// Unit vectors (n_1, ..., n_k) with d_{j-1}/d_j at position j. Throws NotPlane.
std::vector<ExponentVector> minimals(const NumericalSemigroup& s);

/// Y_index^power = prod_i Y_i^{monomial[i]}; monomial has one entry per generator.
struct Relation {
  std::size_t index = 0;
  std::int64_t power = 0;
  ExponentVector monomial;

  friend bool operator==(const Relation&, const Relation&) = default;
};

struct Presentation {
  std::vector<std::int64_t> generators;
  std::vector<Relation> relations;
  /// Set for the non-plane fallback, whose relations need not generate the ideal.
  bool best_effort = false;
};

/// Complete intersection relations of C[S] for plane S. Non-plane semigroups
/// with three generators get minimal binomials flagged best effort; larger
/// non-plane ones throw NotPlane.
Presentation relations(const NumericalSemigroup& s);

/// (j, d_{j-1}/d_j): the pure powers generating the initial ideal.
std::vector<std::pair<std::size_t, std::int64_t>> graded_relations(const NumericalSemigroup& s);

/// prod (1 - t^numerator[i]) / prod (1 - t^denominator[i]).
struct GeneratingFunction {
  std::vector<std::int64_t> numerator;
  std::vector<std::int64_t> denominator;

  friend bool operator==(const GeneratingFunction&, const GeneratingFunction&) = default;
};

GeneratingFunction generating_function(const NumericalSemigroup& s);

/// Coefficients of t^0 .. t^n.
std::vector<mpz_class> expand_gf(const GeneratingFunction& gf, std::int64_t n);

/// "(1-t^6)/((1-t^2)(1-t^3))".
std::string to_string(const GeneratingFunction& gf);

/// "Y_1^2 = Y_0^3".
std::string to_string(const Relation& r);

}  // namespace algebroid
