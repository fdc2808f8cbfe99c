#pragma once

#include <cstdint>
#include <vector>

#include "algebroid/multseq.hpp"
#include "algebroid/plane_branch.hpp"
#include "algebroid/semigroup.hpp"
#include "algebroid/series.hpp"

namespace algebroid {

/// Element y_i of an Apery basis: poly is its expression in (x, y) of the
/// normalized branch, value its order omega_i.
struct AperyBasisElement {
  BivariatePoly poly;
  std::int64_t value = 0;
};

/// Element f_i of the witness construction; value is delta-bar_i.
struct WitnessElement {
  BivariatePoly poly;
  std::int64_t value = 0;
};

/// Swaps to order(x) < order(y) and cancels equal leading orders. A y that
/// cancels to zero is kept as the zero series, which requires order(x) = 1.
PlaneBranch normalize(const PlaneBranch& b);

/// Characteristic exponents of a branch. The branch is normalized and, when
/// x is not already a monomial, standardized at increasing caps until the gcd
/// chain reaches 1.
CharExponents characteristic_exponents(const PlaneBranch& b);

/// Reparametrizes so that x = t^{order(x)}. `cap` bounds the precision of
/// the result; it is required when x is exact but not a monomial.
/// Throws NonMonic when the leading coefficient of x is not 1.
PlaneBranch standardize(const PlaneBranch& b, std::int64_t cap = TruncatedSeries::kExact);

/// Quadratic transform (x, y/x), normalized. Exact non-monomial x needs `cap`.
PlaneBranch blowup(const PlaneBranch& b, std::int64_t cap = TruncatedSeries::kExact);

/// Computed by iterated blowup and by Euclidean blocks of the characteristic
/// exponents; throws InternalMismatch if the two disagree.
MultiplicitySequence multiplicity_sequence(const PlaneBranch& b);

/// Apery basis y_0, ..., y_{m-1} with respect to x of normalize(b).
/// Needs precision >= conductor + 2m when b is not exact.
std::vector<AperyBasisElement> apery_basis(const PlaneBranch& b);

/// Semigroup generated by the delta-bar recursion. With `cross_check`, also
/// compares the Apery set with respect to delta_0 against apery_basis() when
/// the branch carries enough precision.
NumericalSemigroup value_semigroup(const PlaneBranch& b, bool cross_check = true);

/// f_0, ..., f_k with orders delta-bar_0, ..., delta-bar_k, as polynomials in
/// the (x, y) of normalize(b).
std::vector<WitnessElement> witness_generators(const PlaneBranch& b);

struct SingularityInvariants {
  /// Conductors along the blowup chain, ending with 0.
  std::vector<std::int64_t> conductor_degrees;
  /// Half of each conductor (number of gaps of a symmetric semigroup).
  std::vector<std::int64_t> singularity_degrees;
  MultiplicitySequence multiplicities;
  std::int64_t hironaka_sum = 0;
};

SingularityInvariants singularity_invariants(const PlaneBranch& b);

struct EquivalenceEvidence {
  bool equivalent = false;
  NumericalSemigroup semigroup1;
  NumericalSemigroup semigroup2;
  MultiplicitySequence multiplicities1;
  MultiplicitySequence multiplicities2;
  std::vector<std::int64_t> conductor_degrees1;
  std::vector<std::int64_t> conductor_degrees2;
};

/// Same value semigroup; asserts that multiplicity sequences and conductor
/// degree sequences give the same verdict.
EquivalenceEvidence formally_equivalent(const PlaneBranch& b1, const PlaneBranch& b2);

/// Successive blowups of normalize(b) until the branch is regular; the first
/// entry is normalize(b) itself. Exact inputs are truncated to a working
/// precision derived from the characteristic exponents.
std::vector<PlaneBranch> blowup_chain(const PlaneBranch& b);

}  // namespace algebroid
