#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "algebroid/plane_branch.hpp"
#include "algebroid/series.hpp"

namespace algebroid::testing {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kSeed = 20260916;

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi);

/// Small nonzero rational p/q with |p| <= 5, 1 <= q <= 3.
Rational random_unit(Rng& rng);

/// Generators a_0 < ... < a_k <= max_generator built directly from the plane
/// criterion: strictly falling gcds ending at 1 and a_i > lcm(d_{i-2}, a_{i-1}).
std::vector<std::int64_t> random_plane_generators(Rng& rng, std::int64_t max_generator);

/// `count` distinct generator lists from random_plane_generators.
std::vector<std::vector<std::int64_t>> plane_corpus(Rng& rng, std::size_t count,
                                                    std::int64_t max_generator);

/// sum_{i>=1} (d_{i-1} - d_i) delta_i + 1 - d_0, written out independently.
std::int64_t conductor_of_deltas(const std::vector<std::int64_t>& delta);

/// Characteristic exponents with delta_0 in [2, max_delta0] and conductor at
/// most max_conductor.
std::vector<std::int64_t> random_deltas(Rng& rng, std::int64_t max_delta0,
                                        std::int64_t max_conductor);

/// Exact branch with the given characteristic exponents: x = t^{delta_0},
/// y carries the characteristic terms with random coefficients plus random
/// terms that do not change the exponents. With `perturb` the parameter is
/// changed to t + c t^2 and the coordinates may be swapped, so x is no longer
/// a monomial.
PlaneBranch random_branch(Rng& rng, const std::vector<std::int64_t>& delta, bool perturb);

/// Plane semigroups reached from all exponent sequences with conductor
/// <= max_conductor, as brute-force minimal generator lists.
std::set<std::vector<std::int64_t>> plane_semigroups_via_exponents(std::int64_t max_conductor);

/// Membership of the additive closure on 0..bound, computed by a queue walk
/// rather than by dynamic programming.
std::vector<bool> closure_by_walk(const std::vector<std::int64_t>& generators,
                                  std::int64_t bound);

/// Minimal generators of the closure, by trial removal.
std::vector<std::int64_t> minimal_by_removal(const std::vector<std::int64_t>& generators);

/// Random polynomial with constant term 1, terms up to `degree`, and at least
/// one exponent prime to `divisor`.
TruncatedSeries random_unit_series(Rng& rng, std::int64_t degree, std::int64_t divisor);

}  // namespace algebroid::testing
