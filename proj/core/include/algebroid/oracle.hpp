#pragma once

#include <cstdint>
#include <vector>

#include "algebroid/plane_branch.hpp"
#include "algebroid/semigroup.hpp"

namespace algebroid {

/// Which integers 0..bound (inclusive) are attained.
struct ValueTable {
  std::int64_t bound = 0;
  std::vector<bool> attained;

  std::vector<std::int64_t> values() const;

  friend bool operator==(const ValueTable&, const ValueTable&) = default;
};

enum class MonomialOrder { kByWeight, kReversed };

/// Orders of C[[x, y]] up to `bound`, by exact row reduction of the monomials
/// x^a y^b with a*order(x) + b*order(y) <= bound. Needs precision >= bound + 1.
/// `order` only changes the sequence rows are inserted in; the pivot set does
/// not depend on it.
ValueTable valuation_oracle(const PlaneBranch& b, std::int64_t bound,
                            MonomialOrder order = MonomialOrder::kByWeight);

/// Additive closure of `generators` on 0..bound by dynamic programming.
ValueTable brute_semigroup(const std::vector<std::int64_t>& generators, std::int64_t bound);

/// Per-residue minima of the closure of `generators`, scanned up to
/// (a - 1) * max(generators) + a. Throws BaseNotInSemigroup.
AperySet brute_apery(const std::vector<std::int64_t>& generators, std::int64_t a);

}  // namespace algebroid
