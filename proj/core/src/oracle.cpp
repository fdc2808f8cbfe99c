#include "algebroid/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace algebroid {

namespace {

using Row = std::vector<std::pair<std::int64_t, Rational>>;

Row to_row(const TruncatedSeries& s, std::int64_t bound) {
  Row row;
  for (const auto& [e, c] : s.terms()) {
    if (e > bound) break;
    row.emplace_back(e, c);
  }
  return row;
}

// row -= c * pivot, both sorted by exponent.
Row eliminate(const Row& row, const Row& pivot, const Rational& c) {
  Row out;
  out.reserve(row.size() + pivot.size());
  auto i = row.begin();
  auto j = pivot.begin();
  while (i != row.end() || j != pivot.end()) {
    if (j == pivot.end() || (i != row.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == row.end() || j->first < i->first) {
      out.emplace_back(j->first, -c * j->second);
      ++j;
    } else {
      Rational v = i->second - c * j->second;
      if (sgn(v) != 0) out.emplace_back(i->first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

std::vector<std::int64_t> ValueTable::values() const {
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < attained.size(); ++i) {
    if (attained[i]) out.push_back(static_cast<std::int64_t>(i));
  }
  return out;
}

ValueTable valuation_oracle(const PlaneBranch& b, std::int64_t bound, MonomialOrder mode) {
  if (bound < 0) throw Error(ErrorCode::kInvalidArgument, "bound must be >= 0");
  if (!b.is_exact() && b.precision() < bound + 1) {
    throw Error(ErrorCode::kInsufficientPrecision,
                "oracle bound " + std::to_string(bound) + " needs precision " +
                    std::to_string(bound + 1));
  }
  const TruncatedSeries x = b.x().truncated(bound + 1);
  const TruncatedSeries y = b.y().truncated(bound + 1);
  const std::int64_t vx = order(x);
  const bool has_y = !y.is_zero();
  const std::int64_t vy = has_y ? order(y) : bound + 1;

  struct Monomial {
    std::int64_t weight;
    std::int64_t a;
    std::int64_t b;
  };
  std::vector<Monomial> monomials;
  for (std::int64_t bb = 0; bb * vy <= bound; ++bb) {
    for (std::int64_t a = 0; a * vx + bb * vy <= bound; ++a) {
      monomials.push_back({a * vx + bb * vy, a, bb});
    }
  }
  std::sort(monomials.begin(), monomials.end(), [](const Monomial& l, const Monomial& r) {
    return std::tie(l.weight, l.b, l.a) < std::tie(r.weight, r.b, r.a);
  });
  if (mode == MonomialOrder::kReversed) std::reverse(monomials.begin(), monomials.end());

  std::map<std::int64_t, TruncatedSeries> x_powers{{0, TruncatedSeries::constant(1, bound + 1)}};
  std::map<std::int64_t, TruncatedSeries> y_powers{{0, TruncatedSeries::constant(1, bound + 1)}};
  auto power = [&](std::map<std::int64_t, TruncatedSeries>& cache, const TruncatedSeries& base,
                   std::int64_t e) -> const TruncatedSeries& {
    auto it = cache.lower_bound(e);
    if (it != cache.end() && it->first == e) return it->second;
    it = std::prev(it);
    for (std::int64_t i = it->first + 1; i <= e; ++i) {
      it = cache.emplace(i, (it->second * base).truncated(bound + 1)).first;
    }
    return it->second;
  };

  std::map<std::int64_t, Row> pivots;
  for (const auto& mono : monomials) {
    Row row = to_row(power(x_powers, x, mono.a) * power(y_powers, y, mono.b), bound);
    while (!row.empty()) {
      const auto it = pivots.find(row.front().first);
      if (it == pivots.end()) break;
      row = eliminate(row, it->second, row.front().second);
    }
    if (row.empty()) continue;
    const Rational lead = row.front().second;
    for (auto& [e, c] : row) c /= lead;
    const std::int64_t key = row.front().first;
    pivots.emplace(key, std::move(row));
  }

  ValueTable out{bound, std::vector<bool>(static_cast<std::size_t>(bound + 1), false)};
  for (const auto& [e, row] : pivots) out.attained[static_cast<std::size_t>(e)] = true;
  return out;
}

ValueTable brute_semigroup(const std::vector<std::int64_t>& generators, std::int64_t bound) {
  std::int64_t g = 0;
  for (auto a : generators) {
    if (a < 1) throw Error(ErrorCode::kNotNumericalSemigroup, "generators must be >= 1");
    g = std::gcd(g, a);
  }
  if (g != 1) throw Error(ErrorCode::kNotNumericalSemigroup, "generators must have gcd 1");
  ValueTable out{bound, std::vector<bool>(static_cast<std::size_t>(bound + 1), false)};
  out.attained[0] = true;
  for (std::int64_t n = 1; n <= bound; ++n) {
    for (auto a : generators) {
      if (a <= n && out.attained[static_cast<std::size_t>(n - a)]) {
        out.attained[static_cast<std::size_t>(n)] = true;
        break;
      }
    }
  }
  return out;
}

AperySet brute_apery(const std::vector<std::int64_t>& generators, std::int64_t a) {
  if (generators.empty()) throw Error(ErrorCode::kNotNumericalSemigroup, "empty generator list");
  if (a < 1) throw Error(ErrorCode::kBaseNotInSemigroup, "base must be >= 1");
  const std::int64_t top = *std::max_element(generators.begin(), generators.end());
  const std::int64_t bound = (a - 1) * top + a;
  const ValueTable table = brute_semigroup(generators, bound);
  if (!table.attained[static_cast<std::size_t>(a)]) {
    throw Error(ErrorCode::kBaseNotInSemigroup, std::to_string(a) + " is not in the closure");
  }
  std::vector<std::int64_t> least(static_cast<std::size_t>(a), -1);
  for (std::int64_t n = 0; n <= bound; ++n) {
    auto& slot = least[static_cast<std::size_t>(n % a)];
    if (slot < 0 && table.attained[static_cast<std::size_t>(n)]) slot = n;
  }
  std::sort(least.begin(), least.end());
  return AperySet{a, least};
}

}  // namespace algebroid
