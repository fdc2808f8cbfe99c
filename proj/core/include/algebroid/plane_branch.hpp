#pragma once

#include <cstdint>
#include <vector>

#include "algebroid/series.hpp"

namespace algebroid {

/// A plane branch C[[x, y]] inside C[[t]], given by the parametrization
/// (x(t), y(t)).
///
/// Both series have positive order. The zero series is allowed for y only
/// when order(x) = 1; it marks a regular branch whose second coordinate has
/// been cancelled completely. The exponents stored in x and y must have
/// gcd 1, otherwise the ring is not birational to C[[t]].
class PlaneBranch {
 public:
  PlaneBranch(TruncatedSeries x, TruncatedSeries y);

  const TruncatedSeries& x() const noexcept { return x_; }
  const TruncatedSeries& y() const noexcept { return y_; }

  std::int64_t precision() const noexcept;
  bool is_exact() const noexcept { return x_.is_exact() && y_.is_exact(); }
  bool has_zero_y() const noexcept { return y_.is_zero(); }

  PlaneBranch truncated(std::int64_t bound) const;

  friend bool operator==(const PlaneBranch&, const PlaneBranch&) = default;

 private:
  TruncatedSeries x_;
  TruncatedSeries y_;
};

/// Characteristic exponents (delta_0, ..., delta_k) with the gcd chain
/// d_i = gcd(delta_0, ..., delta_i); d_0 = delta_0 > d_1 > ... > d_k = 1.
struct CharExponents {
  std::vector<std::int64_t> delta;
  std::vector<std::int64_t> d;

  std::size_t k() const noexcept { return delta.empty() ? 0 : delta.size() - 1; }

  /// Validates strict increase and strict gcd descent down to 1.
  static CharExponents from_deltas(std::vector<std::int64_t> delta);

  friend bool operator==(const CharExponents&, const CharExponents&) = default;
};

/// Semigroup generators from the exponents:
/// g_0 = delta_0, g_1 = delta_1, g_i = g_{i-1} d_{i-2}/d_{i-1} + delta_i - delta_{i-1}.
std::vector<std::int64_t> semigroup_generators(const CharExponents& exps);

/// Conductor sum_{i>=1} (d_{i-1} - d_i) delta_i + 1 - d_0.
std::int64_t conductor_from_exponents(const CharExponents& exps);

}  // namespace algebroid
