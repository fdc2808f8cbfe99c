#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "algebroid/error.hpp"

namespace algebroid {

/// Exact rational number; mpq_class keeps values in lowest terms with a
/// positive denominator.
using Rational = mpq_class;

/// Truncated formal power series in one variable t with rational
/// coefficients.
///
/// Every exponent below precision() is represented faithfully; coefficients at
/// or beyond it are unknown. A series whose precision is kExact is a
/// polynomial known completely. Terms are stored sparsely in increasing
/// exponent order and never hold a zero coefficient.
class TruncatedSeries {
 public:
  using Term = std::pair<std::int64_t, Rational>;

  static constexpr std::int64_t kExact = std::int64_t{1} << 60;

  /// The exact zero series.
  TruncatedSeries() = default;

  /// Builds from unsorted terms. Repeated exponents accumulate, zero sums and
  /// exponents >= precision are dropped. Negative exponents are rejected.
  TruncatedSeries(std::vector<Term> terms, std::int64_t precision = kExact);

  static TruncatedSeries monomial(const Rational& coefficient, std::int64_t exponent,
                                  std::int64_t precision = kExact);
  static TruncatedSeries constant(const Rational& value,
                                  std::int64_t precision = kExact);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::int64_t precision() const noexcept { return precision_; }
  bool is_exact() const noexcept { return precision_ >= kExact; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  /// Coefficient of t^exponent; throws InsufficientPrecision beyond precision.
  Rational coefficient(std::int64_t exponent) const;

  /// Largest stored exponent, or -1 for the zero series.
  std::int64_t max_exponent() const noexcept;

  /// Same series with precision lowered to min(precision(), bound).
  TruncatedSeries truncated(std::int64_t bound) const;

  /// Multiplies by t^shift. A negative shift divides by t^-shift and requires
  /// every stored exponent (and the precision) to stay non-negative.
  TruncatedSeries shifted(std::int64_t shift) const;

  /// Wraps terms that are already sorted, nonzero and below precision.
  static TruncatedSeries from_canonical(std::vector<Term> terms, std::int64_t precision);

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

 private:
  std::vector<Term> terms_;
  std::int64_t precision_ = kExact;
};

/// Least exponent with a nonzero coefficient. Throws ZeroUpToPrecision when no
/// term is stored, since 0 and "order >= precision" cannot be told apart.
std::int64_t order(const TruncatedSeries& s);
const Rational& leading_coefficient(const TruncatedSeries& s);

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a);
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(const Rational& c, const TruncatedSeries& s);

enum class ArithOp { kAdd, kSub, kMul };

/// Ring operation with the documented precision propagation:
/// add/sub keep min(Pa, Pb); mul keeps min(Pa + order(b), Pb + order(a)) when
/// both orders exist and min(Pa, Pb) otherwise.
TruncatedSeries arith(ArithOp op, const TruncatedSeries& a, const TruncatedSeries& b);

/// s^exponent by repeated squaring (same precision as naive repetition).
TruncatedSeries pow(const TruncatedSeries& s, std::int64_t exponent);

/// Multiplicative inverse of a series with nonzero constant term. An exact
/// non-constant input has an infinite inverse, so `cap` must then be finite.
TruncatedSeries inverse(const TruncatedSeries& unit,
                        std::int64_t cap = TruncatedSeries::kExact);

/// a / b where order(b) <= every exponent of a. Same capping rule as inverse().
TruncatedSeries divide(const TruncatedSeries& a, const TruncatedSeries& b,
                       std::int64_t cap = TruncatedSeries::kExact);

/// s(t * (1 + u(t))) for order(u) >= 1. Result precision is
/// min(Ps, order(s) + Pu).
TruncatedSeries reparametrize(const TruncatedSeries& s, const TruncatedSeries& u);

/// tau with tau^m = s, where order(s) = m*q and s is monic.
/// Throws NotAPerfectPower or NonMonic. An exact input that is not a monomial
/// has an infinite root and needs a finite `cap`.
TruncatedSeries formal_root(const TruncatedSeries& s, std::int64_t m,
                            std::int64_t cap = TruncatedSeries::kExact);

/// Compositional inverse sigma of tau = t + O(t^2): tau(sigma(t)) = t.
TruncatedSeries reversion(const TruncatedSeries& tau,
                          std::int64_t cap = TruncatedSeries::kExact);

/// Bivariate polynomial: (a, b) -> coefficient of X^a Y^b.
using BivariatePoly = std::map<std::pair<std::int64_t, std::int64_t>, Rational>;

/// Sum of c * x^a * y^b under the arithmetic precision rules.
TruncatedSeries eval_poly(const BivariatePoly& poly, const TruncatedSeries& x,
                          const TruncatedSeries& y);

/// Per-divisor first exponent that escapes divisibility, for a series with a
/// nonzero constant term.
struct DVector {
  std::vector<std::int64_t> divisors;
  std::vector<std::int64_t> epsilons;

  friend bool operator==(const DVector&, const DVector&) = default;
};

/// epsilon_s = least stored exponent not divisible by divisors[s].
/// Throws EpsilonBeyondPrecision when every stored exponent is divisible.
DVector dvector(const TruncatedSeries& g, const std::vector<std::int64_t>& divisors);

/// (sum_{i >= e} a_i t^{i-e}) / a_e: the tail from exponent e, shifted down
/// and rescaled to a unit constant term.
TruncatedSeries tail_from(const TruncatedSeries& g, std::int64_t e);

/// Human readable form such as "t^3 - 3*t^4 + O(t^10)".
std::string to_string(const TruncatedSeries& s);

}  // namespace algebroid
