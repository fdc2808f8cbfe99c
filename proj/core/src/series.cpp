#include "algebroid/series.hpp"

#include <algorithm>
#include <sstream>

namespace algebroid {
namespace {

constexpr std::int64_t kExact = TruncatedSeries::kExact;

std::int64_t sat_add(std::int64_t a, std::int64_t b) {
  if (a >= kExact || b >= kExact) return kExact;
  return std::min(a + b, kExact);
}

[[noreturn]] void insufficient(const std::string& what) {
  throw Error(ErrorCode::kInsufficientPrecision, what);
}

// Collects coefficients into a dense buffer of length `limit`, then emits the
// nonzero ones in order.
class DenseAccumulator {
 public:
  explicit DenseAccumulator(std::int64_t limit)
      : coeffs_(static_cast<std::size_t>(std::max<std::int64_t>(limit, 0))) {}

  std::int64_t limit() const { return static_cast<std::int64_t>(coeffs_.size()); }
  Rational& at(std::int64_t e) { return coeffs_[static_cast<std::size_t>(e)]; }

  TruncatedSeries finish(std::int64_t precision) {
    std::vector<TruncatedSeries::Term> terms;
    for (std::size_t e = 0; e < coeffs_.size(); ++e) {
      if (sgn(coeffs_[e]) != 0) {
        terms.emplace_back(static_cast<std::int64_t>(e), std::move(coeffs_[e]));
      }
    }
    return TruncatedSeries::from_canonical(std::move(terms), precision);
  }

 private:
  std::vector<Rational> coeffs_;
};

// First `length` coefficients of v^alpha for a series v with v_0 = 1, through
// the recurrence n f_n = sum_{k=1}^{n} ((alpha+1) k - n) v_k f_{n-k}.
std::vector<Rational> power_coefficients(const TruncatedSeries& v, const Rational& alpha,
                                         std::int64_t length) {
  std::vector<Rational> f(static_cast<std::size_t>(std::max<std::int64_t>(length, 0)));
  if (length <= 0) return f;
  f[0] = 1;
  const Rational alpha_plus_one = alpha + 1;
  const auto& terms = v.terms();
  Rational acc;
  Rational weight;
  for (std::int64_t n = 1; n < length; ++n) {
    acc = 0;
    for (const auto& [k, vk] : terms) {
      if (k == 0) continue;
      if (k > n) break;
      const Rational& prev = f[static_cast<std::size_t>(n - k)];
      if (sgn(prev) == 0) continue;
      weight = alpha_plus_one * k - n;
      acc += weight * vk * prev;
    }
    if (sgn(acc) != 0) f[static_cast<std::size_t>(n)] = acc / n;
  }
  return f;
}

TruncatedSeries from_dense(std::vector<Rational> coeffs, std::int64_t shift,
                           std::int64_t precision) {
  std::vector<TruncatedSeries::Term> terms;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const std::int64_t e = static_cast<std::int64_t>(i) + shift;
    if (e >= precision) break;
    if (sgn(coeffs[i]) != 0) terms.emplace_back(e, std::move(coeffs[i]));
  }
  return TruncatedSeries::from_canonical(std::move(terms), precision);
}

TruncatedSeries add_scaled(const TruncatedSeries& a, const TruncatedSeries& b,
                           const Rational& scale) {
  const std::int64_t precision = std::min(a.precision(), b.precision());
  std::vector<TruncatedSeries::Term> out;
  out.reserve(a.term_count() + b.term_count());
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  const auto ea = a.terms().end();
  const auto eb = b.terms().end();
  while (ia != ea || ib != eb) {
    std::int64_t e;
    Rational c;
    if (ib == eb || (ia != ea && ia->first < ib->first)) {
      e = ia->first;
      c = ia->second;
      ++ia;
    } else if (ia == ea || ib->first < ia->first) {
      e = ib->first;
      c = scale * ib->second;
      ++ib;
    } else {
      e = ia->first;
      c = ia->second + scale * ib->second;
      ++ia;
      ++ib;
    }
    if (e >= precision) break;
    if (sgn(c) != 0) out.emplace_back(e, std::move(c));
  }
  return TruncatedSeries::from_canonical(std::move(out), precision);
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::vector<Term> terms, std::int64_t precision)
    : precision_(std::min(precision, kExact)) {
  if (precision_ < 1) {
    throw Error(ErrorCode::kInvalidArgument, "series precision must be at least 1");
  }
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  for (auto& [e, c] : terms) {
    if (e < 0) throw Error(ErrorCode::kInvalidArgument, "negative exponent in series");
    if (e >= precision_) break;
    if (!terms_.empty() && terms_.back().first == e) {
      terms_.back().second += c;
      if (sgn(terms_.back().second) == 0) terms_.pop_back();
    } else if (sgn(c) != 0) {
      terms_.emplace_back(e, std::move(c));
    }
  }
}

TruncatedSeries TruncatedSeries::from_canonical(std::vector<Term> terms,
                                                std::int64_t precision) {
  TruncatedSeries s;
  s.terms_ = std::move(terms);
  s.precision_ = std::min(precision, kExact);
  return s;
}

TruncatedSeries TruncatedSeries::monomial(const Rational& coefficient,
                                          std::int64_t exponent, std::int64_t precision) {
  return TruncatedSeries({{exponent, coefficient}}, precision);
}

TruncatedSeries TruncatedSeries::constant(const Rational& value, std::int64_t precision) {
  return monomial(value, 0, precision);
}

Rational TruncatedSeries::coefficient(std::int64_t exponent) const {
  if (exponent >= precision_) {
    insufficient("coefficient of t^" + std::to_string(exponent) +
                 " requested beyond precision " + std::to_string(precision_));
  }
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, std::int64_t e) { return t.first < e; });
  if (it != terms_.end() && it->first == exponent) return it->second;
  return 0;
}

std::int64_t TruncatedSeries::max_exponent() const noexcept {
  return terms_.empty() ? -1 : terms_.back().first;
}

TruncatedSeries TruncatedSeries::truncated(std::int64_t bound) const {
  if (bound >= precision_) return *this;
  std::vector<Term> kept;
  for (const auto& term : terms_) {
    if (term.first >= bound) break;
    kept.push_back(term);
  }
  return from_canonical(std::move(kept), bound);
}

TruncatedSeries TruncatedSeries::shifted(std::int64_t shift) const {
  const std::int64_t precision = is_exact() ? kExact : precision_ + shift;
  if (precision < 1 || (!terms_.empty() && terms_.front().first + shift < 0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "division by t^" + std::to_string(-shift) + " is not exact");
  }
  std::vector<Term> moved;
  moved.reserve(terms_.size());
  for (const auto& [e, c] : terms_) moved.emplace_back(e + shift, c);
  return from_canonical(std::move(moved), precision);
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a.precision_ == b.precision_ && a.terms_ == b.terms_;
}

std::int64_t order(const TruncatedSeries& s) {
  if (s.is_zero()) {
    throw Error(ErrorCode::kZeroUpToPrecision,
                s.is_exact() ? "order of the zero series"
                             : "series vanishes below precision " +
                                   std::to_string(s.precision()));
  }
  return s.terms().front().first;
}

const Rational& leading_coefficient(const TruncatedSeries& s) {
  order(s);
  return s.terms().front().second;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  return add_scaled(a, b, Rational(1));
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  return add_scaled(a, b, Rational(-1));
}

TruncatedSeries operator-(const TruncatedSeries& a) { return Rational(-1) * a; }

TruncatedSeries operator*(const Rational& c, const TruncatedSeries& s) {
  if (sgn(c) == 0) return TruncatedSeries::from_canonical({}, s.precision());
  std::vector<TruncatedSeries::Term> out;
  out.reserve(s.term_count());
  for (const auto& [e, v] : s.terms()) out.emplace_back(e, c * v);
  return TruncatedSeries::from_canonical(std::move(out), s.precision());
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  std::int64_t precision;
  if (!a.is_zero() && !b.is_zero()) {
    precision = std::min(sat_add(a.precision(), order(b)), sat_add(b.precision(), order(a)));
  } else {
    precision = std::min(a.precision(), b.precision());
  }
  if (a.is_zero() || b.is_zero()) return TruncatedSeries::from_canonical({}, precision);

  const std::int64_t limit = std::min(precision, a.max_exponent() + b.max_exponent() + 1);
  DenseAccumulator acc(limit);
  for (const auto& [ea, ca] : a.terms()) {
    if (ea + order(b) >= limit) break;
    for (const auto& [eb, cb] : b.terms()) {
      const std::int64_t e = ea + eb;
      if (e >= limit) break;
      acc.at(e) += ca * cb;
    }
  }
  return acc.finish(precision);
}

TruncatedSeries arith(ArithOp op, const TruncatedSeries& a, const TruncatedSeries& b) {
  switch (op) {
    case ArithOp::kAdd: return a + b;
    case ArithOp::kSub: return a - b;
    case ArithOp::kMul: return a * b;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown arithmetic operation");
}

TruncatedSeries pow(const TruncatedSeries& s, std::int64_t exponent) {
  if (exponent < 0) throw Error(ErrorCode::kInvalidArgument, "negative power");
  TruncatedSeries result = TruncatedSeries::constant(1);
  TruncatedSeries base = s;
  bool first = true;
  while (exponent > 0) {
    if (exponent & 1) {
      result = first ? base : result * base;
      first = false;
    }
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

TruncatedSeries inverse(const TruncatedSeries& unit, std::int64_t cap) {
  if (unit.is_zero() || order(unit) != 0) {
    throw Error(ErrorCode::kInvalidArgument, "inverse needs a nonzero constant term");
  }
  const Rational inv0 = 1 / leading_coefficient(unit);
  if (unit.term_count() == 1) {
    return TruncatedSeries::constant(inv0, std::min(unit.precision(), cap));
  }
  const std::int64_t precision = std::min(unit.precision(), cap);
  if (precision >= kExact) insufficient("inverse of an exact non-constant series needs a cap");

  // f_n = -inv0 * sum_{k=1}^{n} v_k f_{n-k}
  std::vector<Rational> f(static_cast<std::size_t>(precision));
  f[0] = inv0;
  Rational acc;
  for (std::int64_t n = 1; n < precision; ++n) {
    acc = 0;
    for (const auto& [k, vk] : unit.terms()) {
      if (k == 0) continue;
      if (k > n) break;
      const Rational& prev = f[static_cast<std::size_t>(n - k)];
      if (sgn(prev) != 0) acc += vk * prev;
    }
    if (sgn(acc) != 0) f[static_cast<std::size_t>(n)] = -inv0 * acc;
  }
  return from_dense(std::move(f), 0, precision);
}

TruncatedSeries divide(const TruncatedSeries& a, const TruncatedSeries& b, std::int64_t cap) {
  const std::int64_t e = order(b);
  if (!a.is_zero() && order(a) < e) {
    throw Error(ErrorCode::kInvalidArgument, "division result is not a power series");
  }
  if (!a.is_exact() && a.precision() < e) {
    insufficient("dividend precision below divisor order");
  }
  const TruncatedSeries num = a.is_zero() ? TruncatedSeries::from_canonical(
                                                {}, a.is_exact() ? kExact : a.precision() - e)
                                          : a.shifted(-e);
  return num * inverse(b.shifted(-e), cap);
}

TruncatedSeries reparametrize(const TruncatedSeries& s, const TruncatedSeries& u) {
  if (!u.is_zero() && order(u) < 1) {
    throw Error(ErrorCode::kInvalidArgument, "reparametrization needs order(u) >= 1");
  }
  if (s.is_zero()) return s;
  const std::int64_t precision = std::min(s.precision(), sat_add(order(s), u.precision()));
  if (u.is_zero()) return s.truncated(precision);

  // 1 + u, with v_0 = 1
  const TruncatedSeries one_plus_u = TruncatedSeries::constant(1) + u;
  const std::int64_t u_degree = u.max_exponent();
  const std::int64_t limit = std::min(precision, s.max_exponent() * (1 + u_degree) + 1);
  DenseAccumulator acc(limit);
  for (const auto& [j, bj] : s.terms()) {
    if (j >= limit) break;
    // coefficients of (1+u)^j below limit - j; exact polynomials stop at degree j*deg(u)
    const std::int64_t length = std::min(limit - j, j * u_degree + 1);
    const std::vector<Rational> f = power_coefficients(one_plus_u, Rational(j), length);
    for (std::int64_t i = 0; i < length; ++i) {
      const Rational& c = f[static_cast<std::size_t>(i)];
      if (sgn(c) != 0) acc.at(j + i) += bj * c;
    }
  }
  return acc.finish(precision);
}

TruncatedSeries formal_root(const TruncatedSeries& s, std::int64_t m, std::int64_t cap) {
  if (m < 1) throw Error(ErrorCode::kInvalidArgument, "root index must be positive");
  const std::int64_t n = order(s);
  if (n % m != 0) {
    throw Error(ErrorCode::kNotAPerfectPower,
                "order " + std::to_string(n) + " is not divisible by " + std::to_string(m));
  }
  if (leading_coefficient(s) != 1) {
    throw Error(ErrorCode::kNonMonic, "leading coefficient " +
                                          leading_coefficient(s).get_str() + " is not 1");
  }
  const std::int64_t q = n / m;
  const TruncatedSeries unit = s.shifted(-n);
  std::int64_t precision = s.is_exact() ? kExact : q + unit.precision();
  precision = std::min(precision, cap);
  if (unit.term_count() == 1) return TruncatedSeries::monomial(1, q, precision);
  if (precision >= kExact) insufficient("root of an exact non-monomial series needs a cap");
  return from_dense(power_coefficients(unit, Rational(1, m), precision - q), q, precision);
}

TruncatedSeries reversion(const TruncatedSeries& tau, std::int64_t cap) {
  if (order(tau) != 1 || leading_coefficient(tau) != 1) {
    throw Error(ErrorCode::kInvalidArgument, "reversion needs tau = t + O(t^2)");
  }
  const std::int64_t precision = std::min(tau.precision(), cap);
  if (tau.term_count() == 1) return TruncatedSeries::monomial(1, 1, precision);
  if (precision >= kExact) insufficient("reversion of an exact non-linear series needs a cap");

  // Lagrange inversion: [t^n] sigma = (1/n) [t^{n-1}] h^n, h = t / tau.
  const TruncatedSeries h = inverse(tau.shifted(-1), precision - 1);
  std::vector<Rational> sigma(static_cast<std::size_t>(precision));
  for (std::int64_t n = 1; n < precision; ++n) {
    const std::vector<Rational> hn = power_coefficients(h, Rational(n), n);
    const Rational& c = hn[static_cast<std::size_t>(n - 1)];
    if (sgn(c) != 0) sigma[static_cast<std::size_t>(n)] = c / n;
  }
  return from_dense(std::move(sigma), 0, precision);
}

TruncatedSeries eval_poly(const BivariatePoly& poly, const TruncatedSeries& x,
                          const TruncatedSeries& y) {
  std::map<std::int64_t, TruncatedSeries> x_powers;
  std::map<std::int64_t, TruncatedSeries> y_powers;
  auto power_of = [](std::map<std::int64_t, TruncatedSeries>& cache,
                     const TruncatedSeries& base, std::int64_t e) -> const TruncatedSeries& {
    auto it = cache.find(e);
    if (it == cache.end()) it = cache.emplace(e, pow(base, e)).first;
    return it->second;
  };
  TruncatedSeries total;
  for (const auto& [exponents, c] : poly) {
    if (sgn(c) == 0) continue;
    const auto [a, b] = exponents;
    total = total + c * (power_of(x_powers, x, a) * power_of(y_powers, y, b));
  }
  return total;
}

DVector dvector(const TruncatedSeries& g, const std::vector<std::int64_t>& divisors) {
  if (g.is_zero() || order(g) != 0) {
    throw Error(ErrorCode::kInvalidArgument, "d-vector needs a nonzero constant term");
  }
  DVector out{divisors, {}};
  for (const std::int64_t d : divisors) {
    if (d < 1) throw Error(ErrorCode::kInvalidArgument, "divisors must be positive");
    auto it = std::find_if(g.terms().begin(), g.terms().end(),
                           [d](const TruncatedSeries::Term& t) { return t.first % d != 0; });
    if (it == g.terms().end()) {
      throw Error(ErrorCode::kEpsilonBeyondPrecision,
                  "every stored exponent is divisible by " + std::to_string(d));
    }
    out.epsilons.push_back(it->first);
  }
  return out;
}

TruncatedSeries tail_from(const TruncatedSeries& g, std::int64_t e) {
  const Rational lead = g.coefficient(e);
  if (sgn(lead) == 0) {
    throw Error(ErrorCode::kInvalidArgument, "tail must start at a stored exponent");
  }
  std::vector<TruncatedSeries::Term> kept;
  for (const auto& [exp, c] : g.terms()) {
    if (exp >= e) kept.emplace_back(exp - e, c / lead);
  }
  return TruncatedSeries::from_canonical(std::move(kept),
                                         g.is_exact() ? kExact : g.precision() - e);
}

std::string to_string(const TruncatedSeries& s) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : s.terms()) {
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << "-";
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    if (mag != 1 || e == 0) {
      out << mag.get_str();
      if (e != 0) out << "*";
    }
    if (e != 0) out << "t^" << e;
    first = false;
  }
  if (first) out << "0";
  if (!s.is_exact()) out << " + O(t^" << s.precision() << ")";
  return out.str();
}

}  // namespace algebroid
