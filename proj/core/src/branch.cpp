#include "algebroid/branch.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "algebroid/presentation.hpp"

namespace algebroid {

namespace {

// Largest standardization cap tried for exact inputs whose x is not a monomial.
constexpr std::int64_t kMaxAdaptiveCap = 1024;

// Apery cross-check in value_semigroup runs only up to this working precision.
constexpr std::int64_t kCrossCheckLimit = 2048;

[[noreturn]] void insufficient(const std::string& what) {
  throw Error(ErrorCode::kInsufficientPrecision, what);
}

bool is_monomial(const TruncatedSeries& s) { return s.term_count() == 1; }

// Monomials X^a Y^b of weight a*wx + b*wy >= bound are dropped.
struct Weights {
  std::int64_t wx;
  std::int64_t wy;
  std::int64_t bound;

  bool keep(std::int64_t a, std::int64_t b) const { return a * wx + b * wy < bound; }
};

void add_scaled(BivariatePoly& p, const BivariatePoly& q, const Rational& c, std::int64_t shift_x,
                std::int64_t shift_y, const Weights& w) {
  for (const auto& [ab, v] : q) {
    const std::int64_t a = ab.first + shift_x;
    const std::int64_t b = ab.second + shift_y;
    if (!w.keep(a, b)) continue;
    auto [it, inserted] = p.try_emplace({a, b}, 0);
    it->second += c * v;
    if (sgn(it->second) == 0) p.erase(it);
  }
}

BivariatePoly multiply(const BivariatePoly& p, const BivariatePoly& q, const Weights& w) {
  BivariatePoly out;
  for (const auto& [ab, v] : p) add_scaled(out, q, v, ab.first, ab.second, w);
  return out;
}

BivariatePoly scaled(const BivariatePoly& p, const Rational& c) {
  BivariatePoly out;
  for (const auto& [ab, v] : p) out.emplace(ab, v * c);
  return out;
}

// Rewrites a polynomial in (x / lambda, y) as a polynomial in (x, y).
BivariatePoly unscale_x(const BivariatePoly& p, const Rational& lambda) {
  BivariatePoly out;
  for (const auto& [ab, v] : p) {
    Rational c = v;
    for (std::int64_t i = 0; i < ab.first; ++i) c /= lambda;
    out.emplace(ab, c);
  }
  return out;
}

PlaneBranch monic_x(const PlaneBranch& n) {
  const Rational lambda = leading_coefficient(n.x());
  if (lambda == 1) return n;
  return PlaneBranch(Rational(1) / lambda * n.x(), n.y());
}

CharExponents scan_exponents(std::int64_t m, const TruncatedSeries& y) {
  std::vector<std::int64_t> delta{m};
  std::int64_t d = m;
  for (const auto& [e, c] : y.terms()) {
    if (d == 1) break;
    if (e % d != 0) {
      delta.push_back(e);
      d = std::gcd(d, e);
    }
  }
  if (d != 1) {
    throw Error(ErrorCode::kGcdNotOne,
                "gcd chain stops at " + std::to_string(d) + " below precision " +
                    std::to_string(y.precision()));
  }
  return CharExponents::from_deltas(std::move(delta));
}

// Normalized branch with monic x, reparametrized so that x = t^m, truncated
// to `bound`.
PlaneBranch standard_at(const PlaneBranch& monic, std::int64_t bound) {
  if (!monic.is_exact() && monic.precision() < bound) {
    insufficient("branch precision " + std::to_string(monic.precision()) + " is below the " +
                 std::to_string(bound) + " needed");
  }
  return standardize(monic.truncated(bound), bound);
}

struct Working {
  PlaneBranch normalized;
  Rational lambda;
  CharExponents exps;
  std::int64_t conductor;
  std::int64_t precision;
  PlaneBranch standard;
};

// Everything needed by the Apery and witness constructions: exponents,
// conductor and the standardized branch at precision conductor + 2 delta_0.
Working working_branch(const PlaneBranch& b) {
  const PlaneBranch n = normalize(b);
  const CharExponents exps = characteristic_exponents(n);
  const std::int64_t c = conductor_from_exponents(exps);
  const std::int64_t w = c + 2 * exps.delta.front();
  const PlaneBranch monic = monic_x(n);
  return Working{n, leading_coefficient(n.x()), exps, c, w, standard_at(monic, w)};
}

}  // namespace

PlaneBranch normalize(const PlaneBranch& b) {
  TruncatedSeries x = b.x();
  TruncatedSeries y = b.y();
  if (y.is_zero()) return b;
  if (order(y) < order(x)) std::swap(x, y);
  while (order(x) == order(y)) {
    const Rational c = leading_coefficient(y) / leading_coefficient(x);
    y = y - c * x;
    if (y.is_zero()) {
      if (order(x) == 1) return PlaneBranch(x, y);
      insufficient("cancelling y against x exhausts the known terms");
    }
  }
  return PlaneBranch(std::move(x), std::move(y));
}

PlaneBranch standardize(const PlaneBranch& b, std::int64_t cap) {
  const PlaneBranch n = normalize(b);
  const TruncatedSeries& x = n.x();
  const std::int64_t m = order(x);
  if (leading_coefficient(x) != 1) {
    throw Error(ErrorCode::kNonMonic,
                "leading coefficient " + leading_coefficient(x).get_str() + " of x is not 1");
  }
  if (is_monomial(x)) return cap < n.precision() ? n.truncated(cap) : n;
  const TruncatedSeries tau = formal_root(x, m, cap);
  const TruncatedSeries sigma = reversion(tau, cap);
  const TruncatedSeries u = sigma.shifted(-1) - TruncatedSeries::constant(1);
  const TruncatedSeries y = reparametrize(n.y(), u);
  const std::int64_t precision = std::min({x.precision(), cap, y.precision()});
  if (y.truncated(precision).is_zero() && m != 1) {
    insufficient("y vanishes after reparametrization");
  }
  return PlaneBranch(TruncatedSeries::monomial(1, m, precision), y.truncated(precision));
}

CharExponents characteristic_exponents(const PlaneBranch& b) {
  const PlaneBranch n = normalize(b);
  const std::int64_t m = order(n.x());
  if (m == 1) return CharExponents::from_deltas({1});
  const PlaneBranch monic = monic_x(n);
  if (is_monomial(monic.x())) return scan_exponents(m, monic.y());

  const std::int64_t available = monic.precision();
  std::int64_t cap = 2 * order(monic.y()) + m + 16;
  while (true) {
    const std::int64_t c = std::min(cap, available);
    try {
      return scan_exponents(m, standardize(monic, c).y());
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kGcdNotOne) throw;
      if (c >= available || cap >= kMaxAdaptiveCap) throw;
    }
    cap *= 2;
  }
}

PlaneBranch blowup(const PlaneBranch& b, std::int64_t cap) {
  const PlaneBranch n = normalize(b);
  if (n.has_zero_y()) {
    throw Error(ErrorCode::kInvalidArgument, "blowup of a regular branch with y = 0");
  }
  return normalize(PlaneBranch(n.x(), divide(n.y(), n.x(), cap)));
}

std::vector<PlaneBranch> blowup_chain(const PlaneBranch& b) {
  const PlaneBranch n = normalize(b);
  const CharExponents exps = characteristic_exponents(n);
  const std::int64_t d0 = exps.delta.front();
  const std::int64_t dk = exps.delta.back();
  const std::int64_t full = conductor_from_exponents(exps) + 2 * d0;
  std::int64_t bound = std::min(full, 2 * dk + 2 * d0) + 2;
  const std::int64_t available = n.is_exact() ? std::max(full, bound) * 4 : n.precision();
  while (true) {
    bound = std::min(bound, available);
    try {
      std::vector<PlaneBranch> chain{n.truncated(bound)};
      if (n.is_exact() && is_monomial(n.x()) && is_monomial(n.y())) chain.back() = n;
      while (!chain.back().has_zero_y() && order(chain.back().x()) > 1) {
        chain.push_back(blowup(chain.back()));
      }
      return chain;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kInsufficientPrecision &&
          e.code() != ErrorCode::kZeroUpToPrecision) {
        throw;
      }
      if (bound >= available) {
        throw Error(ErrorCode::kInsufficientPrecision,
                    std::string("blowup chain needs more precision: ") + e.what());
      }
    }
    bound *= 2;
  }
}

MultiplicitySequence multiplicity_sequence(const PlaneBranch& b) {
  const MultiplicitySequence fast = from_char_exponents(characteristic_exponents(b));
  std::vector<std::int64_t> entries;
  for (const auto& level : blowup_chain(b)) entries.push_back(order(level.x()));
  const MultiplicitySequence slow = MultiplicitySequence::from_entries(entries);
  if (!(slow == fast)) {
    internal_mismatch("blowup chain gives " + to_string(slow) + " but exponent blocks give " +
                      to_string(fast));
  }
  return fast;
}

std::vector<AperyBasisElement> apery_basis(const PlaneBranch& b) {
  const Working w = working_branch(b);
  const std::int64_t m = w.exps.delta.front();
  std::vector<AperyBasisElement> out{{BivariatePoly{{{0, 0}, Rational(1)}}, 0}};
  if (m == 1) return out;

  const std::int64_t bound = w.precision;
  const Weights weights{m, order(w.normalized.y()), bound};
  const TruncatedSeries& y = w.standard.y();
  std::vector<TruncatedSeries> series{TruncatedSeries::constant(1, bound)};
  std::vector<BivariatePoly> polys{out.front().poly};
  std::vector<std::int64_t> owner(static_cast<std::size_t>(m), -1);
  owner[0] = 0;

  for (std::int64_t k = 1; k < m; ++k) {
    TruncatedSeries cur = (y * series.back()).truncated(bound);
    BivariatePoly poly;
    add_scaled(poly, polys.back(), Rational(1), 0, 1, weights);
    while (true) {
      if (cur.is_zero()) insufficient("Apery reduction climbs past precision");
      const std::int64_t o = order(cur);
      const std::int64_t j = owner[static_cast<std::size_t>(o % m)];
      if (j < 0) break;
      const std::int64_t wj = out[static_cast<std::size_t>(j)].value;
      if (o < wj) internal_mismatch("Apery reduction reached a value below its class minimum");
      const std::int64_t q = (o - wj) / m;
      const Rational c = leading_coefficient(cur) / leading_coefficient(series[j]);
      cur = (cur - c * series[static_cast<std::size_t>(j)].shifted(q * m)).truncated(bound);
      add_scaled(poly, polys[static_cast<std::size_t>(j)], -c, q, 0, weights);
    }
    const std::int64_t o = order(cur);
    if (o <= out.back().value) internal_mismatch("Apery values are not increasing");
    owner[static_cast<std::size_t>(o % m)] = k;
    series.push_back(cur);
    polys.push_back(poly);
    out.push_back({unscale_x(poly, w.lambda), o});
  }
  return out;
}

NumericalSemigroup value_semigroup(const PlaneBranch& b, bool cross_check) {
  const CharExponents exps = characteristic_exponents(b);
  const auto gens = semigroup_generators(exps);
  const NumericalSemigroup s = NumericalSemigroup::from_generators(gens);
  if (s.min_generators() != gens) {
    internal_mismatch("generator recursion produced a non-minimal system");
  }
  const std::int64_t needed = conductor_from_exponents(exps) + 2 * exps.delta.front();
  if (cross_check && needed <= kCrossCheckLimit && (b.is_exact() || b.precision() >= needed)) {
    std::vector<std::int64_t> values;
    for (const auto& e : apery_basis(b)) values.push_back(e.value);
    if (values != apery_set(s, exps.delta.front()).values) {
      internal_mismatch("Apery basis values disagree with the semigroup's Apery set");
    }
  }
  return s;
}

std::vector<WitnessElement> witness_generators(const PlaneBranch& b) {
  const Working w = working_branch(b);
  const auto& d = w.exps.d;
  const auto gens = semigroup_generators(w.exps);
  const std::int64_t m = gens.front();
  const std::int64_t bound = w.precision;

  std::vector<TruncatedSeries> f{w.standard.x().truncated(bound)};
  std::vector<BivariatePoly> polys{BivariatePoly{{{1, 0}, Rational(1)}}};
  if (m == 1) return {{unscale_x(polys[0], w.lambda), 1}};
  const Weights weights{m, order(w.normalized.y()), bound};

  using Entry = std::pair<TruncatedSeries, BivariatePoly>;
  std::map<std::pair<std::size_t, std::int64_t>, Entry> cache;
  auto power = [&](std::size_t j, std::int64_t e) -> const Entry& {
    Entry value{TruncatedSeries::constant(1, bound), BivariatePoly{{{0, 0}, Rational(1)}}};
    cache.try_emplace({j, 0}, value);
    for (std::int64_t i = 1; i <= e; ++i) {
      if (auto it = cache.find({j, i}); it != cache.end()) {
        value = it->second;
        continue;
      }
      value.first = (value.first * f[j]).truncated(bound);
      value.second = multiply(value.second, polys[j], weights);
      cache.emplace(std::make_pair(j, i), value);
    }
    return cache.at({j, e});
  };

  // f_1: strip powers of x from y until the order leaves delta_0 Z.
  TruncatedSeries cur = w.standard.y().truncated(bound);
  BivariatePoly poly{{{0, 1}, Rational(1)}};
  while (order(cur) % m == 0) {
    const std::int64_t q = order(cur) / m;
    const Rational c = leading_coefficient(cur);
    cur = (cur - c * TruncatedSeries::monomial(1, q * m, bound)).truncated(bound);
    add_scaled(poly, BivariatePoly{{{q, 0}, Rational(1)}}, -c, 0, 0, weights);
    if (cur.is_zero()) insufficient("witness reduction of y exhausts the known terms");
  }
  auto push_monic = [&](std::size_t i) {
    if (order(cur) != gens[i]) {
      internal_mismatch("witness f_" + std::to_string(i) + " has order " +
                        std::to_string(order(cur)) + ", expected " + std::to_string(gens[i]));
    }
    const Rational inv = Rational(1) / leading_coefficient(cur);
    f.push_back(inv * cur);
    polys.push_back(scaled(poly, inv));
  };
  push_monic(1);

  for (std::size_t i = 1; i + 1 < gens.size(); ++i) {
    const std::int64_t p = d[i - 1] / d[i];
    const auto& fp = power(i, p);
    cur = fp.first;
    poly = fp.second;
    const std::vector<std::int64_t> sub(gens.begin(), gens.begin() + static_cast<std::ptrdiff_t>(i + 1));
    while (order(cur) % d[i] == 0) {
      const std::int64_t v = order(cur);
      std::vector<std::int64_t> n;
      try {
        n = normal_form(sub, v);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kNotMember) throw;
        internal_mismatch("witness value " + std::to_string(v) + " has no representation");
      }
      TruncatedSeries mono = TruncatedSeries::constant(1, bound);
      BivariatePoly mono_poly{{{0, 0}, Rational(1)}};
      for (std::size_t j = 0; j < n.size(); ++j) {
        if (n[j] == 0) continue;
        const auto& pj = power(j, n[j]);
        mono = (mono * pj.first).truncated(bound);
        mono_poly = multiply(mono_poly, pj.second, weights);
      }
      const Rational c = leading_coefficient(cur) / leading_coefficient(mono);
      cur = (cur - c * mono).truncated(bound);
      add_scaled(poly, mono_poly, -c, 0, 0, weights);
      if (cur.is_zero()) insufficient("witness reduction exhausts the known terms");
    }
    push_monic(i + 1);
  }

  std::vector<WitnessElement> out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    out.push_back({unscale_x(polys[i], w.lambda), gens[i]});
  }
  return out;
}

SingularityInvariants singularity_invariants(const PlaneBranch& b) {
  SingularityInvariants out;
  out.multiplicities = multiplicity_sequence(b);
  out.hironaka_sum = hironaka_sum(out.multiplicities);
  for (const auto& level : blowup_chain(b)) {
    const NumericalSemigroup s = value_semigroup(level, false);
    if (2 * s.gap_count() != s.conductor()) {
      internal_mismatch("semigroup along the blowup chain is not symmetric");
    }
    out.conductor_degrees.push_back(s.conductor());
    out.singularity_degrees.push_back(s.gap_count());
  }
  if (out.conductor_degrees.front() != out.hironaka_sum) {
    internal_mismatch("conductor differs from the sum of e(e - 1)");
  }
  return out;
}

EquivalenceEvidence formally_equivalent(const PlaneBranch& b1, const PlaneBranch& b2) {
  EquivalenceEvidence ev;
  ev.semigroup1 = value_semigroup(b1);
  ev.semigroup2 = value_semigroup(b2);
  const auto inv1 = singularity_invariants(b1);
  const auto inv2 = singularity_invariants(b2);
  ev.multiplicities1 = inv1.multiplicities;
  ev.multiplicities2 = inv2.multiplicities;
  ev.conductor_degrees1 = inv1.conductor_degrees;
  ev.conductor_degrees2 = inv2.conductor_degrees;
  ev.equivalent = ev.semigroup1 == ev.semigroup2;
  const bool by_multiplicities = ev.multiplicities1 == ev.multiplicities2;
  const bool by_conductors = ev.conductor_degrees1 == ev.conductor_degrees2;
  if (ev.equivalent != by_multiplicities || ev.equivalent != by_conductors) {
    internal_mismatch("semigroup, multiplicity and conductor-degree verdicts disagree");
  }
  return ev;
}

}  // namespace algebroid
