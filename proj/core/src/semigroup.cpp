#include "algebroid/semigroup.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <sstream>

#include "algebroid/branch.hpp"

namespace algebroid {

namespace {

std::string join(const std::vector<std::int64_t>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

// Least element of S in every residue class mod the smallest generator.
std::vector<std::int64_t> residue_minima(const std::vector<std::int64_t>& gens) {
  const std::int64_t a = gens.front();
  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();
  std::vector<std::int64_t> dist(static_cast<std::size_t>(a), kInf);
  using Item = std::pair<std::int64_t, std::int64_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[0] = 0;
  queue.emplace(0, 0);
  while (!queue.empty()) {
    auto [w, r] = queue.top();
    queue.pop();
    if (w != dist[static_cast<std::size_t>(r)]) continue;
    for (std::size_t i = 1; i < gens.size(); ++i) {
      const std::int64_t nw = w + gens[i];
      const auto nr = static_cast<std::size_t>(nw % a);
      if (nw < dist[nr]) {
        dist[nr] = nw;
        queue.emplace(nw, static_cast<std::int64_t>(nr));
      }
    }
  }
  return dist;
}

// Residue classes w_i + mZ_{>=0} with w_0 = 0 form a monoid iff the class
// minimum never exceeds a pairwise sum landing in its class.
bool classes_closed(const std::vector<std::int64_t>& w, std::int64_t m) {
  std::vector<std::int64_t> least(static_cast<std::size_t>(m), -1);
  for (auto v : w) least[static_cast<std::size_t>(v % m)] = v;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i; j < w.size(); ++j) {
      const std::int64_t s = w[i] + w[j];
      if (s < least[static_cast<std::size_t>(s % m)]) return false;
    }
  }
  return true;
}

void check_apery_shape(const AperySet& a) {
  if (a.base < 1 || a.values.size() != static_cast<std::size_t>(a.base) ||
      a.values.front() != 0) {
    throw Error(ErrorCode::kInvalidArgument, "not an Apery set: wrong size or omega_0 != 0");
  }
  std::vector<bool> seen(static_cast<std::size_t>(a.base), false);
  for (auto v : a.values) {
    if (v < 0 || seen[static_cast<std::size_t>(v % a.base)]) {
      throw Error(ErrorCode::kInvalidArgument, "not an Apery set: repeated residue");
    }
    seen[static_cast<std::size_t>(v % a.base)] = true;
  }
}

}  // namespace

NumericalSemigroup::NumericalSemigroup() : generators_{1} {}

NumericalSemigroup NumericalSemigroup::from_generators(
    const std::vector<std::int64_t>& generators) {
  if (generators.empty()) {
    throw Error(ErrorCode::kNotNumericalSemigroup, "empty generator list");
  }
  std::int64_t g = 0;
  for (auto a : generators) {
    if (a < 1) throw Error(ErrorCode::kNotNumericalSemigroup, "generators must be >= 1");
    g = std::gcd(g, a);
  }
  if (g != 1) {
    throw Error(ErrorCode::kNotNumericalSemigroup,
                "generators " + join(generators) + " have gcd " + std::to_string(g));
  }
  auto sorted = generators;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  const auto dist = residue_minima(sorted);
  const std::int64_t a = sorted.front();
  const auto in_s = [&](std::int64_t n) {
    return n >= 0 && n >= dist[static_cast<std::size_t>(n % a)];
  };

  NumericalSemigroup s;
  s.conductor_ = *std::max_element(dist.begin(), dist.end()) - a + 1;
  s.members_below_conductor_.resize(static_cast<std::size_t>(s.conductor_));
  for (std::int64_t n = 0; n < s.conductor_; ++n) {
    s.members_below_conductor_[static_cast<std::size_t>(n)] = in_s(n);
  }
  s.generators_.clear();
  for (auto gen : sorted) {
    bool decomposable = false;
    for (std::int64_t u = 1; u <= gen / 2 && !decomposable; ++u) {
      decomposable = in_s(u) && in_s(gen - u);
    }
    if (!decomposable) s.generators_.push_back(gen);
  }
  return s;
}

bool NumericalSemigroup::contains(std::int64_t n) const noexcept {
  if (n < 0) return false;
  if (n >= conductor_) return true;
  return members_below_conductor_[static_cast<std::size_t>(n)];
}

std::vector<std::int64_t> NumericalSemigroup::gaps() const {
  std::vector<std::int64_t> out;
  for (std::int64_t n = 0; n < conductor_; ++n) {
    if (!contains(n)) out.push_back(n);
  }
  return out;
}

std::int64_t NumericalSemigroup::gap_count() const noexcept {
  return static_cast<std::int64_t>(
      std::count(members_below_conductor_.begin(), members_below_conductor_.end(), false));
}

AperySet apery_set(const NumericalSemigroup& s, std::int64_t a) {
  if (a < 1 || !s.contains(a)) {
    throw Error(ErrorCode::kBaseNotInSemigroup,
                std::to_string(a) + " is not a positive element of the semigroup");
  }
  AperySet out{a, {}};
  std::vector<bool> found(static_cast<std::size_t>(a), false);
  std::int64_t missing = a;
  for (std::int64_t n = 0; missing > 0; ++n) {
    auto r = static_cast<std::size_t>(n % a);
    if (!found[r] && s.contains(n)) {
      found[r] = true;
      out.values.push_back(n);
      --missing;
    }
  }
  return out;
}

NumericalSemigroup semigroup_of(const AperySet& a) {
  check_apery_shape(a);
  std::vector<std::int64_t> gens{a.base};
  gens.insert(gens.end(), a.values.begin() + 1, a.values.end());
  return NumericalSemigroup::from_generators(gens);
}

FrobeniusConductor frobenius_and_conductor(const NumericalSemigroup& s) {
  const FrobeniusConductor out{s.frobenius(), s.conductor()};
  for (auto a : s.min_generators()) {
    const auto ap = apery_set(s, a);
    if (ap.values.back() - a != out.frobenius) {
      internal_mismatch("largest Apery element minus " + std::to_string(a) +
                        " differs from the Frobenius number");
    }
  }
  return out;
}

bool is_symmetric(const NumericalSemigroup& s) {
  const std::int64_t f = s.frobenius();
  for (std::int64_t z = 0; z <= f; ++z) {
    if (s.contains(z) == s.contains(f - z)) return false;
  }
  return true;
}

std::int64_t d_conductor(const NumericalSemigroup& s, std::int64_t d) {
  if (d < 1) throw Error(ErrorCode::kInvalidArgument, "d must be >= 1");
  std::int64_t n = (s.conductor() + d - 1) / d;
  while (n > 0 && s.contains((n - 1) * d)) --n;
  return n * d;
}

std::string_view to_string(DescentVerdict verdict) {
  switch (verdict) {
    case DescentVerdict::kOk: return "Ok";
    case DescentVerdict::kNotIncreasing: return "NotIncreasing";
    case DescentVerdict::kNegativeValue: return "NegativeValue";
    case DescentVerdict::kNotASemigroup: return "NotASemigroup";
  }
  return "Unknown";
}

Descent descend(const AperySet& a) {
  check_apery_shape(a);
  Descent out;
  const std::int64_t m = a.base;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    out.candidate.push_back(a.values[i] - static_cast<std::int64_t>(i) * m);
  }
  const auto& w = out.candidate;
  if (std::any_of(w.begin(), w.end(), [](std::int64_t v) { return v < 0; })) {
    out.verdict = DescentVerdict::kNegativeValue;
  } else if (std::adjacent_find(w.begin(), w.end(), std::greater_equal<>()) != w.end()) {
    out.verdict = DescentVerdict::kNotIncreasing;
  } else if (!classes_closed(w, m)) {
    out.verdict = DescentVerdict::kNotASemigroup;
  } else {
    out.result = AperySet{m, w};
  }
  return out;
}

AperySet lift(const AperySet& a, std::int64_t m) {
  if (a.base != m) {
    throw Error(ErrorCode::kInvalidArgument, "Apery set base differs from the lift base");
  }
  check_apery_shape(a);
  AperySet out{m, a.values};
  for (std::size_t i = 0; i < out.values.size(); ++i) {
    out.values[i] += static_cast<std::int64_t>(i) * m;
  }
  if (!classes_closed(out.values, m)) {
    throw Error(ErrorCode::kLiftNotSemigroup,
                "lifted values " + join(out.values) + " are not additively closed");
  }
  return out;
}

PlaneCertificate is_plane(const NumericalSemigroup& s) {
  PlaneCertificate cert;
  const auto& a = s.min_generators();
  for (std::size_t i = 0; i < a.size(); ++i) {
    cert.d.push_back(i == 0 ? a[0] : std::gcd(cert.d.back(), a[i]));
  }
  for (std::size_t i = 1; i < a.size(); ++i) {
    if (cert.d[i] >= cert.d[i - 1]) {
      cert.reason = "gcd chain " + join(cert.d) + " is not strictly decreasing";
      return cert;
    }
  }
  for (std::size_t i = 2; i < a.size(); ++i) {
    const std::int64_t l = std::lcm(cert.d[i - 2], a[i - 1]);
    if (a[i] <= l) {
      cert.reason = "a_" + std::to_string(i) + " = " + std::to_string(a[i]) +
                    " is not above lcm(" + std::to_string(cert.d[i - 2]) + ", " +
                    std::to_string(a[i - 1]) + ") = " + std::to_string(l);
      return cert;
    }
  }
  cert.plane = true;
  return cert;
}

IterativeVerdict descent_trace(const NumericalSemigroup& s) {
  IterativeVerdict out;
  std::vector<std::int64_t> chain;
  NumericalSemigroup cur = s;
  while (!cur.is_natural()) {
    DescentStep step;
    step.generators = cur.min_generators();
    step.multiplicity = cur.multiplicity();
    step.apery = apery_set(cur, step.multiplicity);
    step.descent = descend(step.apery);
    chain.push_back(step.multiplicity);
    const bool ok = step.descent.verdict == DescentVerdict::kOk;
    if (!ok) {
      out.reason = "descent at multiplicity " + std::to_string(step.multiplicity) +
                   " fails: " + std::string(to_string(step.descent.verdict));
    }
    out.steps.push_back(step);
    if (!ok) break;
    cur = semigroup_of(*out.steps.back().descent.result);
  }
  out.reached_natural = cur.is_natural();
  out.chain = MultiplicitySequence::from_entries(chain);
  return out;
}

IterativeVerdict is_plane_iterative(const NumericalSemigroup& s) {
  IterativeVerdict out = descent_trace(s);
  if (out.reached_natural) {
    const auto adm = is_plane_admissible(out.chain);
    out.plane = adm.admissible;
    if (!out.plane) {
      out.reason = "multiplicity sequence " + to_string(out.chain) + " not plane-admissible";
    }
  }
  if (out.plane != is_plane(s).plane) {
    internal_mismatch("iterative plane verdict disagrees with the generator criterion for <" +
                      join(s.min_generators()) + ">");
  }
  return out;
}

PlaneBranch realize(const NumericalSemigroup& s) {
  const auto cert = is_plane(s);
  if (!cert.plane) throw Error(ErrorCode::kNotPlane, cert.reason);
  const auto& a = s.min_generators();
  const std::int64_t precision = s.conductor() + 2 * a[0];
  std::vector<TruncatedSeries::Term> y;
  std::int64_t sum = 0;
  std::int64_t corrections = 0;
  for (std::size_t j = 1; j < a.size(); ++j) {
    sum += a[j];
    if (j >= 2) corrections += std::lcm(cert.d[j - 2], a[j - 1]);
    y.emplace_back(sum - corrections, 1);
  }
  return PlaneBranch(TruncatedSeries::monomial(1, a[0], precision),
                     TruncatedSeries(std::move(y), precision));
}

NumericalSemigroup from_multseq(const MultiplicitySequence& e) {
  NumericalSemigroup cur;
  const auto entries = e.entries();
  for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
    cur = semigroup_of(lift(apery_set(cur, *it), *it));
  }
  return cur;
}

CharExponents exponents_of(const NumericalSemigroup& s) {
  const auto cert = is_plane(s);
  if (!cert.plane) throw Error(ErrorCode::kNotPlane, cert.reason);
  const auto& g = s.min_generators();
  const auto& d = cert.d;
  std::vector<std::int64_t> delta;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i < 2) {
      delta.push_back(g[i]);
    } else {
      delta.push_back(g[i] - g[i - 1] * (d[i - 2] / d[i - 1]) + delta[i - 1]);
    }
  }
  return CharExponents::from_deltas(std::move(delta));
}

ConductorForms conductor_closed_forms(const NumericalSemigroup& s, const CharExponents& exps) {
  const auto gens = semigroup_generators(exps);
  if (gens != s.min_generators()) {
    throw Error(ErrorCode::kInvalidArgument,
                "exponents generate <" + join(gens) + ">, not <" + join(s.min_generators()) + ">");
  }
  const auto& d = exps.d;
  ConductorForms out;
  out.via_exponents = conductor_from_exponents(exps);
  std::int64_t partial = 0;
  out.d_conductors.push_back(0);
  for (std::size_t i = 1; i < gens.size(); ++i) {
    partial += (d[i - 1] / d[i] - 1) * (gens[i] - d[i]);
    out.d_conductors.push_back(partial);
  }
  out.via_generators = partial;
  if (out.via_generators != s.conductor() || out.via_exponents != s.conductor()) {
    internal_mismatch("closed conductor formulas disagree with the semigroup conductor");
  }
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (out.d_conductors[i] != d_conductor(s, d[i])) {
      internal_mismatch("closed d-conductor formula disagrees at d = " + std::to_string(d[i]));
    }
  }
  return out;
}

}  // namespace algebroid
