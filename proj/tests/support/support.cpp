#include "support.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace algebroid::testing {

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

Rational random_unit(Rng& rng) {
  std::int64_t p = 0;
  while (p == 0) p = uniform(rng, -5, 5);
  Rational r(static_cast<long>(p), static_cast<unsigned long>(uniform(rng, 1, 3)));
  r.canonicalize();
  return r;
}

std::vector<std::int64_t> random_plane_generators(Rng& rng, std::int64_t max_generator) {
  while (true) {
    const std::int64_t a0 = uniform(rng, 2, std::min<std::int64_t>(24, max_generator - 1));
    std::vector<std::int64_t> gens{a0};
    std::vector<std::int64_t> d{a0};
    bool ok = true;
    while (ok && d.back() > 1) {
      const std::size_t i = gens.size();
      const std::int64_t lower = i == 1 ? a0 + 1 : std::lcm(d[i - 2], gens[i - 1]) + 1;
      std::vector<std::int64_t> candidates;
      for (std::int64_t a = lower; a <= max_generator; ++a) {
        if (std::gcd(d.back(), a) < d.back()) candidates.push_back(a);
      }
      if (candidates.empty()) {
        ok = false;
        break;
      }
      const std::int64_t a =
          candidates[static_cast<std::size_t>(uniform(rng, 0, std::ssize(candidates) - 1))];
      gens.push_back(a);
      d.push_back(std::gcd(d.back(), a));
    }
    if (ok) return gens;
  }
}

std::vector<std::vector<std::int64_t>> plane_corpus(Rng& rng, std::size_t count,
                                                    std::int64_t max_generator) {
  std::set<std::vector<std::int64_t>> seen;
  std::vector<std::vector<std::int64_t>> out;
  while (out.size() < count) {
    auto gens = random_plane_generators(rng, max_generator);
    if (seen.insert(gens).second) out.push_back(std::move(gens));
  }
  return out;
}

std::int64_t conductor_of_deltas(const std::vector<std::int64_t>& delta) {
  std::int64_t d = delta[0];
  std::int64_t c = 1 - delta[0];
  for (std::size_t i = 1; i < delta.size(); ++i) {
    const std::int64_t next = std::gcd(d, delta[i]);
    c += (d - next) * delta[i];
    d = next;
  }
  return c;
}

std::vector<std::int64_t> random_deltas(Rng& rng, std::int64_t max_delta0,
                                        std::int64_t max_conductor) {
  while (true) {
    const std::int64_t d0 = uniform(rng, 2, max_delta0);
    std::vector<std::int64_t> delta{d0};
    std::int64_t d = d0;
    while (d > 1) {
      std::int64_t e = 0;
      do {
        e = delta.back() + uniform(rng, 1, 3 * d0);
      } while (std::gcd(d, e) == d);
      delta.push_back(e);
      d = std::gcd(d, e);
    }
    if (conductor_of_deltas(delta) <= max_conductor) return delta;
  }
}

PlaneBranch random_branch(Rng& rng, const std::vector<std::int64_t>& delta, bool perturb) {
  std::vector<TruncatedSeries::Term> y;
  for (std::size_t i = 1; i < delta.size(); ++i) y.emplace_back(delta[i], random_unit(rng));
  std::vector<std::int64_t> gcds{delta[0]};
  for (std::size_t i = 1; i < delta.size(); ++i) gcds.push_back(std::gcd(gcds.back(), delta[i]));
  const std::int64_t top = delta.back() + 2 * delta[0];
  const std::int64_t extras = uniform(rng, 0, 3);
  for (std::int64_t n = 0; n < extras; ++n) {
    const std::int64_t e = uniform(rng, delta[0] + 1, top);
    std::size_t j = 0;
    while (j + 1 < delta.size() && delta[j + 1] <= e) ++j;
    if (e % gcds[j] != 0 || std::find(delta.begin(), delta.end(), e) != delta.end()) continue;
    y.emplace_back(e, random_unit(rng));
  }
  TruncatedSeries xs = TruncatedSeries::monomial(1, delta[0]);
  TruncatedSeries ys(std::move(y));
  if (!perturb) return PlaneBranch(xs, ys);
  const TruncatedSeries u = TruncatedSeries::monomial(random_unit(rng), 1);
  if (uniform(rng, 0, 1) == 1) xs = xs + TruncatedSeries::monomial(random_unit(rng), delta.back() + 1);
  xs = reparametrize(xs, u);
  ys = reparametrize(ys, u);
  if (uniform(rng, 0, 1) == 1) return PlaneBranch(ys, xs);
  return PlaneBranch(xs, ys);
}

std::vector<bool> closure_by_walk(const std::vector<std::int64_t>& generators,
                                  std::int64_t bound) {
  std::vector<bool> seen(static_cast<std::size_t>(bound + 1), false);
  std::deque<std::int64_t> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    const std::int64_t n = queue.front();
    queue.pop_front();
    for (auto g : generators) {
      const std::int64_t next = n + g;
      if (next <= bound && !seen[static_cast<std::size_t>(next)]) {
        seen[static_cast<std::size_t>(next)] = true;
        queue.push_back(next);
      }
    }
  }
  return seen;
}

std::vector<std::int64_t> minimal_by_removal(const std::vector<std::int64_t>& generators) {
  std::vector<std::int64_t> sorted = generators;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<std::int64_t> out;
  for (auto g : sorted) {
    if (out.empty() || !closure_by_walk(out, g)[static_cast<std::size_t>(g)]) out.push_back(g);
  }
  return out;
}

namespace {

std::vector<std::int64_t> generators_of_deltas(const std::vector<std::int64_t>& delta) {
  std::vector<std::int64_t> d{delta[0]};
  for (std::size_t i = 1; i < delta.size(); ++i) d.push_back(std::gcd(d.back(), delta[i]));
  std::vector<std::int64_t> g{delta[0]};
  if (delta.size() > 1) g.push_back(delta[1]);
  for (std::size_t i = 2; i < delta.size(); ++i) {
    g.push_back(g[i - 1] * d[i - 2] / d[i - 1] + delta[i] - delta[i - 1]);
  }
  return g;
}

void extend_deltas(std::vector<std::int64_t>& delta, std::int64_t limit,
                   std::set<std::vector<std::int64_t>>& out) {
  std::int64_t d = delta[0];
  for (std::size_t i = 1; i < delta.size(); ++i) d = std::gcd(d, delta[i]);
  if (d == 1) {
    out.insert(minimal_by_removal(generators_of_deltas(delta)));
    return;
  }
  for (std::int64_t e = delta.back() + 1; e <= delta.back() + 2 * limit + 4; ++e) {
    if (std::gcd(d, e) == d) continue;
    delta.push_back(e);
    std::int64_t partial = 1 - delta[0];
    std::int64_t dd = delta[0];
    for (std::size_t i = 1; i < delta.size(); ++i) {
      const std::int64_t next = std::gcd(dd, delta[i]);
      partial += (dd - next) * delta[i];
      dd = next;
    }
    if (partial <= limit) extend_deltas(delta, limit, out);
    delta.pop_back();
  }
}

}  // namespace

std::set<std::vector<std::int64_t>> plane_semigroups_via_exponents(std::int64_t max_conductor) {
  std::set<std::vector<std::int64_t>> out;
  for (std::int64_t d0 = 2; d0 <= max_conductor + 1; ++d0) {
    std::vector<std::int64_t> delta{d0};
    extend_deltas(delta, max_conductor, out);
  }
  return out;
}

TruncatedSeries random_unit_series(Rng& rng, std::int64_t degree, std::int64_t divisor) {
  while (true) {
    std::vector<TruncatedSeries::Term> terms{{0, Rational(1)}};
    std::int64_t g = 0;
    bool escapes = false;
    for (std::int64_t e = 1; e <= degree; ++e) {
      if (uniform(rng, 0, 2) != 0) continue;
      terms.emplace_back(e, random_unit(rng));
      g = std::gcd(g, e);
      escapes = escapes || e % divisor != 0;
    }
    if (g == 1 && escapes) return TruncatedSeries(std::move(terms));
  }
}

}  // namespace algebroid::testing
