#include "algebroid/presentation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace algebroid {

namespace {

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  a %= p;
  for (std::int64_t x = 1; x < p; ++x) {
    if ((a * x) % p == 1) return x;
  }
  return p == 1 ? 0 : -1;
}

std::vector<std::int64_t> gcd_chain(const std::vector<std::int64_t>& g) {
  std::vector<std::int64_t> d;
  for (std::size_t i = 0; i < g.size(); ++i) d.push_back(i == 0 ? g[0] : std::gcd(d.back(), g[i]));
  return d;
}

bool residue_extraction(const std::vector<std::int64_t>& g, std::int64_t value, ExponentVector& n) {
  const auto d = gcd_chain(g);
  n.assign(g.size(), 0);
  std::int64_t v = value;
  for (std::size_t j = g.size() - 1; j >= 1; --j) {
    const std::int64_t p = d[j - 1] / d[j];
    if (v % d[j] != 0) return false;
    const std::int64_t inv = mod_inverse(g[j] / d[j], p);
    if (inv < 0) return false;
    n[j] = ((v / d[j]) % p) * inv % p;
    v -= n[j] * g[j];
    if (v < 0) return false;
  }
  if (v % g[0] != 0) return false;
  n[0] = v / g[0];
  return true;
}

// reach[j][v]: v is a combination of g_0, ..., g_j.
std::vector<std::vector<bool>> reach_table(const std::vector<std::int64_t>& g, std::int64_t value) {
  std::vector<std::vector<bool>> reach(g.size(), std::vector<bool>(static_cast<std::size_t>(value + 1)));
  for (std::size_t j = 0; j < g.size(); ++j) {
    auto& r = reach[j];
    for (std::int64_t v = 0; v <= value; ++v) {
      bool ok = v == 0 || (j > 0 && reach[j - 1][static_cast<std::size_t>(v)]);
      if (!ok && v >= g[j]) ok = r[static_cast<std::size_t>(v - g[j])];
      r[static_cast<std::size_t>(v)] = ok;
    }
  }
  return reach;
}

bool exhaustive(const std::vector<std::int64_t>& g, std::int64_t value, ExponentVector& n) {
  const auto reach = reach_table(g, value);
  if (!reach.back()[static_cast<std::size_t>(value)]) return false;
  n.assign(g.size(), 0);
  std::int64_t v = value;
  for (std::size_t j = g.size() - 1; j >= 1; --j) {
    while (!reach[j - 1][static_cast<std::size_t>(v)]) {
      v -= g[j];
      ++n[j];
    }
  }
  n[0] = v / g[0];
  return true;
}

// Least c >= 1 with c * g[j] a combination of the generators in `allowed`,
// together with that combination.
std::pair<std::int64_t, ExponentVector> least_multiple(const std::vector<std::int64_t>& g,
                                                       std::size_t j,
                                                       const std::vector<std::size_t>& allowed) {
  std::vector<std::int64_t> sub;
  for (auto i : allowed) sub.push_back(g[i]);
  std::int64_t step = 0;
  for (auto v : sub) step = std::gcd(step, v);
  for (std::int64_t c = 1;; ++c) {
    if ((c * g[j]) % step != 0) continue;
    ExponentVector local;
    std::vector<std::int64_t> scaled;
    for (auto v : sub) scaled.push_back(v / step);
    if (exhaustive(scaled, c * g[j] / step, local)) {
      ExponentVector full(g.size(), 0);
      for (std::size_t i = 0; i < allowed.size(); ++i) full[allowed[i]] = local[i];
      return {c, full};
    }
  }
}

void check_balance(const std::vector<std::int64_t>& g, const Relation& r) {
  std::int64_t rhs = 0;
  for (std::size_t i = 0; i < g.size(); ++i) rhs += r.monomial[i] * g[i];
  if (rhs != r.power * g[r.index]) internal_mismatch("relation " + to_string(r) + " is unbalanced");
}

Presentation fallback_relations(const NumericalSemigroup& s) {
  const auto& g = s.min_generators();
  Presentation out{g, {}, true};
  bool lower_rule = true;
  std::vector<Relation> lower;
  for (std::size_t j = 1; j < g.size(); ++j) {
    std::vector<std::size_t> below(j);
    std::iota(below.begin(), below.end(), 0);
    std::vector<std::size_t> others;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (i != j) others.push_back(i);
    }
    const auto [q, mono] = least_multiple(g, j, below);
    if (q != least_multiple(g, j, others).first) lower_rule = false;
    lower.push_back({j, q, mono});
  }
  if (lower_rule) {
    out.relations = lower;
    return out;
  }
  for (std::size_t j = 0; j < g.size(); ++j) {
    std::vector<std::size_t> others;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (i != j) others.push_back(i);
    }
    auto [c, mono] = least_multiple(g, j, others);
    const Relation r{j, c, mono};
    auto pure = [&](const ExponentVector& v) {
      return std::count(v.begin(), v.end(), 0) == static_cast<std::ptrdiff_t>(v.size() - 1);
    };
    // Y_j^c = Y_i^p and Y_i^p = Y_j^c are the same binomial.
    const bool duplicate = std::any_of(out.relations.begin(), out.relations.end(), [&](const Relation& o) {
      return pure(mono) && pure(o.monomial) && mono[o.index] == o.power && o.monomial[j] == c;
    });
    if (!duplicate) out.relations.push_back(r);
  }
  return out;
}

}  // namespace

ExponentVector normal_form(const std::vector<std::int64_t>& generators, std::int64_t value) {
  if (generators.empty() || value < 0) {
    throw Error(ErrorCode::kNotMember, std::to_string(value) + " has no representation");
  }
  ExponentVector n;
  if (residue_extraction(generators, value, n)) return n;
  if (exhaustive(generators, value, n)) return n;
  throw Error(ErrorCode::kNotMember, std::to_string(value) + " has no representation");
}

ExponentVector normal_form(const NumericalSemigroup& s, std::int64_t value) {
  if (!s.contains(value)) {
    throw Error(ErrorCode::kNotMember, std::to_string(value) + " is not in the semigroup");
  }
  return normal_form(s.min_generators(), value);
}

std::vector<ExponentVector> minimals(const NumericalSemigroup& s) {
  const auto cert = is_plane(s);
  if (!cert.plane) throw Error(ErrorCode::kNotPlane, cert.reason);
  const std::size_t k = cert.d.size() - 1;
  std::vector<ExponentVector> out;
  for (std::size_t j = 1; j <= k; ++j) {
    ExponentVector v(k, 0);
    v[j - 1] = cert.d[j - 1] / cert.d[j];
    out.push_back(v);
  }
  return out;
}

Presentation relations(const NumericalSemigroup& s) {
  const auto cert = is_plane(s);
  const auto& g = s.min_generators();
  if (!cert.plane) {
    if (g.size() != 3) throw Error(ErrorCode::kNotPlane, cert.reason);
    auto out = fallback_relations(s);
    for (const auto& r : out.relations) check_balance(g, r);
    return out;
  }
  Presentation out{g, {}, false};
  for (std::size_t j = 1; j < g.size(); ++j) {
    const std::int64_t p = cert.d[j - 1] / cert.d[j];
    ExponentVector n = normal_form(s, p * g[j]);
    for (std::size_t i = j; i < n.size(); ++i) {
      if (n[i] != 0) internal_mismatch("relation monomial uses an index >= " + std::to_string(j));
    }
    out.relations.push_back({j, p, std::move(n)});
    check_balance(g, out.relations.back());
  }
  return out;
}

std::vector<std::pair<std::size_t, std::int64_t>> graded_relations(const NumericalSemigroup& s) {
  const auto cert = is_plane(s);
  if (!cert.plane) throw Error(ErrorCode::kNotPlane, cert.reason);
  std::vector<std::pair<std::size_t, std::int64_t>> out;
  for (const auto& r : relations(s).relations) {
    const std::int64_t degree = std::accumulate(r.monomial.begin(), r.monomial.end(), std::int64_t{0});
    if (degree <= r.power) {
      internal_mismatch("initial form of " + to_string(r) + " is not the pure power");
    }
    out.emplace_back(r.index, r.power);
  }
  return out;
}

GeneratingFunction generating_function(const NumericalSemigroup& s) {
  const auto cert = is_plane(s);
  if (!cert.plane) throw Error(ErrorCode::kNotPlane, cert.reason);
  const auto& g = s.min_generators();
  GeneratingFunction gf;
  gf.denominator = g;
  for (std::size_t j = 1; j < g.size(); ++j) {
    gf.numerator.push_back(cert.d[j - 1] / cert.d[j] * g[j]);
  }
  return gf;
}

std::vector<mpz_class> expand_gf(const GeneratingFunction& gf, std::int64_t n) {
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "expansion degree must be >= 0");
  std::vector<mpz_class> c(static_cast<std::size_t>(n + 1), 0);
  c[0] = 1;
  for (auto a : gf.numerator) {
    for (std::int64_t i = n; i >= a; --i) {
      c[static_cast<std::size_t>(i)] -= c[static_cast<std::size_t>(i - a)];
    }
  }
  for (auto b : gf.denominator) {
    for (std::int64_t i = b; i <= n; ++i) {
      c[static_cast<std::size_t>(i)] += c[static_cast<std::size_t>(i - b)];
    }
  }
  return c;
}

std::string to_string(const GeneratingFunction& gf) {
  auto factor = [](std::int64_t e) {
    return e == 1 ? std::string("(1-t)") : "(1-t^" + std::to_string(e) + ")";
  };
  std::string num;
  for (auto a : gf.numerator) num += factor(a);
  if (num.empty()) num = "1";
  std::string den;
  for (auto b : gf.denominator) den += factor(b);
  if (gf.denominator.size() > 1) den = "(" + den + ")";
  return den.empty() ? num : num + "/" + den;
}

std::string to_string(const Relation& r) {
  std::ostringstream os;
  auto power = [&](std::size_t i, std::int64_t e) {
    os << "Y_" << i;
    if (e != 1) os << '^' << e;
  };
  power(r.index, r.power);
  os << " = ";
  bool any = false;
  for (std::size_t i = 0; i < r.monomial.size(); ++i) {
    if (r.monomial[i] == 0) continue;
    if (any) os << '*';
    power(i, r.monomial[i]);
    any = true;
  }
  if (!any) os << '1';
  return os.str();
}

}  // namespace algebroid
