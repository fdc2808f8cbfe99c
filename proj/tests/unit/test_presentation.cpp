#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "algebroid/presentation.hpp"
#include "support.hpp"

using namespace algebroid;
using algebroid::testing::Rng;
using Ints = std::vector<std::int64_t>;

namespace {

NumericalSemigroup G(Ints gens) { return NumericalSemigroup::from_generators(gens); }

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::kInternalMismatch;
}

std::int64_t value_of(const Ints& gens, const ExponentVector& n, std::size_t offset = 0) {
  std::int64_t v = 0;
  for (std::size_t i = 0; i < n.size(); ++i) v += n[i] * gens[i + offset];
  return v;
}

Ints quotients(const NumericalSemigroup& s) {
  const auto d = is_plane(s).d;
  Ints q;
  for (std::size_t j = 1; j < d.size(); ++j) q.push_back(d[j - 1] / d[j]);
  return q;
}

// Visits every (n_1, ..., n_k) with 0 <= n_j <= limit[j - 1].
void for_each_box(const Ints& limit, const std::function<void(const ExponentVector&)>& visit) {
  ExponentVector n(limit.size(), 0);
  while (true) {
    visit(n);
    std::size_t i = 0;
    while (i < n.size() && n[i] == limit[i]) n[i++] = 0;
    if (i == n.size()) return;
    ++n[i];
  }
}

}  // namespace

TEST_CASE("normal_form") {
  const auto s = G({8, 12, 26, 53});
  CHECK(normal_form(s, 52) == ExponentVector{5, 1, 0, 0});
  CHECK(normal_form(s, 0) == ExponentVector{0, 0, 0, 0});
  CHECK(normal_form(G({4, 6, 7}), 14) == ExponentVector{2, 1, 0});
  CHECK(normal_form(s, 91) == ExponentVector{0, 1, 1, 1});
  CHECK(code_of([&] { normal_form(s, 83); }) == ErrorCode::kNotMember);
  CHECK(code_of([] { normal_form(Ints{4, 6}, 7); }) == ErrorCode::kNotMember);
}

TEST_CASE("minimals") {
  CHECK(minimals(G({8, 12, 26, 53})) == std::vector<ExponentVector>{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}});
  CHECK(minimals(G({2, 3})) == std::vector<ExponentVector>{{2}});
  CHECK(minimals(G({30, 42, 280, 855})) ==
        std::vector<ExponentVector>{{5, 0, 0}, {0, 3, 0}, {0, 0, 2}});
  CHECK(code_of([] { minimals(G({4, 5, 6})); }) == ErrorCode::kNotPlane);
}

TEST_CASE("relations") {
  const auto p = relations(G({8, 12, 26, 53}));
  CHECK_FALSE(p.best_effort);
  REQUIRE(p.relations.size() == 3);
  CHECK(to_string(p.relations[0]) == "Y_1^2 = Y_0^3");
  CHECK(to_string(p.relations[1]) == "Y_2^2 = Y_0^5*Y_1");
  CHECK(to_string(p.relations[2]) == "Y_3^2 = Y_0^10*Y_2");
  CHECK(p.relations[2] == Relation{3, 2, {10, 0, 1, 0}});

  const auto ci = relations(G({4, 6, 7}));
  CHECK(ci.best_effort);
  REQUIRE(ci.relations.size() == 2);
  CHECK(to_string(ci.relations[0]) == "Y_1^2 = Y_0^3");
  CHECK(to_string(ci.relations[1]) == "Y_2^2 = Y_0^2*Y_1");

  const auto cusp = relations(G({2, 3}));
  REQUIRE(cusp.relations.size() == 1);
  CHECK(to_string(cusp.relations[0]) == "Y_1^2 = Y_0^3");
  CHECK(relations(NumericalSemigroup()).relations.empty());
  CHECK(code_of([] { relations(G({5, 6, 7, 8})); }) == ErrorCode::kNotPlane);
}

TEST_CASE("graded_relations") {
  using Powers = std::vector<std::pair<std::size_t, std::int64_t>>;
  CHECK(graded_relations(G({8, 12, 26, 53})) == Powers{{1, 2}, {2, 2}, {3, 2}});
  CHECK(graded_relations(G({2, 3})) == Powers{{1, 2}});
  CHECK(graded_relations(G({30, 42, 280, 855})) == Powers{{1, 5}, {2, 3}, {3, 2}});
  Ints degrees;
  for (const auto& r : relations(G({8, 12, 26, 53})).relations) {
    degrees.push_back(std::accumulate(r.monomial.begin(), r.monomial.end(), std::int64_t{0}));
  }
  CHECK(degrees == Ints{3, 6, 11});
  CHECK(code_of([] { graded_relations(G({4, 6, 7})); }) == ErrorCode::kNotPlane);
}

TEST_CASE("generating_function") {
  CHECK(to_string(generating_function(G({8, 12, 26, 53}))) ==
        "(1-t^24)(1-t^52)(1-t^106)/((1-t^8)(1-t^12)(1-t^26)(1-t^53))");
  CHECK(to_string(generating_function(G({30, 42, 280, 855}))) ==
        "(1-t^210)(1-t^840)(1-t^1710)/((1-t^30)(1-t^42)(1-t^280)(1-t^855))");
  CHECK(to_string(generating_function(NumericalSemigroup())) == "1/(1-t)");
  CHECK(to_string(generating_function(G({2, 3}))) == "(1-t^6)/((1-t^2)(1-t^3))");
  CHECK(code_of([] { generating_function(G({3, 5, 7})); }) == ErrorCode::kNotPlane);
}

TEST_CASE("expand_gf") {
  const auto c = expand_gf(generating_function(G({2, 3})), 6);
  CHECK(c == std::vector<mpz_class>{1, 0, 1, 1, 1, 1, 1});
  const auto e = expand_gf(generating_function(G({8, 12, 26, 53})), 84);
  CHECK(e[83] == 0);
  CHECK(e[84] == 1);
  for (const auto& v : expand_gf(generating_function(NumericalSemigroup()), 30)) CHECK(v == 1);
  CHECK(expand_gf(GeneratingFunction{{}, {}}, 3) == std::vector<mpz_class>{1, 0, 0, 0});
}

TEST_CASE("Apery elements have exactly one bounded expression") {
  Rng rng(testing::kSeed);
  for (const auto& gens : testing::plane_corpus(rng, 80, 80)) {
    const auto s = G(gens);
    const Ints q = quotients(s);
    Ints limit;
    for (auto v : q) limit.push_back(v - 1);
    std::map<std::int64_t, int> hits;
    for_each_box(limit, [&](const ExponentVector& n) { ++hits[value_of(gens, n, 1)]; });
    const auto ap = apery_set(s, gens[0]).values;
    REQUIRE(hits.size() == ap.size());
    for (auto w : ap) {
      CHECK(hits[w] == 1);
      const auto nf = normal_form(s, w);
      CHECK(nf[0] == 0);
      CHECK(value_of(gens, nf) == w);
    }
  }
}

TEST_CASE("minimals are the least exponents leaving the Apery set") {
  Rng rng(testing::kSeed + 1);
  for (const auto& gens : testing::plane_corpus(rng, 60, 60)) {
    const auto s = G(gens);
    const Ints q = quotients(s);
    auto outside = [&](const ExponentVector& n) { return s.contains(value_of(gens, n, 1) - gens[0]); };
    std::vector<ExponentVector> least;
    for_each_box(q, [&](const ExponentVector& n) {
      if (!outside(n)) return;
      for (std::size_t j = 0; j < n.size(); ++j) {
        if (n[j] == 0) continue;
        ExponentVector below = n;
        --below[j];
        if (outside(below)) return;
      }
      least.push_back(n);
    });
    auto expected = minimals(s);
    std::sort(least.begin(), least.end());
    std::sort(expected.begin(), expected.end());
    CHECK(least == expected);
  }
}

TEST_CASE("relations balance and the generating function counts the semigroup") {
  Rng rng(testing::kSeed + 2);
  for (const auto& gens : testing::plane_corpus(rng, 150, 120)) {
    const auto s = G(gens);
    const auto p = relations(s);
    const Ints q = quotients(s);
    REQUIRE(p.relations.size() == q.size());
    for (std::size_t j = 0; j < q.size(); ++j) {
      const auto& r = p.relations[j];
      CHECK(r.index == j + 1);
      CHECK(r.power == q[j]);
      CHECK(value_of(gens, r.monomial) == r.power * gens[r.index]);
      for (std::size_t i = r.index; i < r.monomial.size(); ++i) CHECK(r.monomial[i] == 0);
    }
    CHECK(graded_relations(s).size() == q.size());
    const std::int64_t n = s.conductor() + 50;
    const auto c = expand_gf(generating_function(s), n);
    for (std::int64_t i = 0; i <= n; ++i) CHECK(c[static_cast<std::size_t>(i)] == (s.contains(i) ? 1 : 0));
    for (std::int64_t v = 0; v <= s.conductor() + 10; ++v) {
      if (s.contains(v)) CHECK(value_of(gens, normal_form(s, v)) == v);
    }
  }
}
