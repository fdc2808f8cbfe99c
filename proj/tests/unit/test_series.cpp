#include <doctest.h>

#include "algebroid/parser.hpp"
#include "algebroid/series.hpp"
#include "support.hpp"

using namespace algebroid;
using algebroid::testing::Rng;

namespace {

TruncatedSeries S(const char* text, std::int64_t precision = TruncatedSeries::kExact) {
  return parse_series(text, precision);
}

Rational Q(const char* text) {
  Rational r(text);
  r.canonicalize();
  return r;
}

std::int64_t epsilon_or_infinite(const TruncatedSeries& g, std::int64_t d) {
  try {
    return dvector(g, {d}).epsilons.front();
  } catch (const Error& e) {
    REQUIRE(e.code() == ErrorCode::kEpsilonBeyondPrecision);
    return std::numeric_limits<std::int64_t>::max();
  }
}

}  // namespace

TEST_CASE("order reads the least stored exponent") {
  CHECK(order(S("t^3 + t^5", 10)) == 3);
  CHECK(order(S("t^12 + t^14 + t^15")) == 12);
  CHECK_THROWS_AS(order(TruncatedSeries({}, 20)), Error);
  try {
    order(TruncatedSeries({}, 20));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kZeroUpToPrecision);
  }
}

TEST_CASE("construction canonicalizes terms") {
  const TruncatedSeries s({{5, 1}, {2, 3}, {5, -1}, {9, 4}}, 8);
  CHECK(s.term_count() == 1);
  CHECK(s.terms().front().first == 2);
  CHECK(s.precision() == 8);
  CHECK(S("0").is_zero());
  CHECK_THROWS_AS(TruncatedSeries({{-1, 1}}), Error);
}

TEST_CASE("ring operations") {
  const TruncatedSeries x = S("t^8");
  const TruncatedSeries y = S("t^12 + t^14 + t^15");
  CHECK(pow(y, 2) == S("t^24 + 2*t^26 + 2*t^27 + t^28 + 2*t^29 + t^30"));
  CHECK(pow(x, 3) == S("t^24"));
  CHECK(pow(y, 2) - pow(x, 3) == S("2*t^26 + 2*t^27 + t^28 + 2*t^29 + t^30"));
  CHECK(pow(y, 0) == TruncatedSeries::constant(1));
  CHECK(arith(ArithOp::kSub, y, y).is_zero());
}

TEST_CASE("precision propagation") {
  const TruncatedSeries a = S("t^2 + t^5", 10);
  const TruncatedSeries b = S("t^3", 7);
  CHECK((a + b).precision() == 7);
  CHECK((a * b).precision() == 9);
  CHECK((a * S("t^0")).precision() == 10);
  CHECK((a * TruncatedSeries({}, 4)).precision() == 4);
  CHECK(pow(b, 3).precision() == 13);
  CHECK_THROWS_AS(a.coefficient(10), Error);
  CHECK(a.coefficient(5) == 1);
}

TEST_CASE("reparametrize") {
  CHECK(reparametrize(S("t^3"), S("-t")) == S("t^3 - 3*t^4 + 3*t^5 - t^6"));
  CHECK(reparametrize(S("t"), S("0")) == S("t"));

  const TruncatedSeries root = formal_root(S("t^2 + t^3"), 2, 12);
  const TruncatedSeries u = root.shifted(-1) - TruncatedSeries::constant(1, root.precision() - 1);
  const TruncatedSeries back = reparametrize(S("t^2"), u);
  CHECK(back == S("t^2 + t^3", back.precision()));
  CHECK(back.precision() >= 12);
}

TEST_CASE("formal_root") {
  CHECK(formal_root(S("t^8"), 8) == S("t"));

  const TruncatedSeries r = formal_root(S("t^2 + t^3"), 2, 8);
  CHECK(r.precision() == 8);
  const std::vector<const char*> expected{"1", "1/2", "-1/8", "1/16", "-5/128", "7/256", "-21/1024"};
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(r.coefficient(static_cast<std::int64_t>(i) + 1) == Q(expected[i]));
  }
  CHECK(pow(r, 2) == S("t^2 + t^3", pow(r, 2).precision()));

  auto code = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kInternalMismatch;
  };
  CHECK(code([] { formal_root(S("t^3 + t^4"), 2, 10); }) == ErrorCode::kNotAPerfectPower);
  CHECK(code([] { formal_root(S("2*t^2 + t^3"), 2, 10); }) == ErrorCode::kNonMonic);
  CHECK(code([] { formal_root(S("t^2 + t^3"), 2); }) == ErrorCode::kInsufficientPrecision);
}

TEST_CASE("inverse and reversion") {
  const TruncatedSeries inv = inverse(S("t^0 - t"), 6);
  CHECK(inv == S("t^0 + t + t^2 + t^3 + t^4 + t^5", 6));
  const TruncatedSeries sigma = reversion(S("t + t^2"), 7);
  CHECK(sigma == S("t - t^2 + 2*t^3 - 5*t^4 + 14*t^5 - 42*t^6", 7));
  const TruncatedSeries u = sigma.shifted(-1) - TruncatedSeries::constant(1, 6);
  const TruncatedSeries composed = reparametrize(S("t + t^2"), u);
  CHECK(composed == S("t", composed.precision()));
  CHECK(divide(S("t^3 + t^4"), S("t^3")) == S("t^0 + t"));
}

TEST_CASE("eval_poly") {
  const TruncatedSeries x = S("t^8");
  const TruncatedSeries y = S("t^12 + t^14 + t^15");
  const BivariatePoly f{{{0, 2}, Rational(1)}, {{3, 0}, Rational(-1)}};
  CHECK(order(eval_poly(f, x, y)) == 26);
  CHECK(eval_poly({{{0, 0}, Rational(1)}}, x, y) == S("t^0"));
  CHECK(eval_poly({{{1, 1}, Rational(1)}}, S("t^4"), S("t^6 + t^7")) == S("t^10 + t^11"));
}

TEST_CASE("dvector") {
  CHECK(dvector(S("t^0 + t^2 + t^3"), {4, 2}).epsilons == std::vector<std::int64_t>{2, 3});
  CHECK(dvector(S("t^0 + t"), {2}).epsilons == std::vector<std::int64_t>{1});
  try {
    dvector(S("t^0 + t^5"), {5});
    FAIL("expected EpsilonBeyondPrecision");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kEpsilonBeyondPrecision);
  }
  CHECK_THROWS_AS(dvector(S("t + t^2"), {2}), Error);
}

TEST_CASE("tail_from rescales to a unit constant term") {
  const TruncatedSeries tail = tail_from(S("t^0 + t^2 + 3*t^5 + 6*t^7", 20), 5);
  CHECK(tail == S("t^0 + 2*t^2", 15));
  CHECK_THROWS_AS(tail_from(S("t^0 + t^2"), 1), Error);
}

TEST_CASE("multiplication commutes and associates on random input") {
  Rng rng(testing::kSeed);
  for (int n = 0; n < 100; ++n) {
    const auto a = testing::random_unit_series(rng, 8, 2).shifted(testing::uniform(rng, 0, 3))
                       .truncated(testing::uniform(rng, 5, 20));
    const auto b = testing::random_unit_series(rng, 8, 3).truncated(testing::uniform(rng, 5, 20));
    const auto c = testing::random_unit_series(rng, 6, 2);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("formal_root composed back and reparametrize keeps the order") {
  Rng rng(testing::kSeed + 1);
  for (int n = 0; n < 60; ++n) {
    const std::int64_t m = testing::uniform(rng, 2, 5);
    const std::int64_t q = testing::uniform(rng, 1, 3);
    const auto unit = testing::random_unit_series(rng, 6, 2);
    const auto s = unit.shifted(m * q);
    const auto root = formal_root(s, m, 30);
    const auto back = pow(root, m);
    CHECK(back == s.truncated(back.precision()));
    CHECK(back.precision() >= 30 + (m - 1) * q);

    const auto u = testing::random_unit_series(rng, 4, 2).shifted(1) - S("t");
    CHECK(order(reparametrize(s, u)) == order(s));
  }
}

TEST_CASE("d-vectors of products dominate and squares keep them") {
  Rng rng(testing::kSeed + 2);
  const std::vector<std::vector<std::int64_t>> chains{{2}, {4, 2}, {6, 3}, {12, 6, 2}, {8, 4, 2}};
  for (int n = 0; n < 500; ++n) {
    const auto& chain = chains[static_cast<std::size_t>(n) % chains.size()];
    const auto g = testing::random_unit_series(rng, 10, chain.back());
    const auto h = testing::random_unit_series(rng, 10, chain.back());
    const auto gh = g * h;
    const auto gg = g * g;
    for (auto d : chain) {
      const std::int64_t eg = epsilon_or_infinite(g, d);
      const std::int64_t eh = epsilon_or_infinite(h, d);
      CHECK(epsilon_or_infinite(gh, d) >= std::min(eg, eh));
      CHECK(epsilon_or_infinite(gg, d) == eg);
    }
  }
}

TEST_CASE("shifted tails lower the later epsilons") {
  Rng rng(testing::kSeed + 3);
  const std::vector<std::int64_t> chain{12, 6, 2};
  for (int n = 0; n < 200; ++n) {
    const std::int64_t e = 6 + 12 * testing::uniform(rng, 0, 2);
    std::vector<TruncatedSeries::Term> terms{{0, Rational(1)}, {e, testing::random_unit(rng)}};
    for (std::int64_t k = 12; k < e; k += 12) {
      if (testing::uniform(rng, 0, 1) == 1) terms.emplace_back(k, testing::random_unit(rng));
    }
    for (std::int64_t k = e + 1; k <= e + 12; ++k) {
      if (testing::uniform(rng, 0, 2) == 0) terms.emplace_back(k, testing::random_unit(rng));
    }
    terms.emplace_back(e + 13, testing::random_unit(rng));
    const TruncatedSeries g(std::move(terms));
    REQUIRE(dvector(g, {chain[0]}).epsilons.front() == e);
    const auto tail = tail_from(g, e);
    CHECK(tail.coefficient(0) == 1);
    for (std::size_t s = 1; s < chain.size(); ++s) {
      CHECK(epsilon_or_infinite(tail, chain[s]) == epsilon_or_infinite(g, chain[s]) - e);
    }
  }
}
