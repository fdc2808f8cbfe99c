#include "algebroid/plane_branch.hpp"

#include <numeric>
#include <string>

namespace algebroid {

namespace {

std::int64_t support_gcd(const TruncatedSeries& s, std::int64_t g) {
  for (const auto& [e, c] : s.terms()) g = std::gcd(g, e);
  return g;
}

void check_positive_support(const TruncatedSeries& s, const char* name) {
  if (!s.is_zero() && s.terms().front().first == 0) {
    throw Error(ErrorCode::kInvalidBranch, std::string(name) + " has a constant term");
  }
}

}  // namespace

PlaneBranch::PlaneBranch(TruncatedSeries x, TruncatedSeries y)
    : x_(std::move(x)), y_(std::move(y)) {
  if (x_.is_zero()) throw Error(ErrorCode::kInvalidBranch, "x vanishes up to precision");
  check_positive_support(x_, "x");
  check_positive_support(y_, "y");
  if (y_.is_zero() && order(x_) != 1) {
    throw Error(ErrorCode::kInvalidBranch, "y vanishes up to precision and order(x) > 1");
  }
  if (support_gcd(y_, support_gcd(x_, 0)) != 1) {
    throw Error(ErrorCode::kGcdNotOne, "exponents of x and y share a common factor");
  }
}

std::int64_t PlaneBranch::precision() const noexcept {
  return std::min(x_.precision(), y_.precision());
}

PlaneBranch PlaneBranch::truncated(std::int64_t bound) const {
  try {
    return PlaneBranch(x_.truncated(bound), y_.truncated(bound));
  } catch (const Error& e) {
    throw Error(ErrorCode::kInsufficientPrecision,
                "truncation at " + std::to_string(bound) + " loses the branch: " + e.what());
  }
}

CharExponents CharExponents::from_deltas(std::vector<std::int64_t> delta) {
  if (delta.empty() || delta.front() < 1) {
    throw Error(ErrorCode::kInvalidArgument, "characteristic exponents need delta_0 >= 1");
  }
  CharExponents out;
  out.d.push_back(delta.front());
  for (std::size_t i = 1; i < delta.size(); ++i) {
    if (delta[i] <= delta[i - 1]) {
      throw Error(ErrorCode::kInvalidArgument, "characteristic exponents must increase");
    }
    const std::int64_t g = std::gcd(out.d.back(), delta[i]);
    if (g >= out.d.back()) {
      throw Error(ErrorCode::kInvalidArgument, "gcd chain must strictly decrease");
    }
    out.d.push_back(g);
  }
  if (out.d.back() != 1) {
    throw Error(ErrorCode::kInvalidArgument, "gcd chain must end at 1");
  }
  out.delta = std::move(delta);
  return out;
}

std::vector<std::int64_t> semigroup_generators(const CharExponents& exps) {
  const auto& dl = exps.delta;
  const auto& d = exps.d;
  std::vector<std::int64_t> g;
  for (std::size_t i = 0; i < dl.size(); ++i) {
    if (i < 2) {
      g.push_back(dl[i]);
    } else {
      g.push_back(g[i - 1] * (d[i - 2] / d[i - 1]) + dl[i] - dl[i - 1]);
    }
  }
  return g;
}

std::int64_t conductor_from_exponents(const CharExponents& exps) {
  std::int64_t c = 1 - exps.d.front();
  for (std::size_t i = 1; i < exps.delta.size(); ++i) {
    c += (exps.d[i - 1] - exps.d[i]) * exps.delta[i];
  }
  return c;
}

}  // namespace algebroid
