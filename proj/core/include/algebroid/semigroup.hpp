#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "algebroid/multseq.hpp"
#include "algebroid/plane_branch.hpp"

namespace algebroid {

/// Numerical semigroup: a submonoid of N with finite complement.
class NumericalSemigroup {
 public:
  /// The semigroup N.
  NumericalSemigroup();

  /// Closure of `generators`; throws NotNumericalSemigroup unless the list is
  /// nonempty, positive and coprime.
  static NumericalSemigroup from_generators(const std::vector<std::int64_t>& generators);

  const std::vector<std::int64_t>& min_generators() const noexcept { return generators_; }
  std::int64_t conductor() const noexcept { return conductor_; }
  std::int64_t frobenius() const noexcept { return conductor_ - 1; }
  std::int64_t multiplicity() const noexcept { return generators_.front(); }
  std::size_t embedding_dimension() const noexcept { return generators_.size(); }
  bool is_natural() const noexcept { return conductor_ == 0; }

  bool contains(std::int64_t n) const noexcept;
  std::vector<std::int64_t> gaps() const;
  std::int64_t gap_count() const noexcept;

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return a.generators_ == b.generators_;
  }

 private:
  std::vector<std::int64_t> generators_;
  std::int64_t conductor_ = 0;
  std::vector<bool> members_below_conductor_;
};

/// Ordered Apery set: for each residue mod `base`, the least element of S in
/// that class, sorted increasingly.
struct AperySet {
  std::int64_t base = 1;
  std::vector<std::int64_t> values;

  friend bool operator==(const AperySet&, const AperySet&) = default;
};

/// Throws BaseNotInSemigroup unless a is a positive element of S.
AperySet apery_set(const NumericalSemigroup& s, std::int64_t a);

/// The semigroup whose Apery set with respect to its base is `a`.
NumericalSemigroup semigroup_of(const AperySet& a);

struct FrobeniusConductor {
  std::int64_t frobenius;
  std::int64_t conductor;
};

/// Frobenius number and conductor, cross-checked against the largest Apery
/// element minus the base for every minimal generator.
FrobeniusConductor frobenius_and_conductor(const NumericalSemigroup& s);

/// z in S iff frobenius - z not in S, for 0 <= z <= frobenius.
bool is_symmetric(const NumericalSemigroup& s);

/// Least n*d such that every multiple m*d with m >= n lies in S.
std::int64_t d_conductor(const NumericalSemigroup& s, std::int64_t d);

enum class DescentVerdict { kOk, kNotIncreasing, kNegativeValue, kNotASemigroup };

std::string_view to_string(DescentVerdict verdict);

/// One blowup step on the semigroup level: candidate values omega_i - i*m.
struct Descent {
  DescentVerdict verdict = DescentVerdict::kOk;
  std::vector<std::int64_t> candidate;
  std::optional<AperySet> result;
};

Descent descend(const AperySet& a);

/// Inverse of descend: omega'_i + i*m. Throws LiftNotSemigroup when the
/// induced residue classes are not additively closed.
AperySet lift(const AperySet& a, std::int64_t m);

struct PlaneCertificate {
  bool plane = false;
  std::vector<std::int64_t> d;
  /// Empty when plane; otherwise names the first violated condition.
  std::string reason;
};

/// Minimal generators a_0 < ... < a_k must satisfy d_0 > d_1 > ... > d_k = 1
/// and a_i > lcm(d_{i-2}, a_{i-1}) for i >= 2.
PlaneCertificate is_plane(const NumericalSemigroup& s);

struct DescentStep {
  std::vector<std::int64_t> generators;
  std::int64_t multiplicity = 0;
  AperySet apery;
  Descent descent;
};

struct IterativeVerdict {
  bool plane = false;
  bool reached_natural = false;
  std::vector<DescentStep> steps;
  MultiplicitySequence chain;
  std::string reason;
};

/// Full descent trace from S down to N (or to the first failure).
IterativeVerdict descent_trace(const NumericalSemigroup& s);

/// Descent to N followed by plane admissibility of the multiplicity chain.
/// Asserts agreement with is_plane().
IterativeVerdict is_plane_iterative(const NumericalSemigroup& s);

/// x = t^{a_0}, y = t^{a_1} + t^{a_1 + a_2 - lcm(d_0, a_1)} + ..., at
/// precision conductor + 2 a_0. Throws NotPlane.
PlaneBranch realize(const NumericalSemigroup& s);

/// Rebuilds the semigroup by lifting from N along the sequence, last entry
/// first. Throws BaseNotInSemigroup or LiftNotSemigroup.
NumericalSemigroup from_multseq(const MultiplicitySequence& e);

/// Characteristic exponents recovered from the generators of a plane
/// semigroup by inverting the generator recursion.
CharExponents exponents_of(const NumericalSemigroup& s);

struct ConductorForms {
  std::int64_t via_generators = 0;
  std::int64_t via_exponents = 0;
  /// c_{d_i}(S) for i = 0..k.
  std::vector<std::int64_t> d_conductors;
};

/// Both closed conductor formulas and the d_i-conductor family, each asserted
/// equal to the brute-force scans.
ConductorForms conductor_closed_forms(const NumericalSemigroup& s, const CharExponents& exps);

}  // namespace algebroid
