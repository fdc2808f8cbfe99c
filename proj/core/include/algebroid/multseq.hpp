#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace algebroid {

struct CharExponents;

/// Non-increasing sequence of multiplicities in run-length form. Only entries
/// greater than 1 are stored; the infinite tail of 1s is implicit.
class MultiplicitySequence {
 public:
  struct Run {
    std::int64_t entry;
    std::int64_t count;

    friend bool operator==(const Run&, const Run&) = default;
  };

  MultiplicitySequence() = default;

  /// Canonicalizes: merges equal neighbours and drops 1s. Throws
  /// NotNonIncreasing or InvalidArgument.
  static MultiplicitySequence from_runs(const std::vector<Run>& runs);
  static MultiplicitySequence from_entries(const std::vector<std::int64_t>& entries);

  const std::vector<Run>& runs() const noexcept { return runs_; }
  std::vector<std::int64_t> entries() const;
  bool empty() const noexcept { return runs_.empty(); }

  friend bool operator==(const MultiplicitySequence&, const MultiplicitySequence&) = default;

 private:
  std::vector<Run> runs_;
};

/// "6,4,2^2" style rendering; empty sequence renders as "1".
std::string to_string(const MultiplicitySequence& e);

/// Euclidean block: n^(q1), r1^(q2), ... for m = n q1 + r1, n = r1 q2 + r2, ...
/// Ends with gcd(m, n); M(m, n) = M(n, m) when m < n.
std::vector<std::int64_t> euclid_m(std::int64_t m, std::int64_t n);

/// sum e_i (e_i - 1).
std::int64_t hironaka_sum(const MultiplicitySequence& e);

/// Partial sums 0, e_0, e_0 + e_1, ... followed by the 1-tail form a semigroup.
bool is_branch_admissible(const MultiplicitySequence& e);

struct PlaneAdmissibility {
  bool admissible = false;
  std::string reason;
  /// Euclidean blocks (m, n) whose concatenation is the sequence.
  std::vector<std::pair<std::int64_t, std::int64_t>> blocks;
  /// Generators of the reconstructed semigroup when the lift succeeded.
  std::vector<std::int64_t> semigroup;
};

/// Round trip through from_multseq, is_plane and the multiplicity sequence of
/// the realizing branch.
PlaneAdmissibility is_plane_admissible(const MultiplicitySequence& e);

/// Direct split of the sequence into Euclidean blocks M(e_0, x_1), M(g_1, x_2),
/// ... with strictly falling gcds ending at 1, searched with backtracking.
/// Independent of the round trip above.
std::optional<std::vector<std::pair<std::int64_t, std::int64_t>>> decompose_blocks(
    const MultiplicitySequence& e);

/// Concatenation M(delta_0, delta_1), M(d_1, delta_2 - delta_1), ...
MultiplicitySequence from_char_exponents(const CharExponents& exps);

}  // namespace algebroid
