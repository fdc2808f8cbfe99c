#include "algebroid/multseq.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "algebroid/branch.hpp"
#include "algebroid/semigroup.hpp"

namespace algebroid {

MultiplicitySequence MultiplicitySequence::from_runs(const std::vector<Run>& runs) {
  MultiplicitySequence out;
  std::int64_t previous = 0;
  for (const auto& r : runs) {
    if (r.entry < 1 || r.count < 1) {
      throw Error(ErrorCode::kInvalidArgument, "multiplicity runs need entry >= 1 and count >= 1");
    }
    if (previous != 0 && r.entry > previous) {
      throw Error(ErrorCode::kNotNonIncreasing,
                  "entry " + std::to_string(r.entry) + " follows " + std::to_string(previous));
    }
    previous = r.entry;
    if (r.entry == 1) continue;
    if (!out.runs_.empty() && out.runs_.back().entry == r.entry) {
      out.runs_.back().count += r.count;
    } else {
      out.runs_.push_back(r);
    }
  }
  return out;
}

MultiplicitySequence MultiplicitySequence::from_entries(const std::vector<std::int64_t>& entries) {
  std::vector<Run> runs;
  for (auto e : entries) runs.push_back({e, 1});
  return from_runs(runs);
}

std::vector<std::int64_t> MultiplicitySequence::entries() const {
  std::vector<std::int64_t> out;
  for (const auto& r : runs_) out.insert(out.end(), static_cast<std::size_t>(r.count), r.entry);
  return out;
}

std::string to_string(const MultiplicitySequence& e) {
  if (e.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& r : e.runs()) {
    os << (first ? "" : ",") << r.entry;
    if (r.count > 1) os << '^' << r.count;
    first = false;
  }
  return os.str();
}

std::vector<std::int64_t> euclid_m(std::int64_t m, std::int64_t n) {
  if (m < 1 || n < 1) throw Error(ErrorCode::kInvalidArgument, "M(m, n) needs m, n >= 1");
  if (m < n) std::swap(m, n);
  std::vector<std::int64_t> out;
  while (true) {
    out.insert(out.end(), static_cast<std::size_t>(m / n), n);
    const std::int64_t r = m % n;
    if (r == 0) break;
    m = n;
    n = r;
  }
  return out;
}

std::int64_t hironaka_sum(const MultiplicitySequence& e) {
  std::int64_t s = 0;
  for (const auto& r : e.runs()) s += r.count * r.entry * (r.entry - 1);
  return s;
}

bool is_branch_admissible(const MultiplicitySequence& e) {
  std::vector<std::int64_t> sums{0};
  for (auto v : e.entries()) sums.push_back(sums.back() + v);
  const std::int64_t tail = sums.back();
  const std::set<std::int64_t> members(sums.begin(), sums.end());
  for (std::size_t i = 0; i < sums.size(); ++i) {
    for (std::size_t j = i; j < sums.size(); ++j) {
      const std::int64_t s = sums[i] + sums[j];
      if (s < tail && !members.count(s)) return false;
    }
  }
  return true;
}

namespace {

std::vector<std::pair<std::int64_t, std::int64_t>> blocks_of(const CharExponents& exps) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::size_t i = 1; i < exps.delta.size(); ++i) {
    if (i == 1) {
      out.emplace_back(exps.delta[0], exps.delta[1]);
    } else {
      out.emplace_back(exps.d[i - 1], exps.delta[i] - exps.delta[i - 1]);
    }
  }
  return out;
}

std::vector<std::int64_t> without_ones(std::vector<std::int64_t> v) {
  v.erase(std::remove(v.begin(), v.end(), 1), v.end());
  return v;
}

bool split(const std::vector<std::int64_t>& e, std::size_t pos, std::int64_t d, bool first,
           std::int64_t budget, std::vector<std::pair<std::int64_t, std::int64_t>>& blocks) {
  for (std::int64_t x = first ? d + 1 : 1; x <= budget + d; ++x) {
    if (x % d == 0) continue;
    const auto block = without_ones(euclid_m(d, x));
    if (pos + block.size() > e.size()) continue;
    if (!std::equal(block.begin(), block.end(), e.begin() + static_cast<std::ptrdiff_t>(pos))) {
      continue;
    }
    const std::int64_t g = std::gcd(d, x);
    const std::size_t next = pos + block.size();
    blocks.emplace_back(d, x);
    if (g == 1) {
      if (next == e.size()) return true;
    } else {
      std::int64_t rest = 0;
      for (std::size_t i = next; i < e.size(); ++i) rest += e[i];
      if (split(e, next, g, false, rest, blocks)) return true;
    }
    blocks.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<std::pair<std::int64_t, std::int64_t>>> decompose_blocks(
    const MultiplicitySequence& e) {
  const auto entries = e.entries();
  std::vector<std::pair<std::int64_t, std::int64_t>> blocks;
  if (entries.empty()) return blocks;
  const std::int64_t total = std::accumulate(entries.begin(), entries.end(), std::int64_t{0});
  if (split(entries, 0, entries.front(), true, total, blocks)) return blocks;
  return std::nullopt;
}

PlaneAdmissibility is_plane_admissible(const MultiplicitySequence& e) {
  PlaneAdmissibility out;
  NumericalSemigroup s;
  try {
    s = from_multseq(e);
  } catch (const Error& err) {
    out.reason = std::string("lift along the sequence fails: ") + err.what();
    return out;
  }
  out.semigroup = s.min_generators();
  const auto cert = is_plane(s);
  if (!cert.plane) {
    out.reason = "reconstructed semigroup is not plane: " + cert.reason;
    return out;
  }
  const auto b = realize(s);
  const auto realized = multiplicity_sequence(b);
  if (!(realized == e)) {
    out.reason = "realization has multiplicity sequence " + to_string(realized);
    return out;
  }
  out.blocks = blocks_of(characteristic_exponents(b));
  out.admissible = true;
  return out;
}

MultiplicitySequence from_char_exponents(const CharExponents& exps) {
  std::vector<std::int64_t> entries;
  for (const auto& [m, n] : blocks_of(exps)) {
    const auto block = euclid_m(m, n);
    entries.insert(entries.end(), block.begin(), block.end());
  }
  return MultiplicitySequence::from_entries(entries);
}

}  // namespace algebroid
