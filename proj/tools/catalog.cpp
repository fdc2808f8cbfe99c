#include <algorithm>
#include <atomic>
#include <fstream>
#include <future>
#include <numeric>
#include <thread>

#include "cli.hpp"

namespace algebroid::cli {

namespace {

// Extends a_0 < ... < a_{i-1} (gcd chain d) by every a_i allowed by the plane
// criterion whose conductor contribution (d_{i-1}/d_i - 1)(a_i - d_i) keeps the
// running conductor within `limit`.
void extend(std::vector<std::int64_t>& gens, std::vector<std::int64_t>& d, std::int64_t partial,
            std::int64_t limit, std::vector<std::vector<std::int64_t>>& found) {
  const std::int64_t prev = d.back();
  if (prev == 1) {
    found.push_back(gens);
    return;
  }
  const std::size_t i = gens.size();
  const std::int64_t lower = i == 1 ? gens[0] + 1 : std::lcm(d[i - 2], gens[i - 1]) + 1;
  for (std::int64_t a = lower; partial + a - prev / 2 <= limit; ++a) {
    const std::int64_t next = std::gcd(prev, a);
    if (next == prev) continue;
    const std::int64_t total = partial + (prev / next - 1) * (a - next);
    if (total > limit) continue;
    gens.push_back(a);
    d.push_back(next);
    extend(gens, d, total, limit, found);
    gens.pop_back();
    d.pop_back();
  }
}

}  // namespace

std::vector<std::vector<std::int64_t>> enumerate_plane_semigroups(std::int64_t max_conductor,
                                                                  bool include_regular) {
  std::vector<std::vector<std::int64_t>> found;
  if (include_regular && max_conductor >= 0) found.push_back({1});
  for (std::int64_t a0 = 2; a0 / 2 + 1 <= max_conductor; ++a0) {
    std::vector<std::int64_t> gens{a0};
    std::vector<std::int64_t> d{a0};
    extend(gens, d, 0, max_conductor, found);
  }
  std::sort(found.begin(), found.end());
  return found;
}

Json catalog_record(const std::vector<std::int64_t>& generators) {
  const NumericalSemigroup s = NumericalSemigroup::from_generators(generators);
  if (s.min_generators() != generators) internal_mismatch("catalog tuple is not minimal");
  if (!is_plane(s).plane) internal_mismatch("catalog tuple fails the plane criterion");
  const CharExponents exps = characteristic_exponents(realize(s));
  if (exps.delta != exponents_of(s).delta) internal_mismatch("realization has other exponents");
  if (semigroup_generators(exps) != generators) internal_mismatch("realization has another semigroup");
  Json delta = Json::array();
  for (auto v : exps.delta) delta.push_back(json_integer(v));
  Json gens = Json::array();
  for (auto v : generators) gens.push_back(json_integer(v));
  return Json{{"generators", gens},
              {"delta", delta},
              {"conductor", json_integer(s.conductor())},
              {"multiplicity_sequence", algebroid::to_json(from_char_exponents(exps))},
              {"generating_function", algebroid::to_json(generating_function(s))}};
}

std::vector<std::string> catalog_lines(std::int64_t max_conductor, bool include_regular) {
  const auto all = enumerate_plane_semigroups(max_conductor, include_regular);
  std::vector<std::string> lines(all.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < all.size(); i = next++) {
      lines[i] = render_json(catalog_record(all[i]));
    }
  };
  const unsigned workers = std::clamp(std::thread::hardware_concurrency(), 1U, 8U);
  std::vector<std::future<void>> jobs;
  for (unsigned w = 0; w < workers; ++w) jobs.push_back(std::async(std::launch::async, work));
  for (auto& job : jobs) job.get();
  return lines;
}

std::size_t catalog_enumerate(std::int64_t max_conductor, const std::string& out_path,
                              bool include_regular) {
  const auto lines = catalog_lines(max_conductor, include_regular);
  std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorCode::kInvalidArgument, "cannot open " + out_path + " for writing");
  for (const auto& line : lines) file << line << '\n';
  file.flush();
  if (!file) throw Error(ErrorCode::kInvalidArgument, "write to " + out_path + " failed");
  return lines.size();
}

}  // namespace algebroid::cli
