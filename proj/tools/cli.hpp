#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "algebroid/serialize.hpp"

namespace algebroid::cli {

enum ExitCode : int {
  kOk = 0,
  kNegative = 1,
  kInputError = 2,
  kInsufficientPrecision = 3,
  kInternalMismatch = 4,
};

/// Exit code for a library error.
int exit_code_for(ErrorCode code);

/// Runs one command line (without the program name). Reports go to `out`,
/// one-line diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Every invariant of one branch, cross-checked before it is returned.
struct InvariantsReport {
  std::string input;
  CharExponents exponents;
  NumericalSemigroup semigroup;
  AperySet apery;
  MultiplicitySequence multiplicities;
  std::vector<std::int64_t> conductor_degrees;
  std::vector<std::int64_t> singularity_degrees;
  std::int64_t hironaka_sum = 0;
  Presentation presentation;
  GeneratingFunction generating_function;
};

InvariantsReport build_invariants_report(const PlaneBranch& b, const std::string& input);
Json to_json(const InvariantsReport& r);
std::string to_text(const InvariantsReport& r);

/// Minimal generators of every plane semigroup with conductor <= max_conductor,
/// sorted lexicographically. N (generators {1}) only with include_regular.
std::vector<std::vector<std::int64_t>> enumerate_plane_semigroups(std::int64_t max_conductor,
                                                                  bool include_regular);

/// One JSONL catalog line.
Json catalog_record(const std::vector<std::int64_t>& generators);

/// Rendered catalog lines in enumeration order. Records are computed on a
/// small thread pool and placed by index, so the result does not depend on
/// scheduling.
std::vector<std::string> catalog_lines(std::int64_t max_conductor, bool include_regular);

/// Writes the catalog to `out_path`; returns the number of records.
std::size_t catalog_enumerate(std::int64_t max_conductor, const std::string& out_path,
                              bool include_regular = false);

}  // namespace algebroid::cli
