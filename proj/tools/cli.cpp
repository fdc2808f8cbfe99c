#include "cli.hpp"

#include <CLI11.hpp>

#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "algebroid/oracle.hpp"
#include "algebroid/parser.hpp"

namespace algebroid::cli {

namespace {

template <typename T>
std::string join(const std::vector<T>& v, const char* sep = ",") {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

Json integers(const std::vector<std::int64_t>& v) {
  Json out = Json::array();
  for (auto x : v) out.push_back(json_integer(x));
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

NumericalSemigroup semigroup_arg(const std::string& text) {
  return NumericalSemigroup::from_generators(parse_semigroup(text));
}

// Reports either as text or as one JSON line; `reason` is non-empty for a
// negative verdict.
struct Outcome {
  std::string text;
  Json json;
  std::string reason;
};

int emit(const Outcome& o, bool json, std::ostream& out) {
  if (json) {
    Json j = o.json;
    if (!o.reason.empty()) j["reason"] = o.reason;
    out << render_json(j) << '\n';
  } else {
    out << o.text;
    if (!o.reason.empty()) out << "reason: " << o.reason << '\n';
  }
  return o.reason.empty() ? kOk : kNegative;
}

Json step_json(const DescentStep& s) {
  return Json{{"generators", integers(s.generators)},
              {"multiplicity", json_integer(s.multiplicity)},
              {"apery", to_json(s.apery)},
              {"descent", to_json(s.descent)}};
}

std::string step_text(const DescentStep& s) {
  std::ostringstream os;
  os << "  " << render_semigroup(s.generators) << "  m = " << s.multiplicity << "  apery "
     << join(s.apery.values) << "  -> " << to_string(s.descent.verdict);
  if (s.descent.verdict != DescentVerdict::kOk) os << " (candidate " << join(s.descent.candidate) << ")";
  os << '\n';
  return os.str();
}

Outcome cmd_invariants(const std::string& input) {
  const InvariantsReport r = build_invariants_report(parse_branch(input), input);
  return {to_text(r), to_json(r), ""};
}

Outcome cmd_check_plane(const std::string& input) {
  const NumericalSemigroup s = semigroup_arg(input);
  const PlaneCertificate cert = is_plane(s);
  const IterativeVerdict it = is_plane_iterative(s);
  std::ostringstream os;
  os << "semigroup: " << render_semigroup(s.min_generators()) << '\n';
  os << "generator criterion: " << (cert.plane ? "plane" : "not plane (" + cert.reason + ")")
     << '\n';
  os << "descent:\n";
  for (const auto& step : it.steps) os << step_text(step);
  os << "reached N: " << yes_no(it.reached_natural) << '\n';
  os << "descent chain: " << to_string(it.chain) << '\n';
  os << "verdict: " << (it.plane ? "plane" : "not plane") << '\n';
  Json steps = Json::array();
  for (const auto& step : it.steps) steps.push_back(step_json(step));
  Json j{{"semigroup", to_json(s)},
         {"plane", it.plane},
         {"generator_criterion", to_json(cert)},
         {"iterative",
          {{"plane", it.plane},
           {"reached_natural", it.reached_natural},
           {"chain", to_json(it.chain)},
           {"steps", steps}}}};
  std::string reason;
  if (!it.plane) reason = it.reason.empty() ? cert.reason : it.reason;
  return {os.str(), j, reason};
}

Outcome cmd_descend(const std::string& input) {
  const NumericalSemigroup s = semigroup_arg(input);
  const IterativeVerdict it = descent_trace(s);
  std::ostringstream os;
  os << "semigroup: " << render_semigroup(s.min_generators()) << '\n';
  os << "descent:\n";
  for (const auto& step : it.steps) os << step_text(step);
  os << "reached N: " << yes_no(it.reached_natural) << '\n';
  os << "descent chain: " << to_string(it.chain) << '\n';
  Json steps = Json::array();
  for (const auto& step : it.steps) steps.push_back(step_json(step));
  Json j{{"semigroup", to_json(s)},
         {"reached_natural", it.reached_natural},
         {"chain", to_json(it.chain)},
         {"steps", steps}};
  std::string reason;
  if (!it.reached_natural) {
    reason = it.reason;
    if (reason.empty() && !it.steps.empty()) {
      reason = "descent failed: " + std::string(to_string(it.steps.back().descent.verdict));
    }
  }
  return {os.str(), j, reason};
}

Outcome cmd_realize(const std::string& input) {
  const NumericalSemigroup s = semigroup_arg(input);
  const PlaneBranch b = realize(s);
  if (!(value_semigroup(b, false) == s)) internal_mismatch("realization has a different semigroup");
  const std::string text = render_branch(b);
  return {"branch: " + text + "\n", Json{{"semigroup", to_json(s)}, {"branch", to_json(b)}}, ""};
}

Outcome cmd_equiv(const std::string& a, const std::string& b) {
  const EquivalenceEvidence ev = formally_equivalent(parse_branch(a), parse_branch(b));
  std::ostringstream os;
  os << "semigroup 1: " << render_semigroup(ev.semigroup1.min_generators()) << '\n';
  os << "semigroup 2: " << render_semigroup(ev.semigroup2.min_generators()) << '\n';
  os << "multiplicity sequence 1: " << to_string(ev.multiplicities1) << '\n';
  os << "multiplicity sequence 2: " << to_string(ev.multiplicities2) << '\n';
  os << "conductor degrees 1: " << join(ev.conductor_degrees1) << '\n';
  os << "conductor degrees 2: " << join(ev.conductor_degrees2) << '\n';
  os << "verdict: " << (ev.equivalent ? "equivalent" : "not equivalent") << '\n';
  Json j{{"equivalent", ev.equivalent},
         {"semigroup1", to_json(ev.semigroup1)},
         {"semigroup2", to_json(ev.semigroup2)},
         {"multiplicities1", to_json(ev.multiplicities1)},
         {"multiplicities2", to_json(ev.multiplicities2)},
         {"conductor_degrees1", integers(ev.conductor_degrees1)},
         {"conductor_degrees2", integers(ev.conductor_degrees2)}};
  return {os.str(), j, ev.equivalent ? "" : "value semigroups differ"};
}

Outcome cmd_multseq(const std::string& input) {
  const MultiplicitySequence e = parse_multseq(input);
  const bool branch = is_branch_admissible(e);
  const PlaneAdmissibility plane = is_plane_admissible(e);
  std::ostringstream os;
  os << "sequence: " << to_string(e) << '\n';
  os << "branch admissible: " << yes_no(branch) << '\n';
  os << "plane admissible: " << yes_no(plane.admissible) << '\n';
  Json blocks = Json::array();
  if (plane.admissible) {
    os << "blocks:";
    for (const auto& [m, n] : plane.blocks) {
      os << " M(" << m << "," << n << ")";
      blocks.push_back(Json::array({json_integer(m), json_integer(n)}));
    }
    os << '\n';
  }
  if (!plane.semigroup.empty()) os << "semigroup: " << render_semigroup(plane.semigroup) << '\n';
  Json j{{"sequence", to_json(e)},
         {"branch_admissible", branch},
         {"plane_admissible", plane.admissible},
         {"blocks", blocks},
         {"semigroup", integers(plane.semigroup)}};
  std::string reason;
  if (!plane.admissible) reason = plane.reason.empty() ? "not plane-admissible" : plane.reason;
  return {os.str(), j, reason};
}

std::int64_t weight(const std::vector<std::int64_t>& gens, const ExponentVector& v) {
  std::int64_t w = 0;
  for (std::size_t i = 0; i < v.size(); ++i) w += v[i] * gens[i];
  return w;
}

Outcome cmd_present(const std::string& input) {
  const NumericalSemigroup s = semigroup_arg(input);
  const Presentation p = relations(s);
  const auto& gens = p.generators;
  std::ostringstream os;
  os << "semigroup: " << render_semigroup(gens) << '\n';
  os << "relations:\n";
  for (const auto& r : p.relations) {
    if (r.power * gens[r.index] != weight(gens, r.monomial)) {
      internal_mismatch("relation " + to_string(r) + " is not homogeneous");
    }
    os << "  " << to_string(r) << '\n';
  }
  Json j{{"semigroup", to_json(s)}, {"presentation", to_json(p)}};
  if (p.best_effort) {
    os << "best effort: yes\n";
  } else {
    Json initial = Json::array();
    std::vector<std::string> forms;
    for (const auto& [index, power] : graded_relations(s)) {
      forms.push_back("Y_" + std::to_string(index) + "^" + std::to_string(power));
      initial.push_back(Json::array({index, json_integer(power)}));
    }
    os << "initial forms: " << join(forms, ", ") << '\n';
    j["initial_forms"] = initial;
  }
  return {os.str(), j, ""};
}

Outcome cmd_genfun(const std::string& input, std::optional<std::int64_t> expand) {
  const NumericalSemigroup s = semigroup_arg(input);
  const GeneratingFunction gf = generating_function(s);
  std::ostringstream os;
  os << "semigroup: " << render_semigroup(s.min_generators()) << '\n';
  os << "generating function: " << to_string(gf) << '\n';
  Json j{{"semigroup", to_json(s)}, {"generating_function", to_json(gf)}};
  if (expand) {
    if (*expand < 0) throw Error(ErrorCode::kInvalidArgument, "--expand must be >= 0");
    const auto coeffs = expand_gf(gf, *expand);
    std::vector<std::int64_t> ints;
    for (std::int64_t n = 0; n <= *expand; ++n) {
      const mpz_class& c = coeffs[static_cast<std::size_t>(n)];
      if (c != (s.contains(n) ? 1 : 0)) {
        internal_mismatch("coefficient of t^" + std::to_string(n) + " is " + c.get_str());
      }
      ints.push_back(c.get_si());
    }
    os << "expansion: " << join(ints) << '\n';
    j["expansion"] = integers(ints);
  }
  return {os.str(), j, ""};
}

Outcome cmd_verify(const std::string& input, std::optional<std::int64_t> bound_arg) {
  const PlaneBranch b = parse_branch(input);
  const NumericalSemigroup s = value_semigroup(b);
  const std::int64_t bound = bound_arg.value_or(s.conductor() + 20);
  if (bound < 0) throw Error(ErrorCode::kInvalidArgument, "--bound must be >= 0");
  const ValueTable by_weight = valuation_oracle(b, bound, MonomialOrder::kByWeight);
  const ValueTable reversed = valuation_oracle(b, bound, MonomialOrder::kReversed);
  if (!(by_weight == reversed)) internal_mismatch("oracle depends on the monomial order");
  for (std::int64_t n = 0; n <= bound; ++n) {
    if (by_weight.attained[static_cast<std::size_t>(n)] != s.contains(n)) {
      internal_mismatch("oracle and semigroup disagree at " + std::to_string(n));
    }
  }
  const auto values = by_weight.values();
  std::ostringstream os;
  os << "semigroup: " << render_semigroup(s.min_generators()) << '\n';
  os << "oracle: " << values.size() << " values in [0," << bound << "] agree\n";
  Json j{{"semigroup", to_json(s)},
         {"bound", json_integer(bound)},
         {"values", integers(values)},
         {"agree", true}};
  return {os.str(), j, ""};
}

}  // namespace

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kZeroUpToPrecision:
    case ErrorCode::kInsufficientPrecision:
    case ErrorCode::kEpsilonBeyondPrecision:
      return kInsufficientPrecision;
    case ErrorCode::kInternalMismatch:
      return kInternalMismatch;
    case ErrorCode::kNotPlane:
      return kNegative;
    default:
      return kInputError;
  }
}

InvariantsReport build_invariants_report(const PlaneBranch& b, const std::string& input) {
  InvariantsReport r;
  r.input = input;
  r.exponents = characteristic_exponents(b);
  r.semigroup = value_semigroup(b);
  if (r.semigroup.min_generators() != semigroup_generators(r.exponents)) {
    internal_mismatch("semigroup generators differ from the exponent recursion");
  }
  if (!is_plane(r.semigroup).plane) internal_mismatch("value semigroup fails the plane criterion");
  r.apery = apery_set(r.semigroup, r.semigroup.multiplicity());
  const SingularityInvariants inv = singularity_invariants(b);
  r.multiplicities = inv.multiplicities;
  r.conductor_degrees = inv.conductor_degrees;
  r.singularity_degrees = inv.singularity_degrees;
  r.hironaka_sum = inv.hironaka_sum;
  if (2 * r.semigroup.gap_count() != r.hironaka_sum) internal_mismatch("gaps != hironaka sum / 2");
  if (r.semigroup.conductor() != r.conductor_degrees.front()) {
    internal_mismatch("conductor != first conductor degree");
  }
  if (!(r.multiplicities == from_char_exponents(r.exponents))) {
    internal_mismatch("multiplicity sequence differs from the Euclidean blocks");
  }
  if (r.apery.values.back() - r.apery.base != r.semigroup.frobenius()) {
    internal_mismatch("largest Apery element does not give the Frobenius number");
  }
  r.presentation = relations(r.semigroup);
  r.generating_function = generating_function(r.semigroup);
  return r;
}

Json to_json(const InvariantsReport& r) {
  return Json{{"input", r.input},
              {"characteristic_exponents", algebroid::to_json(r.exponents)},
              {"semigroup", algebroid::to_json(r.semigroup)},
              {"apery", algebroid::to_json(r.apery)},
              {"multiplicity_sequence", algebroid::to_json(r.multiplicities)},
              {"conductor_degrees", integers(r.conductor_degrees)},
              {"singularity_degrees", integers(r.singularity_degrees)},
              {"hironaka_sum", json_integer(r.hironaka_sum)},
              {"presentation", algebroid::to_json(r.presentation)},
              {"generating_function", algebroid::to_json(r.generating_function)}};
}

std::string to_text(const InvariantsReport& r) {
  const auto& s = r.semigroup;
  std::vector<std::string> rels;
  for (const auto& rel : r.presentation.relations) rels.push_back(to_string(rel));
  std::ostringstream os;
  os << "input: " << r.input << '\n'
     << "characteristic exponents: " << join(r.exponents.delta) << '\n'
     << "semigroup: " << render_semigroup(s.min_generators()) << '\n'
     << "conductor: " << s.conductor() << '\n'
     << "frobenius: " << s.frobenius() << '\n'
     << "gaps: " << s.gap_count() << '\n'
     << "apery set (wrt " << r.apery.base << "): " << join(r.apery.values) << '\n'
     << "multiplicity sequence: " << to_string(r.multiplicities) << '\n'
     << "conductor degrees: " << join(r.conductor_degrees) << '\n'
     << "singularity degrees: " << join(r.singularity_degrees) << '\n'
     << "hironaka sum: " << r.hironaka_sum << '\n'
     << "relations: " << (rels.empty() ? "none" : join(rels, "; ")) << '\n'
     << "generating function: " << to_string(r.generating_function) << '\n';
  return os.str();
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants of plane algebroid branches", "algebroid"};
  app.require_subcommand(1);
  bool json = false;
  std::function<Outcome()> action;
  std::function<int()> raw_action;

  auto add = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_flag("--json", json, "Print one JSON object instead of text");
    return sub;
  };

  std::string arg1;
  std::string arg2;
  std::optional<std::int64_t> number;

  add("invariants", "All invariants of a branch")
      ->callback([&] { action = [&] { return cmd_invariants(arg1); }; })
      ->add_option("branch", arg1, "x = ...; y = ... [; prec = N]")
      ->required();
  add("check-plane", "Decide whether a semigroup is the semigroup of a plane branch")
      ->callback([&] { action = [&] { return cmd_check_plane(arg1); }; })
      ->add_option("semigroup", arg1, "<a,b,...>")
      ->required();
  add("realize", "Branch realizing a plane semigroup")
      ->callback([&] { action = [&] { return cmd_realize(arg1); }; })
      ->add_option("semigroup", arg1, "<a,b,...>")
      ->required();
  {
    CLI::App* sub = add("equiv", "Formal equivalence of two branches");
    sub->add_option("branch1", arg1)->required();
    sub->add_option("branch2", arg2)->required();
    sub->callback([&] { action = [&] { return cmd_equiv(arg1, arg2); }; });
  }
  add("multseq", "Branch and plane admissibility of a multiplicity sequence")
      ->callback([&] { action = [&] { return cmd_multseq(arg1); }; })
      ->add_option("sequence", arg1, "e,e^h,...")
      ->required();
  add("present", "Binomial relations of the semigroup ring")
      ->callback([&] { action = [&] { return cmd_present(arg1); }; })
      ->add_option("semigroup", arg1, "<a,b,...>")
      ->required();
  {
    CLI::App* sub = add("genfun", "Hilbert generating function");
    sub->add_option("semigroup", arg1, "<a,b,...>")->required();
    sub->add_option("--expand", number, "Print coefficients of t^0..t^N");
    sub->callback([&] { action = [&] { return cmd_genfun(arg1, number); }; });
  }
  {
    CLI::App* sub = add("verify", "Cross-check the value semigroup against the valuation oracle");
    sub->add_option("branch", arg1)->required();
    sub->add_option("--bound", number, "Check values 0..N (default conductor + 20)");
    sub->callback([&] { action = [&] { return cmd_verify(arg1, number); }; });
  }
  add("descend", "Full descent trace of a semigroup")
      ->callback([&] { action = [&] { return cmd_descend(arg1); }; })
      ->add_option("semigroup", arg1, "<a,b,...>")
      ->required();
  {
    CLI::App* sub = add("catalog", "Write all plane semigroups up to a conductor as JSONL");
    sub->add_option("max_conductor", number)->required();
    sub->add_option("--out", arg2, "Output file (default: standard output)");
    auto* regular = sub->add_flag("--include-regular", "Include N itself");
    sub->callback([&, regular] {
      raw_action = [&, regular] {
        const bool include = regular->count() > 0;
        if (*number < 0) throw Error(ErrorCode::kInvalidArgument, "max_conductor must be >= 0");
        if (arg2.empty() || arg2 == "-") {
          for (const auto& line : catalog_lines(*number, include)) out << line << '\n';
          return static_cast<int>(kOk);
        }
        const std::size_t count = catalog_enumerate(*number, arg2, include);
        if (json) {
          out << render_json(Json{{"records", count}, {"path", arg2}}) << '\n';
        } else {
          out << count << " records written to " << arg2 << '\n';
        }
        return static_cast<int>(kOk);
      };
    });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: SyntaxError: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (raw_action) return raw_action();
    return emit(action(), json, out);
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return exit_code_for(e.code());
  }
}

}  // namespace algebroid::cli
