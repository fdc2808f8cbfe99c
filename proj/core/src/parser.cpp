#include "algebroid/parser.hpp"

#include <cctype>
#include <numeric>
#include <optional>
#include <sstream>

namespace algebroid {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      advance();
    }
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    advance();
    return true;
  }

  void expect(char c, const char* what) {
    if (!accept(c)) fail(std::string("expected ") + what);
  }

  bool peek_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  std::string digits() {
    if (!peek_digit()) fail("expected a number");
    std::string out;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      out.push_back(text_[pos_]);
      advance();
    }
    return out;
  }

  std::int64_t natural() {
    peek();
    const int line = line_;
    const int column = column_;
    const std::string d = digits();
    if (d.size() > 17) throw SyntaxError(ErrorCode::kSyntaxError, "number too large", line, column);
    return std::stoll(d);
  }

  std::string identifier() {
    peek();
    std::string out;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      out.push_back(text_[pos_]);
      advance();
    }
    if (out.empty()) fail("expected a name");
    return out;
  }

  int line() {
    peek();
    return line_;
  }
  int column() {
    peek();
    return column_;
  }

  [[noreturn]] void fail(const std::string& message, ErrorCode code = ErrorCode::kSyntaxError) {
    peek();
    throw SyntaxError(code, message, line_, column_);
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

Rational parse_rational(Cursor& c) {
  bool negative = false;
  if (c.accept('-')) {
    negative = true;
  } else {
    c.accept('+');
  }
  Rational r(mpz_class(c.digits()));
  if (c.accept('/')) {
    const int line = c.line();
    const int column = c.column();
    const mpz_class den(c.digits());
    if (den == 0) throw SyntaxError(ErrorCode::kSyntaxError, "zero denominator", line, column);
    r /= den;
  }
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

// term := [rat "*"] "t" ["^" nat]
TruncatedSeries::Term parse_term(Cursor& c, bool positive_only, const char* name) {
  Rational coefficient = 1;
  if (c.peek() != 't') {
    coefficient = parse_rational(c);
    c.expect('*', "'*' after a coefficient");
  }
  const int line = c.line();
  const int column = c.column();
  c.expect('t', "'t'");
  std::int64_t exponent = 1;
  if (c.accept('^')) exponent = c.natural();
  if (positive_only && exponent == 0) {
    throw SyntaxError(ErrorCode::kNonPositiveExponent,
                      std::string("exponent 0 in ") + name, line, column);
  }
  return {exponent, coefficient};
}

// series := "0" / [sign] term *(sign term)
void parse_series_at(Cursor& c, bool positive_only, const char* name,
                     std::vector<TruncatedSeries::Term>& terms) {
  if (c.peek() == '0') {
    c.natural();
    return;
  }
  bool negative = c.accept('-');
  if (!negative) c.accept('+');
  while (true) {
    auto term = parse_term(c, positive_only, name);
    if (negative) term.second = -term.second;
    terms.push_back(std::move(term));
    if (c.accept('+')) {
      negative = false;
    } else if (c.accept('-')) {
      negative = true;
    } else {
      break;
    }
  }
}

}  // namespace

PlaneBranch parse_branch(std::string_view input) {
  Cursor c(input);
  std::optional<std::vector<TruncatedSeries::Term>> x;
  std::optional<std::vector<TruncatedSeries::Term>> y;
  std::optional<std::int64_t> prec;
  while (!c.at_end()) {
    const int line = c.line();
    const int column = c.column();
    const std::string name = c.identifier();
    c.expect('=', "'=' after a name");
    auto duplicate = [&] {
      throw SyntaxError(ErrorCode::kDuplicateVariable, "duplicate assignment to " + name, line,
                        column);
    };
    if (name == "x" || name == "y") {
      auto& slot = name == "x" ? x : y;
      if (slot) duplicate();
      slot.emplace();
      parse_series_at(c, true, name.c_str(), *slot);
    } else if (name == "prec") {
      if (prec) duplicate();
      prec = c.natural();
      if (*prec < 1) throw SyntaxError(ErrorCode::kSyntaxError, "prec must be >= 1", line, column);
    } else {
      throw SyntaxError(ErrorCode::kSyntaxError, "unknown name '" + name + "'", line, column);
    }
    if (!c.at_end()) c.expect(';', "';' between assignments");
  }
  if (!x) c.fail("missing assignment to x");
  if (!y) c.fail("missing assignment to y");
  const std::int64_t p = prec.value_or(TruncatedSeries::kExact);
  return PlaneBranch(TruncatedSeries(std::move(*x), p), TruncatedSeries(std::move(*y), p));
}

TruncatedSeries parse_series(std::string_view input, std::int64_t precision) {
  Cursor c(input);
  std::vector<TruncatedSeries::Term> terms;
  parse_series_at(c, false, "series", terms);
  if (!c.at_end()) c.fail("unexpected trailing input");
  return TruncatedSeries(std::move(terms), precision);
}

std::vector<std::int64_t> parse_semigroup(std::string_view input) {
  Cursor c(input);
  const bool bracketed = c.accept('<');
  std::vector<std::int64_t> gens;
  do {
    gens.push_back(c.natural());
  } while (c.accept(','));
  if (bracketed) c.expect('>', "'>'");
  if (!c.at_end()) c.fail("unexpected trailing input");
  std::int64_t g = 0;
  for (auto a : gens) {
    if (a < 1) throw Error(ErrorCode::kNotNumericalSemigroup, "generators must be >= 1");
    g = std::gcd(g, a);
  }
  if (g != 1) {
    throw Error(ErrorCode::kNotNumericalSemigroup, "generators have gcd " + std::to_string(g));
  }
  return gens;
}

MultiplicitySequence parse_multseq(std::string_view input) {
  Cursor c(input);
  std::vector<MultiplicitySequence::Run> runs;
  do {
    const int line = c.line();
    const int column = c.column();
    const std::int64_t entry = c.natural();
    const std::int64_t count = c.accept('^') ? c.natural() : 1;
    if (entry < 1 || count < 1) {
      throw SyntaxError(ErrorCode::kSyntaxError, "entries and run lengths must be >= 1", line,
                        column);
    }
    runs.push_back({entry, count});
  } while (c.accept(','));
  if (!c.at_end()) c.fail("unexpected trailing input");
  return MultiplicitySequence::from_runs(runs);
}

std::string render_series(const TruncatedSeries& s) {
  if (s.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : s.terms()) {
    const Rational mag = abs(c);
    if (sgn(c) < 0) {
      os << (first ? "-" : " - ");
    } else if (!first) {
      os << " + ";
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << "t^" << e;
    first = false;
  }
  return os.str();
}

std::string render_branch(const PlaneBranch& b) {
  std::string out = "x = " + render_series(b.x()) + "; y = " + render_series(b.y());
  if (!b.is_exact()) out += "; prec = " + std::to_string(b.precision());
  return out;
}

std::string render_semigroup(const std::vector<std::int64_t>& generators) {
  std::string out = "<";
  for (std::size_t i = 0; i < generators.size(); ++i) {
    out += (i ? "," : "") + std::to_string(generators[i]);
  }
  return out + ">";
}

std::string render_multseq(const MultiplicitySequence& e) { return to_string(e); }

}  // namespace algebroid
