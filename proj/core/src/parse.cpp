#include "diffrest/parse.hpp"

#include <cctype>
#include <optional>
#include <string>

#include "diffrest/errors.hpp"

namespace diffrest {
namespace {

constexpr unsigned kMaxExponent = 4096;
constexpr std::size_t kMaxVariable = 99;

class Parser {
 public:
  Parser(std::string_view text, CoeffRing ring, std::size_t arity_limit)
      : text_(text), ring_(ring), arity_limit_(arity_limit) {}

  Poly poly() {
    skip_space();
    bool negate = false;
    if (peek() == '-') {
      advance();
      negate = true;
    }
    Poly acc = term();
    if (negate) acc = -acc;
    for (;;) {
      skip_space();
      const char c = peek();
      if (c != '+' && c != '-') break;
      advance();
      Poly rhs = term();
      if (c == '+') acc += rhs;
      else acc -= rhs;
    }
    return acc;
  }

  RatFrac frac() {
    Poly num = poly();
    skip_space();
    if (peek() != '/') return {std::move(num), Poly::constant(ring_, 1)};
    advance();
    Poly den = poly();
    return {std::move(num), std::move(den)};
  }

  RatMap map() {
    expect_word("map");
    const std::size_t n = integer_literal("source arity");
    if (n > kMaxVariable) fail("source arity above " + std::to_string(kMaxVariable));
    expect("->");
    const std::size_t m = integer_literal("target arity");
    arity_limit_ = n;
    expect("{");
    std::vector<RatFrac> components;
    skip_space();
    if (peek() != '}') {
      components.push_back(frac());
      while (accept(';')) components.push_back(frac());
    }
    expect("}");
    expect("|");
    expect("{");
    std::vector<Poly> gens;
    skip_space();
    if (peek() != '}') {
      gens.push_back(poly());
      while (accept(',')) gens.push_back(poly());
    }
    expect("}");
    finish();
    for (auto& c : components) {
      c.num = c.num.with_nvars(n);
      c.den = c.den.with_nvars(n);
    }
    for (auto& g : gens) g = g.with_nvars(n);
    return RatMap::make(ring_, n, m, std::move(components), std::move(gens));
  }

  void finish() {
    skip_space();
    if (pos_ < text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
  }

  std::size_t max_variable() const { return max_variable_; }

 private:
  Poly term() {
    Poly acc = factor();
    while (accept('*')) acc *= factor();
    return acc;
  }

  Poly factor() {
    Poly base = atom();
    if (!accept('^')) return base;
    const std::size_t e = integer_literal("exponent");
    if (e > kMaxExponent) fail("exponent too large");
    return base.pow(static_cast<unsigned>(e));
  }

  Poly atom() {
    skip_space();
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return Poly::constant(ring_, Rational(digits()));
    if (c == 'x') {
      const std::size_t column = pos_;
      advance();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a variable index after 'x'");
      const std::size_t k = integer_literal("variable index");
      if (k == 0 || k > kMaxVariable) fail_at(column, "variable index must lie in 1..99");
      if (arity_limit_ != 0 && k > arity_limit_)
        throw ArityError("variable x" + std::to_string(k) + " exceeds the source arity " + std::to_string(arity_limit_));
      max_variable_ = std::max(max_variable_, k);
      return Poly::variable(ring_, k);
    }
    if (c == '(') {
      advance();
      if (auto literal = try_rational()) return *literal;
      Poly inner = poly();
      expect(")");
      return inner;
    }
    if (c == '\0') fail("unexpected end of input");
    fail(std::string("unexpected '") + c + "'");
  }

  // '(' already consumed; matches ['-'] int '/' int ')' or rewinds.
  std::optional<Poly> try_rational() {
    const std::size_t saved = pos_;
    skip_space();
    bool negative = false;
    if (peek() == '-') {
      advance();
      negative = true;
      skip_space();
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) return rewind(saved);
    Integer num(digits());
    skip_space();
    if (peek() != '/') return rewind(saved);
    advance();
    skip_space();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) return rewind(saved);
    const std::size_t den_column = pos_;
    Integer den(digits());
    skip_space();
    if (peek() != ')') return rewind(saved);
    advance();
    if (den == 0) fail_at(den_column, "zero denominator in a rational literal");
    Rational value(num, den);
    value.canonicalize();
    if (negative) value = -value;
    if (ring_ == CoeffRing::Integers && value.get_den() != 1) fail_at(saved, "non-integral coefficient over Z");
    return Poly::constant(ring_, value);
  }

  std::optional<Poly> rewind(std::size_t saved) {
    pos_ = saved;
    return std::nullopt;
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) advance();
    return std::string(text_.substr(start, pos_ - start));
  }

  std::size_t integer_literal(const char* what) {
    skip_space();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail(std::string("expected ") + what);
    const std::size_t column = pos_;
    const std::string d = digits();
    if (d.size() > 6) fail_at(column, std::string(what) + " too large");
    return std::stoul(d);
  }

  void expect(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) != token) fail("expected '" + std::string(token) + "'");
    pos_ += token.size();
  }

  void expect_word(std::string_view word) {
    expect(word);
    if (std::isalnum(static_cast<unsigned char>(peek()))) fail("expected '" + std::string(word) + "'");
  }

  bool accept(char c) {
    skip_space();
    if (peek() != c) return false;
    advance();
    return true;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void advance() { ++pos_; }

  [[noreturn]] void fail(const std::string& message) const { fail_at(pos_, message); }

  [[noreturn]] void fail_at(std::size_t offset, const std::string& message) const {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < offset && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(message, line, column);
  }

  std::string_view text_;
  CoeffRing ring_;
  std::size_t arity_limit_;
  std::size_t pos_ = 0;
  std::size_t max_variable_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, CoeffRing ring, std::size_t nvars) {
  Parser parser(text, ring, nvars);
  Poly p = parser.poly();
  parser.finish();
  return p.with_nvars(std::max(nvars, parser.max_variable()));
}

RatFrac parse_frac(std::string_view text, CoeffRing ring, std::size_t nvars) {
  Parser parser(text, ring, nvars);
  RatFrac f = parser.frac();
  parser.finish();
  const std::size_t width = std::max(nvars, parser.max_variable());
  return {f.num.with_nvars(width), f.den.with_nvars(width)};
}

RatMap parse_map(std::string_view text, CoeffRing ring) {
  Parser parser(text, ring, 0);
  return parser.map();
}

}  // namespace diffrest
