#include "algq/expr.hpp"

#include <cctype>
#include <optional>

namespace algq {

namespace {

struct Lexer {
  std::string_view src;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos == src.size();
  }
  char peek() {
    skip_ws();
    return pos < src.size() ? src[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw parse_error("parse error at position " + std::to_string(pos) + ": " + what +
                      " in '" + std::string(src) + "'");
  }
  std::string digits() {
    std::string d;
    while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos])))
      d += src[pos++];
    return d;
  }
  // digits [/ digits]
  Rational number() {
    std::string num = digits();
    skip_ws();
    if (pos < src.size() && src[pos] == '/') {
      std::size_t mark = pos;
      ++pos;
      skip_ws();
      std::string den = digits();
      if (den.empty()) {
        pos = mark;  // let the slash fail as an unknown operator
        return parse_rational(num);
      }
      if (den.find_first_not_of('0') == std::string::npos) fail("zero denominator");
      return parse_rational(num + "/" + den);
    }
    return parse_rational(num);
  }
  std::string ident() {
    std::string name;
    while (pos < src.size() &&
           (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
      name += src[pos++];
    return name;
  }
};

std::optional<int> generator_index(const std::string& name) {
  if (name.size() < 2 || name[0] != 'e') return std::nullopt;
  long v = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
    v = v * 10 + (name[i] - '0');
    if (v > 100000) return std::nullopt;
  }
  return static_cast<int>(v);
}

struct Parser {
  Lexer lex;
  bool allow_generators;

  std::vector<ParsedTerm> expr() {
    std::vector<ParsedTerm> acc;
    bool negate = lex.accept('-');
    append(acc, term(), negate);
    while (true) {
      if (lex.accept('+'))
        append(acc, term(), false);
      else if (lex.accept('-'))
        append(acc, term(), true);
      else
        break;
    }
    return acc;
  }

  std::vector<ParsedTerm> term() {
    std::vector<ParsedTerm> acc = factor();
    while (lex.accept('*')) acc = product(acc, factor());
    return acc;
  }

  std::vector<ParsedTerm> factor() {
    std::vector<ParsedTerm> base = primary();
    if (lex.accept('^')) {
      if (!std::isdigit(static_cast<unsigned char>(lex.peek()))) lex.fail("expected exponent");
      Rational e = lex.number();
      if (denominator(e) != 1 || e < 0 || e > 64) lex.fail("exponent out of range");
      std::uint32_t k = numerator(e).convert_to<std::uint32_t>();
      std::vector<ParsedTerm> acc{ParsedTerm{}};
      for (std::uint32_t i = 0; i < k; ++i) acc = product(acc, base);
      return acc;
    }
    return base;
  }

  std::vector<ParsedTerm> primary() {
    char c = lex.peek();
    if (c == '(') {
      lex.accept('(');
      auto inner = expr();
      if (!lex.accept(')')) lex.fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      ParsedTerm t;
      t.coeff = lex.number();
      return {t};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name = lex.ident();
      ParsedTerm t;
      if (auto g = generator_index(name)) {
        if (!allow_generators)
          lex.fail("generator '" + name + "' is not allowed in a polynomial");
        t.factors.emplace_back(*g);
      } else {
        t.factors.emplace_back(name);
      }
      return {t};
    }
    lex.fail(c == '\0' ? std::string("unexpected end of input")
                       : "unexpected character '" + std::string(1, c) + "'");
  }

  static void append(std::vector<ParsedTerm>& acc, std::vector<ParsedTerm> more, bool negate) {
    for (auto& t : more) {
      if (negate) t.coeff = -t.coeff;
      acc.push_back(std::move(t));
    }
  }

  // Distributes, preserving factor order within every term.
  static std::vector<ParsedTerm> product(const std::vector<ParsedTerm>& a,
                                         const std::vector<ParsedTerm>& b) {
    std::vector<ParsedTerm> out;
    out.reserve(a.size() * b.size());
    for (const auto& ta : a) {
      for (const auto& tb : b) {
        ParsedTerm t;
        t.coeff = ta.coeff * tb.coeff;
        t.factors = ta.factors;
        t.factors.insert(t.factors.end(), tb.factors.begin(), tb.factors.end());
        out.push_back(std::move(t));
      }
    }
    return out;
  }
};

}  // namespace

std::vector<ParsedTerm> parse_terms(std::string_view src, bool allow_generators) {
  Parser p{Lexer{src}, allow_generators};
  if (p.lex.eof()) p.lex.fail("empty expression");
  auto terms = p.expr();
  if (!p.lex.eof()) p.lex.fail("trailing input");
  return terms;
}

Poly parse_poly(std::string_view src) {
  Poly sum;
  for (const auto& t : parse_terms(src, false)) {
    Poly prod{t.coeff};
    for (const auto& f : t.factors) prod *= Poly::variable(std::get<std::string>(f));
    sum += prod;
  }
  return sum;
}

}  // namespace algq
