#include "esl_cli/map_spec.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace esl::cli {
namespace {

enum class Tok { Int, Ident, Sym, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line, column;
  std::size_t offset;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < s.size()) {
    const unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      advance(1);
    } else if (c == '#') {
      while (i < s.size() && s[i] != '\n') advance(1);
    } else if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Int, std::string(s.substr(i, j - i)), line, col, i});
      advance(j - i);
    } else if (std::isalpha(c)) {
      // Identifiers are a letter run: "map", "at", "n", "m", "f", "x".
      std::size_t j = i;
      while (j < s.size() && std::isalpha(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Ident, std::string(s.substr(i, j - i)), line, col, i});
      advance(j - i);
    } else if (std::string_view("{}=,+-*/^()").find(static_cast<char>(c)) != std::string_view::npos) {
      out.push_back({Tok::Sym, std::string(1, static_cast<char>(c)), line, col, i});
      advance(1);
    } else {
      throw SpecError(std::string("unexpected character '") + static_cast<char>(c) + "'", line, col);
    }
  }
  out.push_back({Tok::End, "", line, col, s.size()});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text) : text_(text), toks_(tokenize(text)) {}

  MapSpec parse() {
    MapSpec spec;
    expect_ident("map");
    expect_sym("{");
    expect_ident("n");
    expect_sym("=");
    spec.n = positive_int("n");
    expect_sym(",");
    expect_ident("m");
    expect_sym("=");
    spec.m = positive_int("m");
    expect_sym("}");
    n_ = spec.n;

    std::vector<std::optional<Polynomial>> comps(spec.m);
    spec.component_sources.assign(spec.m, "");
    while (peek().kind == Tok::Ident && peek().text == "f") {
      const Token f = next();
      if (peek().kind != Tok::Int) fail("expected a component index after 'f'", peek());
      const Token idx = next();
      const std::size_t j = to_size(idx);
      if (j < 1 || j > spec.m)
        fail("component f" + idx.text + " is outside f1..f" + std::to_string(spec.m), f);
      if (comps[j - 1]) fail("component f" + idx.text + " defined twice", f);
      expect_sym("=");
      const std::size_t start = peek().offset;
      Polynomial p = expr();
      const std::size_t stop = peek().offset;
      spec.component_sources[j - 1] = trimmed(text_.substr(start, stop - start));
      comps[j - 1] = std::move(p);
    }
    for (std::size_t j = 0; j < spec.m; ++j) {
      if (!comps[j]) fail("component f" + std::to_string(j + 1) + " is missing", peek());
      spec.components.push_back(std::move(*comps[j]));
    }

    if (peek().kind == Tok::Ident && peek().text == "at") {
      const Token at = next();
      expect_sym("(");
      std::vector<Rational> pt{signed_rational()};
      while (peek().kind == Tok::Sym && peek().text == ",") {
        next();
        pt.push_back(signed_rational());
      }
      expect_sym(")");
      if (pt.size() != spec.n)
        fail("point has " + std::to_string(pt.size()) + " coordinates, expected " +
                 std::to_string(spec.n),
             at);
      spec.point = std::move(pt);
    }
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'", peek());
    return spec;
  }

 private:
  [[noreturn]] static void fail(const std::string& what, const Token& t) {
    throw SpecError(what, t.line, t.column);
  }

  static std::string trimmed(std::string_view s) {
    std::string out;
    bool space = false;
    for (char c : s) {
      if (std::isspace(static_cast<unsigned char>(c))) {
        space = !out.empty();
      } else {
        if (space) out += ' ';
        space = false;
        out += c;
      }
    }
    return out;
  }

  const Token& peek() const { return toks_[pos_]; }
  Token next() { return toks_[pos_++]; }

  void expect_sym(const char* s) {
    if (peek().kind != Tok::Sym || peek().text != s)
      fail(std::string("expected '") + s + "'", peek());
    next();
  }

  void expect_ident(const char* s) {
    if (peek().kind != Tok::Ident || peek().text != s)
      fail(std::string("expected '") + s + "'", peek());
    next();
  }

  static std::size_t to_size(const Token& t) {
    if (t.text.size() > 9) fail("integer too large", t);
    return static_cast<std::size_t>(std::stoul(t.text));
  }

  std::size_t positive_int(const char* what) {
    if (peek().kind != Tok::Int) fail(std::string("expected an integer for ") + what, peek());
    const Token t = next();
    const std::size_t v = to_size(t);
    if (v == 0) fail(std::string(what) + " must be positive", t);
    return v;
  }

  Rational rational() {
    const Token num = next();
    mpz_class numerator(num.text);
    if (peek().kind == Tok::Sym && peek().text == "/") {
      next();
      if (peek().kind != Tok::Int) fail("expected a denominator", peek());
      const Token den = next();
      mpz_class d(den.text);
      if (d == 0) fail("zero denominator", den);
      return Rational(numerator, d);
    }
    return Rational(numerator);
  }

  Rational signed_rational() {
    bool negative = false;
    if (peek().kind == Tok::Sym && (peek().text == "-" || peek().text == "+")) {
      negative = next().text == "-";
    }
    if (peek().kind != Tok::Int) fail("expected a rational number", peek());
    Rational r = rational();
    return negative ? -r : r;
  }

  Polynomial expr() {
    Polynomial acc = term();
    while (peek().kind == Tok::Sym && (peek().text == "+" || peek().text == "-")) {
      const bool minus = next().text == "-";
      Polynomial t = term();
      if (minus) {
        acc -= t;
      } else {
        acc += t;
      }
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (peek().kind == Tok::Sym && peek().text == "*") {
      next();
      acc = acc * factor();
    }
    return acc;
  }

  Polynomial factor() {
    const Token& t = peek();
    if (t.kind == Tok::Int) return Polynomial::constant(n_, rational());
    if (t.kind == Tok::Sym && t.text == "-") {
      next();
      return -factor();
    }
    if (t.kind == Tok::Sym && t.text == "(") {
      next();
      Polynomial inner = expr();
      expect_sym(")");
      return inner;
    }
    if (t.kind == Tok::Ident && t.text == "x") {
      const Token x = next();
      if (peek().kind != Tok::Int) fail("expected a variable index after 'x'", peek());
      const Token idx = next();
      const std::size_t i = to_size(idx);
      if (i < 1 || i > n_)
        throw UnknownVariable("UnknownVariable: x" + idx.text + " (map has x1..x" +
                                  std::to_string(n_) + ")",
                              x.line, x.column);
      Polynomial v = Polynomial::variable(n_, i - 1);
      if (peek().kind == Tok::Sym && peek().text == "^") {
        next();
        if (peek().kind == Tok::Sym && peek().text == "-")
          throw NegativeExponent("NegativeExponent: exponents must be nonnegative", peek().line, peek().column);
        if (peek().kind != Tok::Int) fail("expected an exponent", peek());
        const Token e = next();
        const mpz_class ev(e.text);
        if (ev > kMaxExponent) fail("exponent exceeds " + std::to_string(kMaxExponent), e);
        v = v.pow(static_cast<unsigned>(ev.get_ui()));
      }
      return v;
    }
    if (t.kind == Tok::End) fail("unexpected end of input", t);
    fail("unexpected '" + t.text + "'", t);
  }

  std::string_view text_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t n_ = 0;
};

}  // namespace

std::vector<Rational> MapSpec::base_point() const {
  return point ? *point : std::vector<Rational>(n, Rational(0));
}

MapSpec parse_map_spec(std::string_view text) { return Parser(text).parse(); }

std::string print_map_spec(const MapSpec& spec) {
  std::ostringstream os;
  os << "map{n=" << spec.n << ",m=" << spec.m << "}\n";
  for (std::size_t j = 0; j < spec.components.size(); ++j)
    os << "f" << j + 1 << " = " << spec.components[j].str("x") << "\n";
  if (spec.point) {
    os << "at (";
    for (std::size_t i = 0; i < spec.point->size(); ++i)
      os << (i ? ", " : "") << (*spec.point)[i].str();
    os << ")\n";
  }
  return os.str();
}

MapSpec load_map_spec(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_map_spec(buf.str());
  }
  return parse_map_spec(arg);
}

}  // namespace esl::cli
