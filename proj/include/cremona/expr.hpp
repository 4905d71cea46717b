#pragma once

// Expressions over the generators H, E of one chart:
//
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*')? factor)*
//   factor := base ('^' uint)?
//   base   := int | 'H' | 'E' | 'd1' | 'd2' | '(' expr ')'
//   int    := ['-'] digit+
//
// Juxtaposition multiplies, so "(2H-E)^8 (5H-3E)" parses as a product. A
// '-' following a complete factor is always subtraction; a negative literal
// can only start a factor (after '(', '*', '+', '-' or at the start).

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cremona/errors.hpp"
#include "cremona/poly.hpp"
#include "cremona/rational.hpp"
#include "cremona/ringeval.hpp"

namespace cremona {

struct Expr {
  enum class Kind { Sum, Difference, Product, Power, Literal, Generator, Symbol, Group };

  Kind kind = Kind::Literal;
  Integer value = 0;        // Literal
  unsigned exponent = 0;    // Power
  std::string name;         // Generator ("H"/"E") or Symbol ("d1"/"d2")
  std::vector<Expr> args;   // operands; Group and Power have one

  static Expr literal(Integer v) {
    Expr e;
    e.kind = Kind::Literal;
    e.value = std::move(v);
    return e;
  }
  static Expr generator(std::string g) {
    Expr e;
    e.kind = Kind::Generator;
    e.name = std::move(g);
    return e;
  }
  static Expr symbol(std::string s) {
    Expr e;
    e.kind = Kind::Symbol;
    e.name = std::move(s);
    return e;
  }
  static Expr binary(Kind k, Expr l, Expr r) {
    Expr e;
    e.kind = k;
    e.args.push_back(std::move(l));
    e.args.push_back(std::move(r));
    return e;
  }
  static Expr power(Expr base, unsigned exp) {
    Expr e;
    e.kind = Kind::Power;
    e.exponent = exp;
    e.args.push_back(std::move(base));
    return e;
  }
  static Expr group(Expr inner) {
    Expr e;
    e.kind = Kind::Group;
    e.args.push_back(std::move(inner));
    return e;
  }

  bool operator==(const Expr& o) const {
    return kind == o.kind && value == o.value && exponent == o.exponent && name == o.name && args == o.args;
  }
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t column, std::vector<std::string> expected, const std::string& found)
      : std::runtime_error(format(column, expected, found)), column(column), expected(std::move(expected)) {}

  std::size_t column;  // 1-based
  std::vector<std::string> expected;

 private:
  static std::string format(std::size_t column, const std::vector<std::string>& expected, const std::string& found) {
    std::string s = "syntax error at column " + std::to_string(column) + ": found " + found + ", expected one of {";
    for (std::size_t i = 0; i < expected.size(); ++i) s += (i ? ", " : "") + expected[i];
    return s + "}";
  }
};

namespace detail {

struct Token {
  enum class Kind { Int, Plus, Minus, Star, Caret, LParen, RParen, H, E, D1, D2, End };
  Kind kind;
  std::string text;
  std::size_t column;
};

inline std::string describe(const Token& t) { return t.kind == Token::Kind::End ? "end of input" : "'" + t.text + "'"; }

inline const std::vector<std::string>& base_expected() {
  static const std::vector<std::string> e{"integer", "'H'", "'E'", "'d1'", "'d2'", "'('"};
  return e;
}

inline std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    const char ch = src[i];
    const std::size_t col = i + 1;
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Token::Kind::Int, std::string(src.substr(i, j - i)), col});
      i = j;
      continue;
    }
    if (ch == 'd' && i + 1 < src.size() && (src[i + 1] == '1' || src[i + 1] == '2') &&
        (i + 2 == src.size() || !std::isalnum(static_cast<unsigned char>(src[i + 2])))) {
      out.push_back({src[i + 1] == '1' ? Token::Kind::D1 : Token::Kind::D2, std::string(src.substr(i, 2)), col});
      i += 2;
      continue;
    }
    Token::Kind k;
    switch (ch) {
      case '+': k = Token::Kind::Plus; break;
      case '-': k = Token::Kind::Minus; break;
      case '*': k = Token::Kind::Star; break;
      case '^': k = Token::Kind::Caret; break;
      case '(': k = Token::Kind::LParen; break;
      case ')': k = Token::Kind::RParen; break;
      case 'H': k = Token::Kind::H; break;
      case 'E': k = Token::Kind::E; break;
      default: {
        std::vector<std::string> exp = base_expected();
        for (const char* op : {"'+'", "'-'", "'*'", "'^'", "')'"}) exp.emplace_back(op);
        throw ParseError(col, exp, "'" + std::string(1, ch) + "'");
      }
    }
    out.push_back({k, std::string(1, ch), col});
    ++i;
  }
  out.push_back({Token::Kind::End, "", src.size() + 1});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Expr parse() {
    Expr e = expr();
    if (peek().kind != Token::Kind::End)
      throw ParseError(peek().column, {"'+'", "'-'", "'*'", "'^'", "integer", "'H'", "'E'", "'d1'", "'d2'", "'('", "end of input"},
                       describe(peek()));
    return e;
  }

 private:
  using K = Token::Kind;

  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  static bool starts_factor(K k) {
    return k == K::Int || k == K::H || k == K::E || k == K::D1 || k == K::D2 || k == K::LParen;
  }

  Expr expr() {
    Expr e = term();
    while (peek().kind == K::Plus || peek().kind == K::Minus) {
      const auto kind = next().kind == K::Plus ? Expr::Kind::Sum : Expr::Kind::Difference;
      e = Expr::binary(kind, std::move(e), term());
    }
    return e;
  }

  Expr term() {
    Expr e = factor();
    for (;;) {
      if (peek().kind == K::Star) {
        next();
      } else if (!starts_factor(peek().kind)) {
        break;
      }
      e = Expr::binary(Expr::Kind::Product, std::move(e), factor());
    }
    return e;
  }

  Expr factor() {
    Expr b = base();
    if (peek().kind != K::Caret) return b;
    next();
    const Token& t = peek();
    if (t.kind != K::Int) throw ParseError(t.column, {"unsigned integer"}, describe(t));
    next();
    if (t.text.size() > 9) throw ParseError(t.column, {"exponent below 10^9"}, describe(t));
    return Expr::power(std::move(b), static_cast<unsigned>(std::stoul(t.text)));
  }

  Expr base() {
    const Token& t = peek();
    switch (t.kind) {
      case K::Int:
        next();
        return Expr::literal(Integer(t.text));
      case K::Minus: {
        next();
        const Token& d = peek();
        if (d.kind != K::Int) throw ParseError(d.column, {"integer"}, describe(d));
        next();
        return Expr::literal(-Integer(d.text));
      }
      case K::H:
      case K::E:
        next();
        return Expr::generator(t.text);
      case K::D1:
      case K::D2:
        next();
        return Expr::symbol(t.text);
      case K::LParen: {
        next();
        Expr inner = expr();
        if (peek().kind != K::RParen) throw ParseError(peek().column, {"'+'", "'-'", "'*'", "')'"}, describe(peek()));
        next();
        return Expr::group(std::move(inner));
      }
      default:
        throw ParseError(t.column, base_expected(), describe(t));
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Expr parse_expr(std::string_view input) {
  bool blank = true;
  for (char ch : input) blank = blank && std::isspace(static_cast<unsigned char>(ch));
  if (blank) throw ParseError(1, detail::base_expected(), "end of input");
  return detail::Parser(detail::tokenize(input)).parse();
}

/// Canonical text; parse(print(e)) == e for every tree the parser produces.
inline std::string print_expr(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Sum: return print_expr(e.args[0]) + " + " + print_expr(e.args[1]);
    case Expr::Kind::Difference: return print_expr(e.args[0]) + " - " + print_expr(e.args[1]);
    case Expr::Kind::Product: return print_expr(e.args[0]) + " * " + print_expr(e.args[1]);
    case Expr::Kind::Power: return print_expr(e.args[0]) + "^" + std::to_string(e.exponent);
    case Expr::Kind::Literal: return e.value.get_str();
    case Expr::Kind::Generator:
    case Expr::Kind::Symbol: return e.name;
    case Expr::Kind::Group: return "(" + print_expr(e.args[0]) + ")";
  }
  return {};
}

namespace detail {

constexpr int kMaxExpansionDegree = 4096;

inline int max_degree(const ChowPoly& p) {
  int d = 0;
  for (const auto& [k, _] : p.terms()) d = std::max(d, k.first + k.second);
  return d;
}

inline ChowPoly to_chow(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Sum: return to_chow(e.args[0]) + to_chow(e.args[1]);
    case Expr::Kind::Difference: return to_chow(e.args[0]) - to_chow(e.args[1]);
    case Expr::Kind::Product: return to_chow(e.args[0]) * to_chow(e.args[1]);
    case Expr::Kind::Power: {
      const ChowPoly base = to_chow(e.args[0]);
      if (static_cast<long long>(max_degree(base)) * e.exponent > kMaxExpansionDegree)
        throw DomainError("expansion degree exceeds " + std::to_string(kMaxExpansionDegree));
      return base.pow(e.exponent);
    }
    case Expr::Kind::Literal: return ChowPoly(Poly(Rational(e.value)));
    case Expr::Kind::Generator: return e.name == "H" ? ChowPoly::H() : ChowPoly::E();
    case Expr::Kind::Symbol: return ChowPoly(Poly::var(e.name));
    case Expr::Kind::Group: return to_chow(e.args[0]);
  }
  return {};
}

}  // namespace detail

/// Expands the expression in H, E and substitutes the intersection table of
/// an n-fold blown up along an m-dimensional center of degree `deg`.
inline LinearForm eval_expr(const Expr& ast, int n, int m, const Poly& deg) {
  const IntersectionTable table(Chart::Two, n, m, deg);
  return evaluate(detail::to_chow(ast), table);
}

}  // namespace cremona
