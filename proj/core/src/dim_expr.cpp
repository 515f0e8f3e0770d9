#include "scindex/dim_expr.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <vector>

#include "scindex/errors.hpp"

namespace scindex {

struct DimExpr::Node {
  Kind kind;
  std::string name;
  Rational exponent{1};
  std::optional<DimExpr> lhs;
  std::optional<DimExpr> rhs;
};

DimExpr DimExpr::symbol(std::string name) {
  return DimExpr{std::make_shared<const Node>(Node{Kind::Symbol, std::move(name), Rational{1}, {}, {}})};
}

DimExpr DimExpr::product(DimExpr lhs, DimExpr rhs) {
  return DimExpr{std::make_shared<const Node>(Node{Kind::Product, {}, Rational{1}, std::move(lhs), std::move(rhs)})};
}

DimExpr DimExpr::quotient(DimExpr lhs, DimExpr rhs) {
  return DimExpr{std::make_shared<const Node>(Node{Kind::Quotient, {}, Rational{1}, std::move(lhs), std::move(rhs)})};
}

DimExpr DimExpr::sum(DimExpr lhs, DimExpr rhs) {
  return DimExpr{std::make_shared<const Node>(Node{Kind::Sum, {}, Rational{1}, std::move(lhs), std::move(rhs)})};
}

DimExpr DimExpr::power(DimExpr base, Rational exponent) {
  return DimExpr{std::make_shared<const Node>(Node{Kind::Power, {}, exponent, std::move(base), {}})};
}

DimExpr::Kind DimExpr::kind() const noexcept { return node_->kind; }
const std::string& DimExpr::name() const noexcept { return node_->name; }
const Rational& DimExpr::exponent() const noexcept { return node_->exponent; }

const DimExpr& DimExpr::lhs() const {
  if (!node_->lhs) throw std::logic_error("DimExpr leaf has no operands");
  return *node_->lhs;
}

const DimExpr& DimExpr::rhs() const {
  if (!node_->rhs) throw std::logic_error("DimExpr node has no right operand");
  return *node_->rhs;
}

bool operator==(const DimExpr& a, const DimExpr& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.kind != y.kind || x.name != y.name || x.exponent != y.exponent) return false;
  if (x.lhs.has_value() != y.lhs.has_value() || x.rhs.has_value() != y.rhs.has_value()) return false;
  if (x.lhs && !(*x.lhs == *y.lhs)) return false;
  return !x.rhs || *x.rhs == *y.rhs;
}

namespace {

enum class Tok { Ident, Int, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok type;
  std::string_view text;
  std::size_t pos;
};

std::string describe(const Token& t) {
  if (t.type == Tok::End) return "end of input";
  return "'" + std::string(t.text) + "'";
}

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isalpha(c) || c == '_') {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      out.push_back({Tok::Ident, s.substr(start, i - start), start});
      continue;
    }
    if (std::isdigit(c)) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Tok::Int, s.substr(start, i - start), start});
      continue;
    }
    Tok t;
    switch (c) {
      case '+': t = Tok::Plus; break;
      case '-': t = Tok::Minus; break;
      case '*': t = Tok::Star; break;
      case '/': t = Tok::Slash; break;
      case '^': t = Tok::Caret; break;
      case '(': t = Tok::LParen; break;
      case ')': t = Tok::RParen; break;
      default:
        throw ParseError(start, "symbol, operator or parenthesis",
                         "'" + std::string(s.substr(start, 1)) + "'");
    }
    out.push_back({t, s.substr(start, 1), start});
    ++i;
  }
  out.push_back({Tok::End, {}, s.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

  DimExpr parse() {
    DimExpr e = parse_sum();
    if (peek().type != Tok::End) throw ParseError(peek().pos, "operator or end of input", describe(peek()));
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_++]; }

  const Token& expect(Tok type, const char* what) {
    if (peek().type != type) throw ParseError(peek().pos, what, describe(peek()));
    return take();
  }

  DimExpr parse_sum() {
    DimExpr lhs = parse_product();
    while (peek().type == Tok::Plus) {
      take();
      lhs = DimExpr::sum(std::move(lhs), parse_product());
    }
    return lhs;
  }

  DimExpr parse_product() {
    DimExpr lhs = parse_power();
    while (peek().type == Tok::Star || peek().type == Tok::Slash) {
      const bool mul = take().type == Tok::Star;
      DimExpr rhs = parse_power();
      lhs = mul ? DimExpr::product(std::move(lhs), std::move(rhs))
                : DimExpr::quotient(std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  DimExpr parse_power() {
    DimExpr base = parse_primary();
    if (peek().type != Tok::Caret) return base;
    take();
    return DimExpr::power(std::move(base), parse_exponent());
  }

  DimExpr parse_primary() {
    if (peek().type == Tok::Ident) return DimExpr::symbol(std::string(take().text));
    if (peek().type == Tok::LParen) {
      take();
      DimExpr inner = parse_sum();
      expect(Tok::RParen, "')'");
      return inner;
    }
    throw ParseError(peek().pos, "symbol or '('", describe(peek()));
  }

  std::int64_t parse_int() {
    bool negative = false;
    if (peek().type == Tok::Minus) {
      take();
      negative = true;
    }
    const Token& t = expect(Tok::Int, "integer");
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc{}) throw ParseError(t.pos, "integer within 64-bit range", describe(t));
    return negative ? -v : v;
  }

  Rational parse_exponent() {
    Rational r;
    if (peek().type == Tok::LParen) {
      take();
      const std::int64_t num = parse_int();
      std::int64_t den = 1;
      if (peek().type == Tok::Slash) {
        take();
        const std::size_t at = peek().pos;
        den = parse_int();
        if (den == 0) throw ParseError(at, "non-zero denominator", "0");
      }
      expect(Tok::RParen, "')'");
      r = Rational{num, den};
    } else if (peek().type == Tok::Int || peek().type == Tok::Minus) {
      r = Rational{parse_int()};
    } else {
      throw ParseError(peek().pos, "exponent (integer or parenthesised rational)", describe(peek()));
    }
    if (peek().type != Tok::Caret) return r;

    // a^r^s is a^(r^s); s must be an integer for r^s to stay rational.
    take();
    const std::size_t at = peek().pos;
    const Rational s = parse_exponent();
    if (!s.is_integer()) throw ParseError(at, "integer exponent in a chained power", s.to_string());
    return rational_power(r, s.num(), at);
  }

  static Rational rational_power(Rational base, std::int64_t n, std::size_t at) {
    if (n < 0) {
      if (base.is_zero()) throw ParseError(at, "non-negative power of zero", std::to_string(n));
      base = Rational{1} / base;
      n = -n;
    }
    Rational acc{1};
    try {
      for (std::int64_t k = 0; k < n; ++k) acc = acc * base;
    } catch (const DomainError&) {
      throw ParseError(at, "exponent within 64-bit range", std::to_string(n));
    }
    return acc;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

int precedence(const DimExpr& e) {
  switch (e.kind()) {
    case DimExpr::Kind::Sum: return 1;
    case DimExpr::Kind::Product:
    case DimExpr::Kind::Quotient: return 2;
    case DimExpr::Kind::Power: return 3;
    case DimExpr::Kind::Symbol: return 4;
  }
  return 0;
}

void print(const DimExpr& e, std::string& out);

void print_wrapped(const DimExpr& e, bool wrap, std::string& out) {
  if (wrap) out += '(';
  print(e, out);
  if (wrap) out += ')';
}

void print(const DimExpr& e, std::string& out) {
  switch (e.kind()) {
    case DimExpr::Kind::Symbol:
      out += e.name();
      return;
    case DimExpr::Kind::Sum:
      print_wrapped(e.lhs(), false, out);
      out += " + ";
      print_wrapped(e.rhs(), precedence(e.rhs()) <= 1, out);
      return;
    case DimExpr::Kind::Product:
    case DimExpr::Kind::Quotient:
      print_wrapped(e.lhs(), precedence(e.lhs()) < 2, out);
      out += e.kind() == DimExpr::Kind::Product ? '*' : '/';
      print_wrapped(e.rhs(), precedence(e.rhs()) <= 2, out);
      return;
    case DimExpr::Kind::Power: {
      print_wrapped(e.lhs(), precedence(e.lhs()) <= 3, out);
      out += '^';
      const Rational& r = e.exponent();
      if (r.is_integer() && r.num() >= 0) {
        out += r.to_string();
      } else {
        out += '(' + r.to_string() + ')';
      }
      return;
    }
  }
}

}  // namespace

DimExpr parse_dim_expr(std::string_view text) { return Parser{text}.parse(); }

std::string to_string(const DimExpr& expr) {
  std::string out;
  print(expr, out);
  return out;
}

Dimension eval_dim_expr(const DimExpr& expr, const SymbolTable& symbols) {
  switch (expr.kind()) {
    case DimExpr::Kind::Symbol: {
      auto it = symbols.find(expr.name());
      if (it == symbols.end()) throw UnknownSymbolError(expr.name());
      return it->second;
    }
    case DimExpr::Kind::Product:
      return dim_mul(eval_dim_expr(expr.lhs(), symbols), eval_dim_expr(expr.rhs(), symbols));
    case DimExpr::Kind::Quotient:
      return dim_div(eval_dim_expr(expr.lhs(), symbols), eval_dim_expr(expr.rhs(), symbols));
    case DimExpr::Kind::Power:
      return dim_pow(eval_dim_expr(expr.lhs(), symbols), expr.exponent());
    case DimExpr::Kind::Sum: {
      const Dimension a = eval_dim_expr(expr.lhs(), symbols);
      const Dimension b = eval_dim_expr(expr.rhs(), symbols);
      if (a != b) {
        throw HeterogeneityError("heterogeneous sum '" + to_string(expr) + "': " + a.to_string() +
                                 " + " + b.to_string());
      }
      return a;
    }
  }
  throw std::logic_error("unreachable DimExpr kind");
}

}  // namespace scindex
