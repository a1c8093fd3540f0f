#include "formula.hpp"

#include "errors.hpp"

#include <cctype>
#include <optional>

namespace armred {

std::string rel_str(Rel rel) {
  switch (rel) {
    case Rel::eq: return "=";
    case Rel::neq: return "!=";
    case Rel::ge: return ">=";
    case Rel::gt: return ">";
  }
  return "?";
}

Formula Formula::make_atom(Poly poly, Rel rel) {
  Formula f;
  f.kind = Kind::atom;
  f.atom = Atom{std::move(poly), rel};
  return f;
}

Formula Formula::make_conj(std::vector<Formula> children) {
  if (children.size() == 1) return std::move(children.front());
  Formula f;
  f.kind = Kind::conj;
  f.children = std::move(children);
  return f;
}

Formula Formula::make_disj(std::vector<Formula> children) {
  if (children.size() == 1) return std::move(children.front());
  Formula f;
  f.kind = Kind::disj;
  f.children = std::move(children);
  return f;
}

Formula Formula::make_neg(Formula child) {
  Formula f;
  f.kind = Kind::neg;
  f.children.push_back(std::move(child));
  return f;
}

namespace {

enum class Tok { integer, ident, plus, minus, star, caret, slash, lparen, rparen,
                 bang, and_op, or_op, rel_eq, rel_neq, rel_ge, rel_gt, end };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

class Lexer {
public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_ws();
    const int line = line_, col = col_;
    if (pos_ >= text_.size()) return {Tok::end, "", line, col};
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        digits += text_[pos_];
        advance();
      }
      return {Tok::integer, digits, line, col};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        name += text_[pos_];
        advance();
      }
      return {Tok::ident, name, line, col};
    }
    advance();
    switch (c) {
      case '+': return {Tok::plus, "+", line, col};
      case '-': return {Tok::minus, "-", line, col};
      case '*': return {Tok::star, "*", line, col};
      case '^': return {Tok::caret, "^", line, col};
      case '(': return {Tok::lparen, "(", line, col};
      case ')': return {Tok::rparen, ")", line, col};
      case '=': return {Tok::rel_eq, "=", line, col};
      case '/':
        if (pos_ < text_.size() && text_[pos_] == '\\') {
          advance();
          return {Tok::and_op, "/\\", line, col};
        }
        return {Tok::slash, "/", line, col};
      case '\\':
        if (pos_ < text_.size() && text_[pos_] == '/') {
          advance();
          return {Tok::or_op, "\\/", line, col};
        }
        break;
      case '!':
        if (pos_ < text_.size() && text_[pos_] == '=') {
          advance();
          return {Tok::rel_neq, "!=", line, col};
        }
        return {Tok::bang, "!", line, col};
      case '>':
        if (pos_ < text_.size() && text_[pos_] == '=') {
          advance();
          return {Tok::rel_ge, ">=", line, col};
        }
        return {Tok::rel_gt, ">", line, col};
      default: break;
    }
    fail(errc::parse, "unexpected character '" + std::string(1, c) + "' at " + std::to_string(line) +
                          ":" + std::to_string(col));
  }

private:
  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      advance();
    }
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view text_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
public:
  explicit Parser(std::string_view text) : lexer_(text) { shift(); }

  Formula parse() {
    Formula f = parse_disj();
    expect(Tok::end, "end of input");
    return f;
  }

private:
  [[noreturn]] void error_here(const std::string& what) {
    fail(errc::parse, "syntax error at " + std::to_string(cur_.line) + ":" + std::to_string(cur_.col) +
                          ": " + what + (cur_.kind == Tok::end ? " (got end of input)"
                                                               : " (got '" + cur_.text + "')"));
  }

  void shift() { cur_ = lexer_.next(); }

  bool accept(Tok kind) {
    if (cur_.kind != kind) return false;
    shift();
    return true;
  }

  void expect(Tok kind, const std::string& what) {
    if (cur_.kind != kind) error_here("expected " + what);
    shift();
  }

  Formula parse_disj() {
    std::vector<Formula> parts;
    parts.push_back(parse_conj());
    while (accept(Tok::or_op)) parts.push_back(parse_conj());
    return Formula::make_disj(std::move(parts));
  }

  Formula parse_conj() {
    std::vector<Formula> parts;
    parts.push_back(parse_unit());
    while (accept(Tok::and_op)) parts.push_back(parse_unit());
    return Formula::make_conj(std::move(parts));
  }

  Formula parse_unit() {
    if (accept(Tok::bang)) return Formula::make_neg(parse_unit());
    if (accept(Tok::lparen)) {
      Formula inner = parse_disj();
      expect(Tok::rparen, "')'");
      return inner;
    }
    return parse_atom();
  }

  Formula parse_atom() {
    Poly poly = parse_poly();
    Rel rel;
    switch (cur_.kind) {
      case Tok::rel_eq: rel = Rel::eq; break;
      case Tok::rel_neq: rel = Rel::neq; break;
      case Tok::rel_ge: rel = Rel::ge; break;
      case Tok::rel_gt: rel = Rel::gt; break;
      default: error_here("expected a relation ('=', '!=', '>=', '>')");
    }
    shift();
    // Comparisons are only against the literal 0; "p rel q" is rejected.
    if (cur_.kind != Tok::integer || cur_.text != "0") error_here("expected literal '0' after relation");
    shift();
    return Formula::make_atom(std::move(poly), rel);
  }

  Poly parse_poly() {
    Poly poly;
    bool negative = false;
    if (accept(Tok::minus)) {
      negative = true;
    } else {
      accept(Tok::plus);
    }
    poly += parse_term(negative);
    while (cur_.kind == Tok::plus || cur_.kind == Tok::minus) {
      const bool minus = cur_.kind == Tok::minus;
      shift();
      poly += parse_term(minus);
    }
    return poly;
  }

  Poly parse_term(bool negative) {
    Rat coeff = negative ? -1 : 1;
    Monomial monomial;
    bool first = true;
    while (true) {
      if (cur_.kind == Tok::integer) {
        Int num{cur_.text};
        shift();
        if (accept(Tok::slash)) {
          if (cur_.kind != Tok::integer) error_here("expected denominator digits");
          Int den{cur_.text};
          if (den == 0) error_here("zero denominator");
          shift();
          coeff *= Rat(num, den);
        } else {
          coeff *= Rat(num);
        }
      } else if (cur_.kind == Tok::ident) {
        const std::string name = cur_.text;
        shift();
        uint32_t exp = 1;
        if (accept(Tok::caret)) {
          if (cur_.kind != Tok::integer) error_here("expected exponent digits");
          if (cur_.text.size() > 9) error_here("exponent too large");
          exp = static_cast<uint32_t>(std::stoul(cur_.text));
          shift();
        }
        if (exp > 0) monomial[name] += exp;
      } else if (first) {
        error_here("expected a term");
      } else {
        error_here("expected a factor after '*'");
      }
      first = false;
      if (!accept(Tok::star)) break;
    }
    return Poly::term(coeff, std::move(monomial));
  }

  Lexer lexer_;
  Token cur_;
};

void render(const Formula& f, std::string& out, bool parenthesize_disj) {
  switch (f.kind) {
    case Formula::Kind::atom:
      out += f.atom.poly.str() + " " + rel_str(f.atom.rel) + " 0";
      return;
    case Formula::Kind::neg: {
      const Formula& child = f.children.front();
      out += "!";
      if (child.kind == Formula::Kind::atom || child.kind == Formula::Kind::neg) {
        render(child, out, false);
      } else {
        out += "(";
        render(child, out, false);
        out += ")";
      }
      return;
    }
    case Formula::Kind::conj: {
      bool first = true;
      for (const Formula& child : f.children) {
        if (!first) out += " /\\ ";
        first = false;
        if (child.kind == Formula::Kind::disj) {
          out += "(";
          render(child, out, false);
          out += ")";
        } else {
          render(child, out, true);
        }
      }
      return;
    }
    case Formula::Kind::disj: {
      if (parenthesize_disj) out += "(";
      bool first = true;
      for (const Formula& child : f.children) {
        if (!first) out += " \\/ ";
        first = false;
        render(child, out, true);
      }
      if (parenthesize_disj) out += ")";
      return;
    }
  }
}

Formula push(const Formula& f, bool negate) {
  switch (f.kind) {
    case Formula::Kind::atom: {
      if (!negate) return f;
      switch (f.atom.rel) {
        case Rel::eq: return Formula::make_atom(f.atom.poly, Rel::neq);
        case Rel::neq: return Formula::make_atom(f.atom.poly, Rel::eq);
        case Rel::ge: return Formula::make_atom(-f.atom.poly, Rel::gt);
        case Rel::gt: return Formula::make_atom(-f.atom.poly, Rel::ge);
      }
      fail(errc::internal, "unhandled relation");
    }
    case Formula::Kind::neg: return push(f.children.front(), !negate);
    case Formula::Kind::conj:
    case Formula::Kind::disj: {
      std::vector<Formula> children;
      children.reserve(f.children.size());
      for (const Formula& child : f.children) children.push_back(push(child, negate));
      const bool conj = (f.kind == Formula::Kind::conj) != negate;
      return conj ? Formula::make_conj(std::move(children))
                  : Formula::make_disj(std::move(children));
    }
  }
  fail(errc::internal, "unhandled formula kind");
}

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text).parse(); }

std::string formula_str(const Formula& f) {
  std::string out;
  render(f, out, false);
  return out;
}

Formula push_negations(const Formula& f) { return push(f, false); }

bool has_negation(const Formula& f) {
  if (f.kind == Formula::Kind::neg) return true;
  for (const Formula& child : f.children) {
    if (has_negation(child)) return true;
  }
  return false;
}

bool eval_formula(const Formula& f, const std::map<std::string, Rat>& assignment) {
  switch (f.kind) {
    case Formula::Kind::atom: {
      const Rat value = f.atom.poly.eval(assignment);
      switch (f.atom.rel) {
        case Rel::eq: return value == 0;
        case Rel::neq: return value != 0;
        case Rel::ge: return value >= 0;
        case Rel::gt: return value > 0;
      }
      fail(errc::internal, "unhandled relation");
    }
    case Formula::Kind::neg: return !eval_formula(f.children.front(), assignment);
    case Formula::Kind::conj:
      for (const Formula& child : f.children) {
        if (!eval_formula(child, assignment)) return false;
      }
      return true;
    case Formula::Kind::disj:
      for (const Formula& child : f.children) {
        if (eval_formula(child, assignment)) return true;
      }
      return false;
  }
  fail(errc::internal, "unhandled formula kind");
}

namespace {

void collect_formula_vars(const Formula& f, std::set<std::string>& out) {
  if (f.kind == Formula::Kind::atom) f.atom.poly.collect_vars(out);
  for (const Formula& child : f.children) collect_formula_vars(child, out);
}

}  // namespace

std::vector<std::string> formula_vars(const Formula& f) {
  std::set<std::string> vars;
  collect_formula_vars(f, vars);
  return {vars.begin(), vars.end()};
}

}  // namespace armred
