#pragma once

// Recursive-descent parser for algebra and model expressions.
//
//   expr     := ['-'] term (('+' | '-') term)*
//   term     := rational | [rational '*'] atom ('*' atom)*
//   atom     := 'x' digit | 'd' digit digit | 'dp' digit | ident
//             | atom '^' nat | '(' expr ')'
//   rational := int ['/' nat]
//
// 'd35' is the 2-form dx3^dx5, 'dp3' the field d/dx3 (or the dual model
// generator in the model context); other identifiers resolve through
// named_element. Syntax errors carry the character position. Evaluation
// validates the result, naming the violated invariant: the odd part must be a
// closed 2-form, the even part divergence free.

#include <cctype>
#include <string>
#include <utility>
#include <vector>

#include "e36_algebra.hpp"
#include "model.hpp"

namespace e36 {

struct ParseError : error {
  size_t pos;
  ParseError(const std::string& msg, size_t p)
      : error(msg + " at position " + std::to_string(p)), pos(p) {}
};

// sum of terms; a term is a coefficient times a product of powered atoms
struct ExprAtom;
struct ExprTerm {
  Rational coeff = 1;
  std::vector<ExprAtom> atoms;
};
struct ExpressionAST {
  std::vector<ExprTerm> terms;
};

struct ExprAtom {
  enum Kind { Var, Form, Field, Named, Group } kind = Var;
  int i = 0, j = 0;     // Var/Field index; Form uses both
  std::string name;     // Named
  ExpressionAST sub;    // Group
  int power = 1;
};

namespace detail {

struct Lexer {
  const std::string& s;
  size_t pos = 0;

  void skip() {
    while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
  }
  bool eof() {
    skip();
    return pos >= s.size();
  }
  char peek() {
    skip();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos);
  }
  long long nat() {
    skip();
    if (pos >= s.size() || !std::isdigit((unsigned char)s[pos]))
      throw ParseError("expected a number", pos);
    long long v = 0;
    while (pos < s.size() && std::isdigit((unsigned char)s[pos])) {
      v = v * 10 + (s[pos] - '0');
      if (v > (1ll << 40)) throw ParseError("number too large", pos);
      ++pos;
    }
    return v;
  }
  std::string ident() {
    skip();
    size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum((unsigned char)s[pos]) || s[pos] == '_' || s[pos] == '\''))
      ++pos;
    if (start == pos) throw ParseError("expected an identifier", pos);
    return s.substr(start, pos - start);
  }
  bool starts_rational() {
    char c = peek();
    return std::isdigit((unsigned char)c);
  }
};

struct Parser {
  Lexer lx;

  explicit Parser(const std::string& text) : lx{text} {}

  Rational rational() {
    bool neg = lx.accept('-');
    long long num = lx.nat();
    long long den = 1;
    if (lx.accept('/')) {
      den = lx.nat();
      if (den == 0) throw ParseError("zero denominator", lx.pos);
    }
    Rational r(num, den);
    return neg ? -r : r;
  }

  ExprAtom atom() {
    ExprAtom a;
    if (lx.accept('(')) {
      a.kind = ExprAtom::Group;
      a.sub = expr();
      lx.expect(')');
    } else {
      size_t start = lx.pos;
      std::string id = lx.ident();
      // the three letter-digit shapes take precedence over named lookup
      auto digits_after = [&](size_t k) {
        for (size_t t = k; t < id.size(); ++t)
          if (!std::isdigit((unsigned char)id[t])) return false;
        return id.size() > k;
      };
      if (id[0] == 'x' && digits_after(1) && id.size() == 2) {
        a.kind = ExprAtom::Var;
        a.i = id[1] - '0';
        if (a.i < 1 || a.i > 5) throw ParseError("variable index out of range", start);
      } else if (id.rfind("dp", 0) == 0 && digits_after(2) && id.size() == 3) {
        a.kind = ExprAtom::Field;
        a.i = id[2] - '0';
        if (a.i < 1 || a.i > 5) throw ParseError("field index out of range", start);
      } else if (id[0] == 'd' && digits_after(1) && id.size() == 3) {
        a.kind = ExprAtom::Form;
        a.i = id[1] - '0';
        a.j = id[2] - '0';
        if (a.i < 1 || a.i > 5 || a.j < 1 || a.j > 5 || a.i == a.j)
          throw ParseError("form indices out of range", start);
      } else {
        a.kind = ExprAtom::Named;
        a.name = id;
      }
    }
    while (lx.accept('^')) {
      long long e = lx.nat();
      if (e > 64) throw ParseError("exponent too large", lx.pos);
      a.power *= int(e);
      if (e == 0) a.power = 0;
    }
    return a;
  }

  ExprTerm term() {
    ExprTerm t;
    if (lx.starts_rational()) {
      t.coeff = rational();
      if (!lx.accept('*')) return t;  // bare rational term
    }
    t.atoms.push_back(atom());
    while (lx.accept('*')) t.atoms.push_back(atom());
    return t;
  }

  ExpressionAST expr() {
    ExpressionAST e;
    bool neg = lx.accept('-');
    ExprTerm t = term();
    if (neg) t.coeff = -t.coeff;
    e.terms.push_back(std::move(t));
    for (;;) {
      if (lx.accept('+'))
        e.terms.push_back(term());
      else if (lx.accept('-')) {
        ExprTerm u = term();
        u.coeff = -u.coeff;
        e.terms.push_back(std::move(u));
      } else
        break;
    }
    return e;
  }
};

}  // namespace detail

inline ExpressionAST parse_expression(const std::string& text) {
  detail::Parser p(text);
  ExpressionAST ast = p.expr();
  if (!p.lx.eof()) throw ParseError("unexpected trailing input", p.lx.pos);
  return ast;
}

inline std::string ast_to_string(const ExpressionAST& e);

inline std::string ast_to_string(const ExprAtom& a) {
  std::string s;
  switch (a.kind) {
    case ExprAtom::Var: s = "x" + std::to_string(a.i); break;
    case ExprAtom::Field: s = "dp" + std::to_string(a.i); break;
    case ExprAtom::Form: s = "d" + std::to_string(a.i) + std::to_string(a.j); break;
    case ExprAtom::Named: s = a.name; break;
    case ExprAtom::Group: s = "(" + ast_to_string(a.sub) + ")"; break;
  }
  if (a.power != 1) s += "^" + std::to_string(a.power);
  return s;
}

inline std::string ast_to_string(const ExpressionAST& e) {
  std::string out;
  for (auto& t : e.terms) {
    Rational c = t.coeff;
    std::string sign;
    if (out.empty())
      sign = c < 0 ? "-" : "";
    else
      sign = c < 0 ? " - " : " + ";
    if (c < 0) c = -c;
    std::string body;
    for (auto& a : t.atoms) {
      if (!body.empty()) body += "*";
      body += ast_to_string(a);
    }
    std::string cs = rat_pretty(c);
    if (body.empty())
      out += sign + cs;
    else if (cs == "1")
      out += sign + body;
    else
      out += sign + cs + "*" + body;
  }
  return out.empty() ? "0" : out;
}

// ---- algebra evaluation ----

// intermediate value: a scalar polynomial, an algebra element, or their
// formal sum while a parenthesized group is still open
struct AlgValue {
  Poly5 s;
  SuperElement e;

  bool pure_scalar() const { return e.is_zero(); }
};

namespace detail {

inline SuperElement scale_by_poly(const SuperElement& e, const Poly5& p) {
  SuperElement r;
  for (int i = 0; i < 5; ++i) r.ev.a[i] = e.ev.a[i] * p;
  for (int s = 0; s < 10; ++s) r.od.b[s] = e.od.b[s] * p;
  return r;
}

inline AlgValue alg_mul(const AlgValue& a, const AlgValue& b) {
  if (!a.pure_scalar() && !b.pure_scalar())
    throw error("cannot multiply two algebra elements; only scalar factors are allowed");
  if (b.pure_scalar()) return {a.s * b.s, scale_by_poly(a.e, b.s)};
  return {a.s * b.s, scale_by_poly(b.e, a.s)};
}

inline AlgValue alg_eval(const ExpressionAST& e);

inline AlgValue alg_eval(const ExprAtom& a) {
  AlgValue v;
  switch (a.kind) {
    case ExprAtom::Var: {
      Poly5::Key k{};
      k[a.i - 1] = 1;
      v.s = Poly5::monomial(k, 1);
      break;
    }
    case ExprAtom::Field:
      v.e = field_elem(a.i, Poly5::one());
      break;
    case ExprAtom::Form:
      v.e = form_elem(a.i, a.j, Poly5::one());
      break;
    case ExprAtom::Named:
      v.e = named_element(a.name);
      break;
    case ExprAtom::Group:
      v = alg_eval(a.sub);
      break;
  }
  if (a.power != 1) {
    if (!v.pure_scalar()) {
      if (a.power == 0) return {Poly5::one(), {}};
      throw error("cannot raise an algebra element to a power");
    }
    Poly5 r = Poly5::one();
    for (int t = 0; t < a.power; ++t) r = r * v.s;
    v.s = r;
  }
  return v;
}

inline AlgValue alg_eval(const ExpressionAST& e) {
  AlgValue out;
  for (auto& t : e.terms) {
    AlgValue prod{Poly5::constant(t.coeff), {}};
    for (auto& a : t.atoms) prod = alg_mul(prod, alg_eval(a));
    out.s += prod.s;
    out.e += prod.e;
  }
  return out;
}

}  // namespace detail

// evaluates to a validated algebra element; scalars are not elements
inline SuperElement eval_algebra(const ExpressionAST& ast) {
  AlgValue v = detail::alg_eval(ast);
  if (!v.s.is_zero())
    throw error("expression has a scalar part; it does not evaluate to an algebra element");
  if (!is_closed(v.e.od)) throw error("non-closed 2-form");
  if (!divergence(v.e.ev).is_zero()) throw error("vector field has nonzero divergence");
  return v.e;
}

inline SuperElement eval_algebra(const std::string& text) {
  return eval_algebra(parse_expression(text));
}

// ---- model evaluation ----

namespace detail {

inline ModelElement model_eval(const ExpressionAST& e);

inline ModelElement model_eval(const ExprAtom& a) {
  ModelElement v;
  switch (a.kind) {
    case ExprAtom::Var: {
      if (a.i > 3) throw error("model variables range over x1..x3");
      Poly6::Key k{};
      k[3 + a.i - 1] = 1;
      v = ModelElement::monomial(k);
      break;
    }
    case ExprAtom::Field: {
      if (a.i > 3) throw error("model generators range over dp1..dp3");
      Poly6::Key k{};
      k[a.i - 1] = 1;
      v = ModelElement::monomial(k);
      break;
    }
    case ExprAtom::Form:
      throw error("2-forms are not model elements");
    case ExprAtom::Named:
      throw error("named algebra elements are not model elements: " + a.name);
    case ExprAtom::Group:
      v = model_eval(a.sub);
      break;
  }
  if (a.power != 1) {
    ModelElement r = ModelElement::monomial(Poly6::Key{});
    for (int t = 0; t < a.power; ++t) r = r * v;
    v = r;
  }
  return v;
}

inline ModelElement model_eval(const ExpressionAST& e) {
  ModelElement out;
  for (auto& t : e.terms) {
    ModelElement prod = ModelElement::monomial(Poly6::Key{}, t.coeff);
    for (auto& a : t.atoms) prod = prod * model_eval(a);
    out += prod;
  }
  return out;
}

}  // namespace detail

inline ModelElement eval_model(const ExpressionAST& ast) { return detail::model_eval(ast); }

inline ModelElement eval_model(const std::string& text) {
  return eval_model(parse_expression(text));
}

}  // namespace e36
