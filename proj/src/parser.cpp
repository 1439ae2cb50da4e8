#include "epscalc/parser.hpp"

#include <algorithm>

#include "lexer.hpp"

namespace epscalc::parser {

using namespace epscalc::syntax;
using lex::Cursor;
using lex::Token;

const Sequent* Theory::find_axiom(const std::string& name) const {
  for (const auto& [n, s] : axioms)
    if (n == name) return &s;
  return nullptr;
}

bool Theory::mentions_empty() const {
  if (sig.mentions_empty()) return true;
  for (const auto& [_, t] : terms)
    if (syntax::mentions_empty(t)) return true;
  for (const auto& [_, f] : formulas)
    if (syntax::mentions_empty(f)) return true;
  for (const auto& [_, s] : axioms) {
    for (const auto& h : s.hyps)
      if (syntax::mentions_empty(h)) return true;
    if (syntax::mentions_empty(s.concl)) return true;
    for (const auto& [__, ty] : s.ctx.entries())
      if (syntax::mentions_empty(ty)) return true;
  }
  return false;
}

namespace {

// Recursive-descent parser over a token cursor. Variable scope is the
// sequent context plus the enclosing binders; binders may not shadow.
class Parser {
 public:
  Parser(Cursor& cur, const Signature& sig) : cur_(cur), sig_(sig) {}

  void push_scope(const Context& ctx) {
    for (const auto& [n, t] : ctx.entries()) scope_.emplace_back(n, t);
  }

  // ---- types: Fun lowest (right assoc), then Sum, then Prod, then atoms.

  TypePtr type() {
    TypePtr t = type_sum();
    if (cur_.accept("->")) return ty_fun(std::move(t), type());
    return t;
  }

  TypePtr type_sum() {
    TypePtr t = type_prod();
    while (cur_.accept("+")) t = ty_sum(std::move(t), type_prod());
    return t;
  }

  TypePtr type_prod() {
    TypePtr t = type_atom();
    while (cur_.accept("*")) t = ty_prod(std::move(t), type_atom());
    return t;
  }

  TypePtr type_atom() {
    if (cur_.accept("(")) {
      TypePtr t = type();
      cur_.expect(")");
      return t;
    }
    if (cur_.peek().kind == Token::Kind::Ident) {
      Token tok = cur_.next();
      if (tok.text == "Unit") return ty_unit();
      if (tok.text == "Empty") return ty_empty();
      if (!sig_.has_base(tok.text))
        throw ParseError(tok.line, tok.col, "unknown type '" + tok.text + "'");
      return ty_base(tok.text);
    }
    cur_.fail("expected a type");
  }

  // ---- terms

  TermPtr term() {
    if (cur_.at_ident("eps")) {
      Token tok = cur_.next();
      std::string var = cur_.expect_ident("a bound variable");
      if (find_scope(var))
        throw ParseError(tok.line, tok.col, "bound variable '" + var + "' shadows an enclosing one");
      cur_.expect(":");
      TypePtr ty = type();
      cur_.expect(".");
      scope_.emplace_back(var, ty);
      FormulaPtr body = formula();
      scope_.pop_back();
      return t_eps(var, ty, body);
    }
    if (cur_.peek().kind != Token::Kind::Ident) cur_.fail("expected a term");
    Token tok = cur_.next();
    if (const TypePtr* ty = find_scope(tok.text)) {
      return t_var(tok.text, *ty);
    }
    if (sig_.has_fun(tok.text)) {
      const FunDecl& d = sig_.fun(tok.text);
      std::vector<TermPtr> args;
      if (cur_.accept("(")) {
        if (!cur_.accept(")")) {
          do args.push_back(term());
          while (cur_.accept(","));
          cur_.expect(")");
        }
      }
      if (args.size() != d.args.size())
        throw ParseError(tok.line, tok.col,
                         "function '" + tok.text + "' expects " + std::to_string(d.args.size()) +
                             " arguments, got " + std::to_string(args.size()));
      return t_app(tok.text, std::move(args), d.result);
    }
    throw ParseError(tok.line, tok.col, "unknown symbol '" + tok.text + "'");
  }

  // ---- formulas: -> lowest (right assoc), then \/, /\, ~, atoms.

  FormulaPtr formula() {
    FormulaPtr f = formula_or();
    if (cur_.accept("->")) return f_imp(std::move(f), formula());
    return f;
  }

  FormulaPtr formula_or() {
    FormulaPtr f = formula_and();
    while (cur_.accept("\\/")) f = f_or(std::move(f), formula_and());
    return f;
  }

  FormulaPtr formula_and() {
    FormulaPtr f = formula_neg();
    while (cur_.accept("/\\")) f = f_and(std::move(f), formula_neg());
    return f;
  }

  FormulaPtr formula_neg() {
    if (cur_.accept("~")) return f_not(formula_neg());
    if (cur_.at_ident("exists") || cur_.at_ident("forall")) {
      Token tok = cur_.next();
      bool ex = tok.text == "exists";
      std::string var = cur_.expect_ident("a bound variable");
      if (find_scope(var))
        throw ParseError(tok.line, tok.col, "bound variable '" + var + "' shadows an enclosing one");
      cur_.expect(":");
      TypePtr ty = type();
      cur_.expect(".");
      scope_.emplace_back(var, ty);
      FormulaPtr body = formula();
      scope_.pop_back();
      return ex ? f_exists(var, ty, body) : f_forall(var, ty, body);
    }
    return formula_atom();
  }

  FormulaPtr formula_atom() {
    if (cur_.at_ident("true")) {
      cur_.next();
      return f_top();
    }
    if (cur_.at_ident("false")) {
      cur_.next();
      return f_bot();
    }
    if (cur_.accept("(")) {
      FormulaPtr f = formula();
      cur_.expect(")");
      return f;
    }
    // Relation atom, or an equation headed by a term.
    if (cur_.peek().kind == Token::Kind::Ident && sig_.has_rel(cur_.peek().text) &&
        !find_scope(cur_.peek().text)) {
      Token tok = cur_.next();
      const RelDecl& d = sig_.rel(tok.text);
      std::vector<TermPtr> args;
      if (cur_.accept("(")) {
        if (!cur_.accept(")")) {
          do args.push_back(term());
          while (cur_.accept(","));
          cur_.expect(")");
        }
      }
      if (args.size() != d.args.size())
        throw ParseError(tok.line, tok.col,
                         "relation '" + tok.text + "' expects " + std::to_string(d.args.size()) +
                             " arguments, got " + std::to_string(args.size()));
      return f_rel(tok.text, std::move(args));
    }
    TermPtr lhs = term();
    cur_.expect("=");
    TermPtr rhs = term();
    return f_eq(std::move(lhs), std::move(rhs));
  }

  // ---- sequents

  Context context() {
    std::vector<std::pair<std::string, TypePtr>> entries;
    bool bracketed = cur_.accept("[");
    if (bracketed && cur_.accept("]")) return Context{};
    if (!bracketed && cur_.at("|")) return Context{};
    do {
      std::string n = cur_.expect_ident("a context variable");
      cur_.expect(":");
      entries.emplace_back(n, type());
    } while (cur_.accept(","));
    if (bracketed) cur_.expect("]");
    return Context{std::move(entries)};
  }

  Sequent sequent() {
    Context ctx = context();
    cur_.expect("|");
    std::vector<FormulaPtr> hyps;
    scope_.clear();
    push_scope(ctx);
    if (!cur_.at("|-")) {
      do hyps.push_back(formula());
      while (cur_.accept(","));
    }
    cur_.expect("|-");
    FormulaPtr concl = formula();
    scope_.clear();
    return Sequent{std::move(ctx), std::move(hyps), std::move(concl)};
  }

 private:
  const TypePtr* find_scope(const std::string& name) const {
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it)
      if (it->first == name) return &it->second;
    return nullptr;
  }

  Cursor& cur_;
  const Signature& sig_;
  std::vector<std::pair<std::string, TypePtr>> scope_;
};

void check_fresh(const Theory& th, const std::string& name, const Token& tok) {
  auto used = [&](const std::string& n) {
    if (th.sig.has_base(n) || th.sig.has_fun(n) || th.sig.has_rel(n)) return true;
    for (const auto& [m, _] : th.terms)
      if (m == n) return true;
    for (const auto& [m, _] : th.formulas)
      if (m == n) return true;
    for (const auto& [m, _] : th.axioms)
      if (m == n) return true;
    return false;
  };
  if (used(name)) throw ParseError(tok.line, tok.col, "name '" + name + "' already declared");
}

}  // namespace

Theory parse_theory(const std::string& source) {
  Cursor cur(lex::tokenize(source));
  Theory th;
  while (!cur.at_end()) {
    Token head = cur.peek();
    std::string kw = cur.expect_ident("a declaration");
    if (kw == "type") {
      Token tok = cur.peek();
      std::string name = cur.expect_ident("a type name");
      check_fresh(th, name, tok);
      th.sig.declare_base(name);
      cur.expect(";");
    } else if (kw == "fun") {
      Token tok = cur.peek();
      std::string name = cur.expect_ident("a function name");
      check_fresh(th, name, tok);
      cur.expect(":");
      Parser p(cur, th.sig);
      // Argument types are atoms separated by '*'; compound argument types
      // take parentheses. A single atom with no arrow declares a constant.
      std::vector<TypePtr> atoms;
      atoms.push_back(p.type_atom());
      while (cur.accept("*")) atoms.push_back(p.type_atom());
      FunDecl decl;
      if (cur.accept("->")) {
        decl.args = std::move(atoms);
        decl.result = p.type();
      } else {
        if (atoms.size() != 1)
          throw ParseError(tok.line, tok.col, "missing result type for '" + name + "'");
        decl.result = atoms[0];
      }
      th.sig.declare_fun(name, std::move(decl));
      cur.expect(";");
    } else if (kw == "rel") {
      Token tok = cur.peek();
      std::string name = cur.expect_ident("a relation name");
      check_fresh(th, name, tok);
      cur.expect("(");
      Parser p(cur, th.sig);
      RelDecl decl;
      if (!cur.accept(")")) {
        do decl.args.push_back(p.type());
        while (cur.accept(","));
        cur.expect(")");
      }
      th.sig.declare_rel(name, std::move(decl));
      cur.expect(";");
    } else if (kw == "axiom") {
      Token tok = cur.peek();
      std::string name = cur.expect_ident("an axiom name");
      check_fresh(th, name, tok);
      cur.expect(":");
      Parser p(cur, th.sig);
      Sequent seq = p.sequent();
      try {
        wellform_sequent(seq, th.sig);
      } catch (const TypeError& e) {
        throw ParseError(tok.line, tok.col, std::string("axiom '") + name + "': " + e.what());
      }
      th.axioms.emplace_back(name, std::move(seq));
      cur.expect(";");
    } else if (kw == "def") {
      Token tok = cur.peek();
      std::string name = cur.expect_ident("a definition name");
      check_fresh(th, name, tok);
      cur.expect(":=");
      // A definition body is a closed term when it parses as one up to the
      // terminating ';', otherwise a closed formula.
      std::size_t save = cur.save();
      bool is_term = false;
      TermPtr t;
      try {
        Parser p(cur, th.sig);
        t = p.term();
        if (cur.at(";")) is_term = true;
      } catch (const ParseError&) {
      }
      if (is_term) {
        try {
          typecheck_term(Context{}, t, th.sig);
        } catch (const TypeError& e) {
          throw ParseError(tok.line, tok.col, std::string("def '") + name + "': " + e.what());
        }
        th.terms.emplace_back(name, std::move(t));
      } else {
        cur.restore(save);
        Parser p(cur, th.sig);
        FormulaPtr f = p.formula();
        try {
          wellform_formula(Context{}, f, th.sig);
        } catch (const TypeError& e) {
          throw ParseError(tok.line, tok.col, std::string("def '") + name + "': " + e.what());
        }
        th.formulas.emplace_back(name, std::move(f));
      }
      cur.expect(";");
    } else {
      throw ParseError(head.line, head.col, "unknown declaration '" + kw + "'");
    }
  }
  return th;
}

TypePtr parse_type(const std::string& source, const Signature& sig) {
  Cursor cur(lex::tokenize(source));
  Parser p(cur, sig);
  TypePtr t = p.type();
  if (!cur.at_end()) cur.fail("trailing input after type");
  return t;
}

Context parse_context(const std::string& source, const Signature& sig) {
  Cursor cur(lex::tokenize(source));
  if (cur.at_end()) return Context{};
  Parser p(cur, sig);
  Context c = p.context();
  if (!cur.at_end()) cur.fail("trailing input after context");
  for (const auto& [_, t] : c.entries()) sig.validate_type(t);
  return c;
}

TermPtr parse_term(const std::string& source, const Signature& sig, const Context& ctx) {
  Cursor cur(lex::tokenize(source));
  Parser p(cur, sig);
  p.push_scope(ctx);
  TermPtr t = p.term();
  if (!cur.at_end()) cur.fail("trailing input after term");
  typecheck_term(ctx, t, sig);
  return t;
}

FormulaPtr parse_formula(const std::string& source, const Signature& sig, const Context& ctx) {
  Cursor cur(lex::tokenize(source));
  Parser p(cur, sig);
  p.push_scope(ctx);
  FormulaPtr f = p.formula();
  if (!cur.at_end()) cur.fail("trailing input after formula");
  wellform_formula(ctx, f, sig);
  return f;
}

Sequent parse_sequent(const std::string& source, const Signature& sig) {
  Cursor cur(lex::tokenize(source));
  Parser p(cur, sig);
  Sequent s = p.sequent();
  if (!cur.at_end()) cur.fail("trailing input after sequent");
  wellform_sequent(s, sig);
  return s;
}

}  // namespace epscalc::parser
