#include "epscalc/syntax.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace epscalc::syntax {

// ----------------------------------------------------------------- types

TypePtr ty_base(std::string name) {
  return std::make_shared<TypeExpr>(TypeExpr{TypeExpr::Kind::Base, std::move(name), nullptr, nullptr});
}
TypePtr ty_prod(TypePtr a, TypePtr b) {
  return std::make_shared<TypeExpr>(TypeExpr{TypeExpr::Kind::Prod, "", std::move(a), std::move(b)});
}
TypePtr ty_fun(TypePtr a, TypePtr b) {
  return std::make_shared<TypeExpr>(TypeExpr{TypeExpr::Kind::Fun, "", std::move(a), std::move(b)});
}
TypePtr ty_sum(TypePtr a, TypePtr b) {
  return std::make_shared<TypeExpr>(TypeExpr{TypeExpr::Kind::Sum, "", std::move(a), std::move(b)});
}
TypePtr ty_unit() {
  static const TypePtr t = std::make_shared<TypeExpr>(TypeExpr{TypeExpr::Kind::Unit, "", nullptr, nullptr});
  return t;
}
TypePtr ty_empty() {
  static const TypePtr t = std::make_shared<TypeExpr>(TypeExpr{TypeExpr::Kind::Empty, "", nullptr, nullptr});
  return t;
}

bool type_equal(const TypePtr& a, const TypePtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case TypeExpr::Kind::Base: return a->name == b->name;
    case TypeExpr::Kind::Unit:
    case TypeExpr::Kind::Empty: return true;
    default: return type_equal(a->left, b->left) && type_equal(a->right, b->right);
  }
}

bool mentions_empty(const TypePtr& t) {
  if (!t) return false;
  switch (t->kind) {
    case TypeExpr::Kind::Empty: return true;
    case TypeExpr::Kind::Base:
    case TypeExpr::Kind::Unit: return false;
    default: return mentions_empty(t->left) || mentions_empty(t->right);
  }
}

namespace {

// Precedence: Fun lowest (right assoc), then Sum, then Prod.
std::string show_type(const TypePtr& t, int level) {
  switch (t->kind) {
    case TypeExpr::Kind::Base: return t->name;
    case TypeExpr::Kind::Unit: return "Unit";
    case TypeExpr::Kind::Empty: return "Empty";
    case TypeExpr::Kind::Fun: {
      std::string s = show_type(t->left, 1) + " -> " + show_type(t->right, 0);
      return level > 0 ? "(" + s + ")" : s;
    }
    case TypeExpr::Kind::Sum: {
      std::string s = show_type(t->left, 1) + " + " + show_type(t->right, 2);
      return level > 1 ? "(" + s + ")" : s;
    }
    case TypeExpr::Kind::Prod: {
      std::string s = show_type(t->left, 2) + " * " + show_type(t->right, 3);
      return level > 2 ? "(" + s + ")" : s;
    }
  }
  return "?";
}

}  // namespace

std::string show(const TypePtr& t) { return show_type(t, 0); }

// ------------------------------------------------------- terms & formulas

TermPtr t_var(std::string name, TypePtr type) {
  return std::make_shared<Term>(Term{Term::Kind::Var, std::move(name), std::move(type), {}, nullptr});
}
TermPtr t_app(std::string fn, std::vector<TermPtr> args, TypePtr result) {
  return std::make_shared<Term>(Term{Term::Kind::App, std::move(fn), std::move(result), std::move(args), nullptr});
}
TermPtr t_eps(std::string var, TypePtr type, FormulaPtr body) {
  return std::make_shared<Term>(Term{Term::Kind::Epsilon, std::move(var), std::move(type), {}, std::move(body)});
}

FormulaPtr f_rel(std::string rel, std::vector<TermPtr> args) {
  return std::make_shared<Formula>(
      Formula{Formula::Kind::Rel, std::move(rel), std::move(args), nullptr, nullptr, nullptr, nullptr, nullptr});
}
FormulaPtr f_eq(TermPtr a, TermPtr b) {
  return std::make_shared<Formula>(
      Formula{Formula::Kind::Eq, "", {}, std::move(a), std::move(b), nullptr, nullptr, nullptr});
}
FormulaPtr f_top() {
  static const FormulaPtr f =
      std::make_shared<Formula>(Formula{Formula::Kind::Top, "", {}, nullptr, nullptr, nullptr, nullptr, nullptr});
  return f;
}
FormulaPtr f_bot() {
  static const FormulaPtr f =
      std::make_shared<Formula>(Formula{Formula::Kind::Bot, "", {}, nullptr, nullptr, nullptr, nullptr, nullptr});
  return f;
}
FormulaPtr f_and(FormulaPtr a, FormulaPtr b) {
  return std::make_shared<Formula>(
      Formula{Formula::Kind::And, "", {}, nullptr, nullptr, std::move(a), std::move(b), nullptr});
}
FormulaPtr f_or(FormulaPtr a, FormulaPtr b) {
  return std::make_shared<Formula>(
      Formula{Formula::Kind::Or, "", {}, nullptr, nullptr, std::move(a), std::move(b), nullptr});
}
FormulaPtr f_imp(FormulaPtr a, FormulaPtr b) {
  return std::make_shared<Formula>(
      Formula{Formula::Kind::Imp, "", {}, nullptr, nullptr, std::move(a), std::move(b), nullptr});
}
FormulaPtr f_not(FormulaPtr a) {
  return std::make_shared<Formula>(
      Formula{Formula::Kind::Not, "", {}, nullptr, nullptr, std::move(a), nullptr, nullptr});
}
FormulaPtr f_exists(std::string var, TypePtr type, FormulaPtr body) {
  return std::make_shared<Formula>(
      Formula{Formula::Kind::Exists, std::move(var), {}, nullptr, nullptr, std::move(body), nullptr, std::move(type)});
}
FormulaPtr f_forall(std::string var, TypePtr type, FormulaPtr body) {
  return std::make_shared<Formula>(
      Formula{Formula::Kind::Forall, std::move(var), {}, nullptr, nullptr, std::move(body), nullptr, std::move(type)});
}

const TypePtr& term_type(const TermPtr& t) { return t->type; }

// ----------------------------------------------------------------- context

Context::Context(std::vector<std::pair<std::string, TypePtr>> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i)
    for (std::size_t j = i + 1; j < entries_.size(); ++j)
      if (entries_[i].first == entries_[j].first)
        throw TypeError("duplicate context variable '" + entries_[i].first + "'");
}

bool Context::contains(const std::string& name) const {
  for (const auto& [n, _] : entries_)
    if (n == name) return true;
  return false;
}

std::optional<TypePtr> Context::lookup(const std::string& name) const {
  for (const auto& [n, t] : entries_)
    if (n == name) return t;
  return std::nullopt;
}

std::size_t Context::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i].first == name) return i;
  throw TypeError("variable '" + name + "' not in context");
}

Context Context::extended(const std::string& name, TypePtr type) const {
  if (contains(name)) throw TypeError("bound variable '" + name + "' duplicates a context variable");
  auto e = entries_;
  e.emplace_back(name, std::move(type));
  Context c;
  c.entries_ = std::move(e);
  return c;
}

Context Context::concat(const Context& other) const {
  Context c = *this;
  for (const auto& [n, t] : other.entries_) c = c.extended(n, t);
  return c;
}

Context Context::drop_last() const {
  if (entries_.empty()) throw TypeError("cannot drop from an empty context");
  Context c = *this;
  c.entries_.pop_back();
  return c;
}

bool context_equal(const Context& a, const Context& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.entries()[i].first != b.entries()[i].first) return false;
    if (!type_equal(a.entries()[i].second, b.entries()[i].second)) return false;
  }
  return true;
}

bool context_subsequence(const Context& a, const Context& b) {
  std::size_t j = 0;
  for (const auto& [n, t] : a.entries()) {
    while (j < b.size() && !(b.entries()[j].first == n && type_equal(b.entries()[j].second, t))) ++j;
    if (j == b.size()) return false;
    ++j;
  }
  return true;
}

// --------------------------------------------------------------- signature

void Signature::declare_base(const std::string& name) {
  if (has_base(name) || has_fun(name) || has_rel(name))
    throw TypeError("symbol '" + name + "' already declared");
  base_order_.push_back(name);
}

void Signature::declare_fun(const std::string& name, FunDecl decl) {
  if (has_base(name) || has_fun(name) || has_rel(name))
    throw TypeError("symbol '" + name + "' already declared");
  for (const auto& a : decl.args) validate_type(a);
  validate_type(decl.result);
  fun_order_.push_back(name);
  funs_.emplace(name, std::move(decl));
}

void Signature::declare_rel(const std::string& name, RelDecl decl) {
  if (has_base(name) || has_fun(name) || has_rel(name))
    throw TypeError("symbol '" + name + "' already declared");
  for (const auto& a : decl.args) validate_type(a);
  rel_order_.push_back(name);
  rels_.emplace(name, std::move(decl));
}

bool Signature::has_base(const std::string& name) const {
  return std::find(base_order_.begin(), base_order_.end(), name) != base_order_.end();
}
bool Signature::has_fun(const std::string& name) const { return funs_.count(name) > 0; }
bool Signature::has_rel(const std::string& name) const { return rels_.count(name) > 0; }

const FunDecl& Signature::fun(const std::string& name) const {
  auto it = funs_.find(name);
  if (it == funs_.end()) throw TypeError("unknown function symbol '" + name + "'");
  return it->second;
}
const RelDecl& Signature::rel(const std::string& name) const {
  auto it = rels_.find(name);
  if (it == rels_.end()) throw TypeError("unknown relation symbol '" + name + "'");
  return it->second;
}

void Signature::validate_type(const TypePtr& t) const {
  if (!t) throw TypeError("null type");
  switch (t->kind) {
    case TypeExpr::Kind::Base:
      if (!has_base(t->name)) throw TypeError("unknown type '" + t->name + "'");
      return;
    case TypeExpr::Kind::Unit:
    case TypeExpr::Kind::Empty:
      return;
    default:
      validate_type(t->left);
      validate_type(t->right);
  }
}

bool Signature::mentions_empty() const {
  for (const auto& n : fun_order_) {
    const auto& d = fun(n);
    for (const auto& a : d.args)
      if (syntax::mentions_empty(a)) return true;
    if (syntax::mentions_empty(d.result)) return true;
  }
  for (const auto& n : rel_order_)
    for (const auto& a : rel(n).args)
      if (syntax::mentions_empty(a)) return true;
  return false;
}

// -------------------------------------------------------------- typecheck

TypePtr typecheck_term(const Context& ctx, const TermPtr& t, const Signature& sig) {
  switch (t->kind) {
    case Term::Kind::Var: {
      auto d = ctx.lookup(t->name);
      if (!d) throw TypeError("unbound variable '" + t->name + "'");
      if (!type_equal(*d, t->type))
        throw TypeError("variable '" + t->name + "' annotated " + show(t->type) + " but bound at " + show(*d));
      return *d;
    }
    case Term::Kind::App: {
      const FunDecl& d = sig.fun(t->name);
      if (d.args.size() != t->args.size())
        throw TypeError("function '" + t->name + "' expects " + std::to_string(d.args.size()) +
                        " arguments, got " + std::to_string(t->args.size()));
      for (std::size_t i = 0; i < t->args.size(); ++i) {
        TypePtr at = typecheck_term(ctx, t->args[i], sig);
        if (!type_equal(at, d.args[i]))
          throw TypeError("argument " + std::to_string(i + 1) + " of '" + t->name + "' has type " +
                          show(at) + ", expected " + show(d.args[i]));
      }
      if (!type_equal(t->type, d.result))
        throw TypeError("application of '" + t->name + "' annotated " + show(t->type) +
                        ", declared result " + show(d.result));
      return d.result;
    }
    case Term::Kind::Epsilon: {
      sig.validate_type(t->type);
      Context ext = ctx.extended(t->name, t->type);
      wellform_formula(ext, t->body, sig);
      return t->type;
    }
  }
  throw TypeError("malformed term");
}

void wellform_formula(const Context& ctx, const FormulaPtr& phi, const Signature& sig) {
  switch (phi->kind) {
    case Formula::Kind::Rel: {
      const RelDecl& d = sig.rel(phi->name);
      if (d.args.size() != phi->args.size())
        throw TypeError("relation '" + phi->name + "' expects " + std::to_string(d.args.size()) +
                        " arguments, got " + std::to_string(phi->args.size()));
      for (std::size_t i = 0; i < phi->args.size(); ++i) {
        TypePtr at = typecheck_term(ctx, phi->args[i], sig);
        if (!type_equal(at, d.args[i]))
          throw TypeError("argument " + std::to_string(i + 1) + " of '" + phi->name + "' has type " +
                          show(at) + ", expected " + show(d.args[i]));
      }
      return;
    }
    case Formula::Kind::Eq: {
      TypePtr a = typecheck_term(ctx, phi->lhs_term, sig);
      TypePtr b = typecheck_term(ctx, phi->rhs_term, sig);
      if (!type_equal(a, b))
        throw TypeError("equation between distinct types " + show(a) + " and " + show(b));
      return;
    }
    case Formula::Kind::Top:
    case Formula::Kind::Bot:
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Imp:
      wellform_formula(ctx, phi->lhs, sig);
      wellform_formula(ctx, phi->rhs, sig);
      return;
    case Formula::Kind::Not:
      wellform_formula(ctx, phi->lhs, sig);
      return;
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
      sig.validate_type(phi->bound_type);
      Context ext = ctx.extended(phi->name, phi->bound_type);
      wellform_formula(ext, phi->lhs, sig);
      return;
    }
  }
  throw TypeError("malformed formula");
}

void wellform_sequent(const Sequent& seq, const Signature& sig) {
  for (const auto& [_, t] : seq.ctx.entries()) sig.validate_type(t);
  for (const auto& h : seq.hyps) wellform_formula(seq.ctx, h, sig);
  wellform_formula(seq.ctx, seq.concl, sig);
}

// ---------------------------------------------------------------- alpha_eq

namespace {

struct AlphaEnv {
  std::vector<std::string> left, right;

  // Innermost binder index, if bound.
  static std::optional<std::size_t> find(const std::vector<std::string>& stack, const std::string& n) {
    for (std::size_t i = stack.size(); i > 0; --i)
      if (stack[i - 1] == n) return i - 1;
    return std::nullopt;
  }
};

bool alpha_term(const TermPtr& a, const TermPtr& b, AlphaEnv& env);

bool alpha_formula(const FormulaPtr& a, const FormulaPtr& b, AlphaEnv& env) {
  if (a.get() == b.get() && env.left.empty() && env.right.empty()) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Formula::Kind::Rel: {
      if (a->name != b->name || a->args.size() != b->args.size()) return false;
      for (std::size_t i = 0; i < a->args.size(); ++i)
        if (!alpha_term(a->args[i], b->args[i], env)) return false;
      return true;
    }
    case Formula::Kind::Eq:
      return alpha_term(a->lhs_term, b->lhs_term, env) && alpha_term(a->rhs_term, b->rhs_term, env);
    case Formula::Kind::Top:
    case Formula::Kind::Bot:
      return true;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Imp:
      return alpha_formula(a->lhs, b->lhs, env) && alpha_formula(a->rhs, b->rhs, env);
    case Formula::Kind::Not:
      return alpha_formula(a->lhs, b->lhs, env);
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
      if (!type_equal(a->bound_type, b->bound_type)) return false;
      env.left.push_back(a->name);
      env.right.push_back(b->name);
      bool r = alpha_formula(a->lhs, b->lhs, env);
      env.left.pop_back();
      env.right.pop_back();
      return r;
    }
  }
  return false;
}

bool alpha_term(const TermPtr& a, const TermPtr& b, AlphaEnv& env) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Term::Kind::Var: {
      auto ia = AlphaEnv::find(env.left, a->name);
      auto ib = AlphaEnv::find(env.right, b->name);
      if (ia.has_value() != ib.has_value()) return false;
      if (ia) return *ia == *ib && type_equal(a->type, b->type);
      return a->name == b->name && type_equal(a->type, b->type);
    }
    case Term::Kind::App: {
      if (a->name != b->name || a->args.size() != b->args.size()) return false;
      for (std::size_t i = 0; i < a->args.size(); ++i)
        if (!alpha_term(a->args[i], b->args[i], env)) return false;
      return true;
    }
    case Term::Kind::Epsilon: {
      if (!type_equal(a->type, b->type)) return false;
      env.left.push_back(a->name);
      env.right.push_back(b->name);
      bool r = alpha_formula(a->body, b->body, env);
      env.left.pop_back();
      env.right.pop_back();
      return r;
    }
  }
  return false;
}

}  // namespace

bool alpha_eq(const TermPtr& a, const TermPtr& b) {
  AlphaEnv env;
  return alpha_term(a, b, env);
}

bool alpha_eq(const FormulaPtr& a, const FormulaPtr& b) {
  AlphaEnv env;
  return alpha_formula(a, b, env);
}

bool alpha_eq(const Sequent& a, const Sequent& b) {
  if (!context_equal(a.ctx, b.ctx)) return false;
  if (a.hyps.size() != b.hyps.size()) return false;
  for (std::size_t i = 0; i < a.hyps.size(); ++i)
    if (!alpha_eq(a.hyps[i], b.hyps[i])) return false;
  return alpha_eq(a.concl, b.concl);
}

// --------------------------------------------------------------- free_vars

namespace {

void free_term(const TermPtr& t, std::vector<std::string>& bound, std::map<std::string, TypePtr>& out);

void free_formula(const FormulaPtr& phi, std::vector<std::string>& bound, std::map<std::string, TypePtr>& out) {
  switch (phi->kind) {
    case Formula::Kind::Rel:
      for (const auto& a : phi->args) free_term(a, bound, out);
      return;
    case Formula::Kind::Eq:
      free_term(phi->lhs_term, bound, out);
      free_term(phi->rhs_term, bound, out);
      return;
    case Formula::Kind::Top:
    case Formula::Kind::Bot:
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Imp:
      free_formula(phi->lhs, bound, out);
      free_formula(phi->rhs, bound, out);
      return;
    case Formula::Kind::Not:
      free_formula(phi->lhs, bound, out);
      return;
    case Formula::Kind::Exists:
    case Formula::Kind::Forall:
      bound.push_back(phi->name);
      free_formula(phi->lhs, bound, out);
      bound.pop_back();
      return;
  }
}

void free_term(const TermPtr& t, std::vector<std::string>& bound, std::map<std::string, TypePtr>& out) {
  switch (t->kind) {
    case Term::Kind::Var:
      if (std::find(bound.begin(), bound.end(), t->name) == bound.end()) out.emplace(t->name, t->type);
      return;
    case Term::Kind::App:
      for (const auto& a : t->args) free_term(a, bound, out);
      return;
    case Term::Kind::Epsilon:
      bound.push_back(t->name);
      free_formula(t->body, bound, out);
      bound.pop_back();
      return;
  }
}

}  // namespace

std::map<std::string, TypePtr> free_vars(const TermPtr& t) {
  std::map<std::string, TypePtr> out;
  std::vector<std::string> bound;
  free_term(t, bound, out);
  return out;
}

std::map<std::string, TypePtr> free_vars(const FormulaPtr& phi) {
  std::map<std::string, TypePtr> out;
  std::vector<std::string> bound;
  free_formula(phi, bound, out);
  return out;
}

bool mentions_empty(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::Var: return mentions_empty(t->type);
    case Term::Kind::App: {
      if (mentions_empty(t->type)) return true;
      for (const auto& a : t->args)
        if (mentions_empty(a)) return true;
      return false;
    }
    case Term::Kind::Epsilon: return mentions_empty(t->type) || mentions_empty(t->body);
  }
  return false;
}

bool mentions_empty(const FormulaPtr& phi) {
  switch (phi->kind) {
    case Formula::Kind::Rel:
      for (const auto& a : phi->args)
        if (mentions_empty(a)) return true;
      return false;
    case Formula::Kind::Eq: return mentions_empty(phi->lhs_term) || mentions_empty(phi->rhs_term);
    case Formula::Kind::Top:
    case Formula::Kind::Bot: return false;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Imp: return mentions_empty(phi->lhs) || mentions_empty(phi->rhs);
    case Formula::Kind::Not: return mentions_empty(phi->lhs);
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: return mentions_empty(phi->bound_type) || mentions_empty(phi->lhs);
  }
  return false;
}

// -------------------------------------------------------------- substitute

namespace {

std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
  std::string n = base;
  while (avoid.count(n)) n += "'";
  return n;
}

void binder_names(const TermPtr& t, std::set<std::string>& out);

void binder_names(const FormulaPtr& phi, std::set<std::string>& out) {
  switch (phi->kind) {
    case Formula::Kind::Rel:
      for (const auto& a : phi->args) binder_names(a, out);
      return;
    case Formula::Kind::Eq:
      binder_names(phi->lhs_term, out);
      binder_names(phi->rhs_term, out);
      return;
    case Formula::Kind::Top:
    case Formula::Kind::Bot:
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Imp:
      binder_names(phi->lhs, out);
      binder_names(phi->rhs, out);
      return;
    case Formula::Kind::Not:
      binder_names(phi->lhs, out);
      return;
    case Formula::Kind::Exists:
    case Formula::Kind::Forall:
      out.insert(phi->name);
      binder_names(phi->lhs, out);
      return;
  }
}

void binder_names(const TermPtr& t, std::set<std::string>& out) {
  switch (t->kind) {
    case Term::Kind::Var:
      return;
    case Term::Kind::App:
      for (const auto& a : t->args) binder_names(a, out);
      return;
    case Term::Kind::Epsilon:
      out.insert(t->name);
      binder_names(t->body, out);
      return;
  }
}

void collect_avoid(const std::map<std::string, TermPtr>& subst, std::set<std::string>& avoid) {
  for (const auto& [v, t] : subst) {
    avoid.insert(v);
    for (const auto& [n, _] : free_vars(t)) avoid.insert(n);
    binder_names(t, avoid);
  }
}

// Splits off the binder: drops the bound variable from the substitution,
// restricts to variables actually free in the body and renames the binder
// when any replacement term would capture it.
struct BinderPlan {
  std::string var;
  FormulaPtr body;
  std::map<std::string, TermPtr> subst;
  bool trivial = false;
};

BinderPlan plan_binder(const std::string& var, const TypePtr& var_type, const FormulaPtr& body,
                       const std::map<std::string, TermPtr>& subst) {
  BinderPlan plan;
  plan.var = var;
  plan.body = body;
  auto fv = free_vars(body);
  for (const auto& [v, t] : subst) {
    if (v == var) continue;
    if (fv.count(v)) plan.subst.emplace(v, t);
  }
  if (plan.subst.empty()) {
    plan.trivial = true;
    return plan;
  }
  // Rename when a replacement term would capture the binder, or when it
  // contains a binder of the same name (nested same-name binders violate
  // the shadowing discipline).
  bool captured = false;
  std::set<std::string> avoid{var};
  collect_avoid(plan.subst, avoid);
  for (const auto& [v, t] : plan.subst) {
    if (free_vars(t).count(var)) captured = true;
    std::set<std::string> bn;
    binder_names(t, bn);
    if (bn.count(var)) captured = true;
  }
  if (captured) {
    for (const auto& [n, _] : fv) avoid.insert(n);
    plan.var = fresh_name(var, avoid);
    plan.body = substitute(body, {{var, t_var(plan.var, var_type)}});
  }
  return plan;
}

}  // namespace

TermPtr substitute(const TermPtr& t, const std::map<std::string, TermPtr>& subst) {
  if (subst.empty()) return t;
  switch (t->kind) {
    case Term::Kind::Var: {
      auto it = subst.find(t->name);
      if (it == subst.end()) return t;
      if (!type_equal(term_type(it->second), t->type))
        throw TypeError("substituting a term of type " + show(term_type(it->second)) +
                        " for variable '" + t->name + "' of type " + show(t->type));
      return it->second;
    }
    case Term::Kind::App: {
      std::vector<TermPtr> args;
      args.reserve(t->args.size());
      for (const auto& a : t->args) args.push_back(substitute(a, subst));
      return t_app(t->name, std::move(args), t->type);
    }
    case Term::Kind::Epsilon: {
      BinderPlan plan = plan_binder(t->name, t->type, t->body, subst);
      if (plan.trivial) return t;
      return t_eps(plan.var, t->type, substitute(plan.body, plan.subst));
    }
  }
  throw TypeError("malformed term");
}

FormulaPtr substitute(const FormulaPtr& phi, const std::map<std::string, TermPtr>& subst) {
  if (subst.empty()) return phi;
  switch (phi->kind) {
    case Formula::Kind::Rel: {
      std::vector<TermPtr> args;
      args.reserve(phi->args.size());
      for (const auto& a : phi->args) args.push_back(substitute(a, subst));
      return f_rel(phi->name, std::move(args));
    }
    case Formula::Kind::Eq:
      return f_eq(substitute(phi->lhs_term, subst), substitute(phi->rhs_term, subst));
    case Formula::Kind::Top:
    case Formula::Kind::Bot:
      return phi;
    case Formula::Kind::And:
      return f_and(substitute(phi->lhs, subst), substitute(phi->rhs, subst));
    case Formula::Kind::Or:
      return f_or(substitute(phi->lhs, subst), substitute(phi->rhs, subst));
    case Formula::Kind::Imp:
      return f_imp(substitute(phi->lhs, subst), substitute(phi->rhs, subst));
    case Formula::Kind::Not:
      return f_not(substitute(phi->lhs, subst));
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
      BinderPlan plan = plan_binder(phi->name, phi->bound_type, phi->lhs, subst);
      if (plan.trivial) return phi;
      FormulaPtr body = substitute(plan.body, plan.subst);
      return phi->kind == Formula::Kind::Exists ? f_exists(plan.var, phi->bound_type, std::move(body))
                                                : f_forall(plan.var, phi->bound_type, std::move(body));
    }
  }
  throw TypeError("malformed formula");
}

// -------------------------------------------------------------------- show

namespace {

std::string show_term(const TermPtr& t);

// Connective precedence: -> (0, right), \/ (1), /\ (2), ~ (3), atoms (4).
// Binder bodies extend maximally to the right, so a binder in an operand
// position is parenthesized.
std::string show_formula(const FormulaPtr& phi, int level) {
  switch (phi->kind) {
    case Formula::Kind::Rel: {
      if (phi->args.empty()) return phi->name;
      std::string s = phi->name + "(";
      for (std::size_t i = 0; i < phi->args.size(); ++i) {
        if (i) s += ", ";
        s += show_term(phi->args[i]);
      }
      return s + ")";
    }
    case Formula::Kind::Eq: {
      // A trailing epsilon term would swallow following connectives, so
      // equations take parentheses in any operand position.
      std::string s = show_term(phi->lhs_term) + " = " + show_term(phi->rhs_term);
      return level > 0 ? "(" + s + ")" : s;
    }
    case Formula::Kind::Top: return "true";
    case Formula::Kind::Bot: return "false";
    case Formula::Kind::Imp: {
      std::string s = show_formula(phi->lhs, 1) + " -> " + show_formula(phi->rhs, 0);
      return level > 0 ? "(" + s + ")" : s;
    }
    case Formula::Kind::Or: {
      std::string s = show_formula(phi->lhs, 1) + " \\/ " + show_formula(phi->rhs, 2);
      return level > 1 ? "(" + s + ")" : s;
    }
    case Formula::Kind::And: {
      std::string s = show_formula(phi->lhs, 2) + " /\\ " + show_formula(phi->rhs, 3);
      return level > 2 ? "(" + s + ")" : s;
    }
    case Formula::Kind::Not: {
      std::string s = "~" + show_formula(phi->lhs, 3);
      return level > 3 ? "(" + s + ")" : s;
    }
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
      std::string q = phi->kind == Formula::Kind::Exists ? "exists" : "forall";
      std::string s = q + " " + phi->name + ":" + show(phi->bound_type) + ". " + show_formula(phi->lhs, 0);
      return level > 0 ? "(" + s + ")" : s;
    }
  }
  return "?";
}

std::string show_term(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::Var: return t->name;
    case Term::Kind::App: {
      if (t->args.empty()) return t->name;
      std::string s = t->name + "(";
      for (std::size_t i = 0; i < t->args.size(); ++i) {
        if (i) s += ", ";
        s += show_term(t->args[i]);
      }
      return s + ")";
    }
    case Term::Kind::Epsilon:
      return "eps " + t->name + ":" + show(t->type) + ". " + show_formula(t->body, 0);
  }
  return "?";
}

}  // namespace

std::string show(const TermPtr& t) { return show_term(t); }
std::string show(const FormulaPtr& phi) { return show_formula(phi, 0); }

std::string show(const Context& ctx) {
  if (ctx.empty()) return "[]";
  std::string s;
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    if (i) s += ", ";
    s += ctx.entries()[i].first + ":" + show(ctx.entries()[i].second);
  }
  return s;
}

std::string show(const Sequent& seq) {
  std::string s = show(seq.ctx) + " | ";
  for (std::size_t i = 0; i < seq.hyps.size(); ++i) {
    if (i) s += ", ";
    s += show(seq.hyps[i]);
  }
  if (!seq.hyps.empty()) s += " ";
  return s + "|- " + show(seq.concl);
}

}  // namespace epscalc::syntax
