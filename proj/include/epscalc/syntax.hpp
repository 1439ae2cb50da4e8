#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "epscalc/error.hpp"

namespace epscalc::syntax {

// ----------------------------------------------------------------- types

struct TypeExpr;
using TypePtr = std::shared_ptr<const TypeExpr>;

// Object-language types. Structural equality is the only notion of type
// equality; Unit and Empty are nullary, all other constructors binary.
struct TypeExpr {
  enum class Kind { Base, Prod, Fun, Sum, Unit, Empty };
  Kind kind;
  std::string name;    // Base
  TypePtr left, right; // Prod / Fun / Sum
};

TypePtr ty_base(std::string name);
TypePtr ty_prod(TypePtr a, TypePtr b);
TypePtr ty_fun(TypePtr a, TypePtr b);
TypePtr ty_sum(TypePtr a, TypePtr b);
TypePtr ty_unit();
TypePtr ty_empty();

bool type_equal(const TypePtr& a, const TypePtr& b);
bool mentions_empty(const TypePtr& t);
std::string show(const TypePtr& t);

// ------------------------------------------------------- terms & formulas

struct Term;
struct Formula;
using TermPtr = std::shared_ptr<const Term>;
using FormulaPtr = std::shared_ptr<const Formula>;

// Every term carries its type: Var its declared type, App the declared
// result type of the symbol, Epsilon the bound type. In eps x:A. psi the
// variable x is bound in psi and never free in the epsilon term itself.
struct Term {
  enum class Kind { Var, App, Epsilon };
  Kind kind;
  std::string name;          // Var: variable; App: function symbol; Epsilon: bound variable
  TypePtr type;              // Var / Epsilon: as above; App: result type
  std::vector<TermPtr> args; // App
  FormulaPtr body;           // Epsilon
};

struct Formula {
  enum class Kind { Rel, Eq, Top, Bot, And, Or, Imp, Not, Exists, Forall };
  Kind kind;
  std::string name;           // Rel: symbol; Exists / Forall: bound variable
  std::vector<TermPtr> args;  // Rel
  TermPtr lhs_term, rhs_term; // Eq
  FormulaPtr lhs, rhs;        // And / Or / Imp; Not and the binders keep the body in lhs
  TypePtr bound_type;         // Exists / Forall
};

TermPtr t_var(std::string name, TypePtr type);
TermPtr t_app(std::string fn, std::vector<TermPtr> args, TypePtr result);
TermPtr t_eps(std::string var, TypePtr type, FormulaPtr body);

FormulaPtr f_rel(std::string rel, std::vector<TermPtr> args);
FormulaPtr f_eq(TermPtr a, TermPtr b);
FormulaPtr f_top();
FormulaPtr f_bot();
FormulaPtr f_and(FormulaPtr a, FormulaPtr b);
FormulaPtr f_or(FormulaPtr a, FormulaPtr b);
FormulaPtr f_imp(FormulaPtr a, FormulaPtr b);
FormulaPtr f_not(FormulaPtr a);
FormulaPtr f_exists(std::string var, TypePtr type, FormulaPtr body);
FormulaPtr f_forall(std::string var, TypePtr type, FormulaPtr body);

// The type a term carries syntactically (validated by typecheck_term).
const TypePtr& term_type(const TermPtr& t);

// ----------------------------------------------------------------- context

// Ordered list of typed variables with pairwise distinct names. Order is
// significant: the product interpretation of a context follows it.
class Context {
 public:
  Context() = default;
  explicit Context(std::vector<std::pair<std::string, TypePtr>> entries);

  const std::vector<std::pair<std::string, TypePtr>>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  bool contains(const std::string& name) const;
  std::optional<TypePtr> lookup(const std::string& name) const;
  std::size_t index_of(const std::string& name) const;  // throws if absent

  // Throws TypeError when the name is already bound.
  Context extended(const std::string& name, TypePtr type) const;
  // Concatenation; defined only for disjoint name sets.
  Context concat(const Context& other) const;
  // Drops the last entry; throws on empty.
  Context drop_last() const;

 private:
  std::vector<std::pair<std::string, TypePtr>> entries_;
};

bool context_equal(const Context& a, const Context& b);
// Order-preserving embedding of a's entries into b's.
bool context_subsequence(const Context& a, const Context& b);

struct Sequent {
  Context ctx;
  std::vector<FormulaPtr> hyps;
  FormulaPtr concl;
};

// --------------------------------------------------------------- signature

struct FunDecl {
  std::vector<TypePtr> args;
  TypePtr result;
};

struct RelDecl {
  std::vector<TypePtr> args;
};

class Signature {
 public:
  void declare_base(const std::string& name);
  void declare_fun(const std::string& name, FunDecl decl);
  void declare_rel(const std::string& name, RelDecl decl);

  bool has_base(const std::string& name) const;
  bool has_fun(const std::string& name) const;
  bool has_rel(const std::string& name) const;
  const FunDecl& fun(const std::string& name) const;
  const RelDecl& rel(const std::string& name) const;

  // Declaration order; drives deterministic model enumeration.
  const std::vector<std::string>& base_names() const { return base_order_; }
  const std::vector<std::string>& fun_names() const { return fun_order_; }
  const std::vector<std::string>& rel_names() const { return rel_order_; }

  // Checks the type mentions only declared base types.
  void validate_type(const TypePtr& t) const;
  bool mentions_empty() const;

 private:
  std::vector<std::string> base_order_, fun_order_, rel_order_;
  std::map<std::string, FunDecl> funs_;
  std::map<std::string, RelDecl> rels_;
};

// -------------------------------------------------------------- operations

// Returns the unique type A with ctx | t : A, or throws TypeError.
TypePtr typecheck_term(const Context& ctx, const TermPtr& t, const Signature& sig);

// Succeeds iff ctx | phi is well formed; throws TypeError otherwise.
// Binders must not shadow context variables or each other.
void wellform_formula(const Context& ctx, const FormulaPtr& phi, const Signature& sig);

void wellform_sequent(const Sequent& seq, const Signature& sig);

// Capture-avoiding simultaneous substitution. Bound variables are renamed
// (with prime suffixes) whenever a replacement term could capture them.
// Throws TypeError when a replacement term's type differs from the
// variable's.
TermPtr substitute(const TermPtr& t, const std::map<std::string, TermPtr>& subst);
FormulaPtr substitute(const FormulaPtr& phi, const std::map<std::string, TermPtr>& subst);

// Equality after de Bruijn normalization of all binders, including eps.
bool alpha_eq(const TermPtr& a, const TermPtr& b);
bool alpha_eq(const FormulaPtr& a, const FormulaPtr& b);
bool alpha_eq(const Sequent& a, const Sequent& b);

std::map<std::string, TypePtr> free_vars(const TermPtr& t);
std::map<std::string, TypePtr> free_vars(const FormulaPtr& phi);

bool mentions_empty(const TermPtr& t);
bool mentions_empty(const FormulaPtr& phi);

std::string show(const TermPtr& t);
std::string show(const FormulaPtr& phi);
std::string show(const Context& ctx);
std::string show(const Sequent& seq);

}  // namespace epscalc::syntax
