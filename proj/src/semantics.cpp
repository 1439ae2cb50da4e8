#include "epscalc/semantics.hpp"

#include <algorithm>

#include "epscalc/model.hpp"

namespace epscalc::semantics {

using namespace epscalc::syntax;
using finset::FinMor;
using finset::FinObj;
using finset::Subset;

std::size_t Interpretation::carrier_of(const std::string& base) const {
  for (const auto& [n, s] : carriers)
    if (n == base) return s;
  throw Error("interpretation missing a carrier for type '" + base + "'");
}

bool Interpretation::degenerate() const {
  return std::all_of(carriers.begin(), carriers.end(), [](const auto& c) { return c.second == 1; });
}

std::size_t interpret_type_size(const TypePtr& t, const Interpretation& interp) {
  switch (t->kind) {
    case TypeExpr::Kind::Base:
      return interp.carrier_of(t->name);
    case TypeExpr::Kind::Unit:
      return 1;
    case TypeExpr::Kind::Empty:
      if (interp.degenerate()) return 1;
      throw EmptyTypeViolation(
          "the empty type admits no interpretation over a carrier of size >= 2");
    case TypeExpr::Kind::Prod:
      return finset::checked_mul(interpret_type_size(t->left, interp),
                                 interpret_type_size(t->right, interp));
    case TypeExpr::Kind::Sum:
      return interpret_type_size(t->left, interp) + interpret_type_size(t->right, interp);
    case TypeExpr::Kind::Fun:
      return finset::checked_pow(interpret_type_size(t->right, interp),
                                 interpret_type_size(t->left, interp));
  }
  throw Error("malformed type");
}

FinObj interpret_type(const TypePtr& t, const Interpretation& interp) {
  return FinObj{interpret_type_size(t, interp)};
}

// ----------------------------------------------------------------- layout

ContextLayout ContextLayout::make(const Context& ctx, const Interpretation& interp) {
  ContextLayout l;
  l.ctx = ctx;
  for (const auto& [_, t] : ctx.entries()) l.sizes.push_back(interpret_type_size(t, interp));
  l.strides.assign(l.sizes.size(), 1);
  std::size_t total = 1;
  for (std::size_t i = l.sizes.size(); i > 0; --i) {
    l.strides[i - 1] = total;
    total = finset::checked_mul(total, l.sizes[i - 1]);
  }
  l.carrier = FinObj{total};
  return l;
}

ContextLayout ContextLayout::extended(const std::string& var, const TypePtr& type,
                                      const Interpretation& interp) const {
  return make(ctx.extended(var, type), interp);
}

FinMor ContextLayout::projection(std::size_t index) const {
  std::vector<std::size_t> t(carrier.size);
  for (std::size_t g = 0; g < carrier.size; ++g) t[g] = (g / strides[index]) % sizes[index];
  return FinMor{carrier, FinObj{sizes[index]}, std::move(t)};
}

// ------------------------------------------------------------ interpreter

namespace {

// Tuple <f_0, ..., f_{n-1}> into the mixed-radix product of the given sizes.
FinMor tuple_into(const std::vector<FinMor>& legs, const std::vector<std::size_t>& sizes,
                  FinObj dom) {
  std::size_t total = 1;
  for (std::size_t s : sizes) total = finset::checked_mul(total, s);
  std::vector<std::size_t> t(dom.size, 0);
  for (std::size_t g = 0; g < dom.size; ++g) {
    std::size_t v = 0;
    for (std::size_t i = 0; i < legs.size(); ++i) v = v * sizes[i] + legs[i].table[g];
    t[g] = v;
  }
  return FinMor{dom, FinObj{total}, std::move(t)};
}

}  // namespace

FinMor interpret_term(const ContextLayout& layout, const TermPtr& t, const Interpretation& interp) {
  switch (t->kind) {
    case Term::Kind::Var:
      return layout.projection(layout.ctx.index_of(t->name));
    case Term::Kind::App: {
      auto it = interp.funs.find(t->name);
      if (it == interp.funs.end())
        throw Error("interpretation missing a table for function '" + t->name + "'");
      const FunDecl& decl = interp.sig.fun(t->name);
      std::vector<FinMor> legs;
      std::vector<std::size_t> sizes;
      for (std::size_t i = 0; i < t->args.size(); ++i) {
        legs.push_back(interpret_term(layout, t->args[i], interp));
        sizes.push_back(interpret_type_size(decl.args[i], interp));
      }
      FinMor tup = tuple_into(legs, sizes, layout.carrier);
      if (it->second.dom != tup.cod || it->second.cod.size != interpret_type_size(decl.result, interp))
        throw Error("table for '" + t->name + "' has the wrong shape");
      return finset::compose(it->second, tup);
    }
    case Term::Kind::Epsilon: {
      ContextLayout ext = layout.extended(t->name, t->type, interp);
      Subset psi = interpret_formula(ext, t->body, interp);
      doctrine::Projection pi =
          doctrine::first_projection(layout.carrier, FinObj{ext.sizes.back()});
      return doctrine::epsilon_categorical(pi, psi);
    }
  }
  throw Error("malformed term");
}

Subset interpret_formula(const ContextLayout& layout, const FormulaPtr& phi,
                         const Interpretation& interp) {
  doctrine::Fiber fib{layout.carrier};
  switch (phi->kind) {
    case Formula::Kind::Rel: {
      auto it = interp.rels.find(phi->name);
      if (it == interp.rels.end())
        throw Error("interpretation missing a table for relation '" + phi->name + "'");
      const RelDecl& decl = interp.sig.rel(phi->name);
      std::vector<FinMor> legs;
      std::vector<std::size_t> sizes;
      for (std::size_t i = 0; i < phi->args.size(); ++i) {
        legs.push_back(interpret_term(layout, phi->args[i], interp));
        sizes.push_back(interpret_type_size(decl.args[i], interp));
      }
      FinMor tup = tuple_into(legs, sizes, layout.carrier);
      if (it->second.carrier != tup.cod)
        throw Error("table for '" + phi->name + "' has the wrong shape");
      return doctrine::reindex(tup, it->second);
    }
    case Formula::Kind::Eq: {
      FinMor a = interpret_term(layout, phi->lhs_term, interp);
      FinMor b = interpret_term(layout, phi->rhs_term, interp);
      std::vector<std::size_t> m;
      for (std::size_t g = 0; g < layout.carrier.size; ++g)
        if (a.table[g] == b.table[g]) m.push_back(g);
      return Subset{layout.carrier, std::move(m)};
    }
    case Formula::Kind::Top:
      return fib.top();
    case Formula::Kind::Bot:
      return fib.bot();
    case Formula::Kind::And:
      return fib.meet(interpret_formula(layout, phi->lhs, interp),
                      interpret_formula(layout, phi->rhs, interp));
    case Formula::Kind::Or:
      return fib.join(interpret_formula(layout, phi->lhs, interp),
                      interpret_formula(layout, phi->rhs, interp));
    case Formula::Kind::Imp:
      return fib.imp(interpret_formula(layout, phi->lhs, interp),
                     interpret_formula(layout, phi->rhs, interp));
    case Formula::Kind::Not:
      return fib.neg(interpret_formula(layout, phi->lhs, interp));
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
      ContextLayout ext = layout.extended(phi->name, phi->bound_type, interp);
      Subset inner = interpret_formula(ext, phi->lhs, interp);
      doctrine::Projection pi =
          doctrine::first_projection(layout.carrier, FinObj{ext.sizes.back()});
      if (phi->kind == Formula::Kind::Exists) return doctrine::sigma(pi, inner);
      // forall as ¬Σ¬ over the boolean fiber
      doctrine::Fiber fext{ext.carrier};
      return fib.neg(doctrine::sigma(pi, fext.neg(inner)));
    }
  }
  throw Error("malformed formula");
}

bool holds(const Sequent& seq, const Interpretation& interp) {
  ContextLayout layout = ContextLayout::make(seq.ctx, interp);
  doctrine::Fiber fib{layout.carrier};
  Subset acc = fib.top();
  for (const auto& h : seq.hyps) acc = fib.meet(acc, interpret_formula(layout, h, interp));
  return fib.leq(acc, interpret_formula(layout, seq.concl, interp));
}

bool substitution_lemma_check(const Context& outer, const Context& inner, const FormulaPtr& phi,
                              const std::vector<TermPtr>& terms, const Interpretation& interp) {
  if (terms.size() != inner.size()) throw Error("one term per substituted variable required");
  ContextLayout lo = ContextLayout::make(outer, interp);
  ContextLayout li = ContextLayout::make(inner, interp);

  std::map<std::string, TermPtr> subst;
  std::vector<FinMor> legs;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    subst.emplace(inner.entries()[i].first, terms[i]);
    legs.push_back(interpret_term(lo, terms[i], interp));
  }
  Subset direct = interpret_formula(lo, substitute(phi, subst), interp);
  FinMor tup = tuple_into(legs, li.sizes, lo.carrier);
  Subset reindexed = doctrine::reindex(tup, interpret_formula(li, phi, interp));
  return direct == reindexed;
}

TrivialityReport empty_type_guard(const parser::Theory& theory, const Interpretation& interp) {
  if (!theory.mentions_empty()) return {true, ""};
  if (interp.degenerate()) return {true, "degenerate all-singleton model"};
  std::string big;
  for (const auto& [n, s] : interp.carriers)
    if (s >= 2) {
      big = n;
      break;
    }
  return {false,
          "theory mentions the empty type: eps over the full predicate on Unit*Empty gives a "
          "point of the initial object, so every carrier collapses to a singleton; carrier '" +
              big + "' has size " + std::to_string(interp.carrier_of(big))};
}

// ------------------------------------------------------------ enumeration

namespace {

constexpr std::uint64_t kSatLimit = ~std::uint64_t{0};

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSatLimit / a) return kSatLimit;
  return a * b;
}

std::uint64_t sat_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    r = sat_mul(r, base);
    if (r == kSatLimit) return r;
  }
  return r;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return a > kSatLimit - b ? kSatLimit : a + b;
}

bool next_table(std::vector<std::size_t>& t, std::size_t cod) {
  for (std::size_t i = t.size(); i > 0; --i) {
    if (++t[i - 1] < cod) return true;
    t[i - 1] = 0;
  }
  return false;
}

struct EnumEnv {
  const parser::Theory& theory;
  const EnumSpec& spec;
  const std::function<bool(const Interpretation&)>& visit;
  EnumStats stats;
  bool stop = false;
};

std::uint64_t models_for_sizing(const Interpretation& interp) {
  std::uint64_t n = 1;
  for (const auto& name : interp.sig.fun_names()) {
    const FunDecl& d = interp.sig.fun(name);
    std::uint64_t dom = 1;
    for (const auto& a : d.args) dom = sat_mul(dom, interpret_type_size(a, interp));
    n = sat_mul(n, sat_pow(interpret_type_size(d.result, interp), dom));
  }
  for (const auto& name : interp.sig.rel_names()) {
    const RelDecl& d = interp.sig.rel(name);
    std::uint64_t dom = 1;
    for (const auto& a : d.args) dom = sat_mul(dom, interpret_type_size(a, interp));
    n = sat_mul(n, sat_pow(2, dom));
  }
  return n;
}

void enum_rels(EnumEnv& env, Interpretation& interp, std::size_t idx);

void enum_funs(EnumEnv& env, Interpretation& interp, std::size_t idx) {
  if (env.stop) return;
  const auto& names = interp.sig.fun_names();
  if (idx == names.size()) {
    enum_rels(env, interp, 0);
    return;
  }
  const FunDecl& d = interp.sig.fun(names[idx]);
  std::size_t dom = 1;
  for (const auto& a : d.args) dom = finset::checked_mul(dom, interpret_type_size(a, interp));
  std::size_t cod = interpret_type_size(d.result, interp);
  if (cod == 0 && dom > 0) return;  // no tables at all
  std::vector<std::size_t> table(dom, 0);
  do {
    interp.funs[names[idx]] = FinMor{FinObj{dom}, FinObj{cod}, table};
    enum_funs(env, interp, idx + 1);
    if (env.stop) return;
  } while (next_table(table, cod));
}

void enum_rels(EnumEnv& env, Interpretation& interp, std::size_t idx) {
  if (env.stop) return;
  const auto& names = interp.sig.rel_names();
  if (idx == names.size()) {
    ++env.stats.visited;
    if (!env.visit(interp)) {
      env.stop = true;
    } else if (env.stats.visited >= env.spec.budget && env.stats.total > env.spec.budget) {
      env.stats.truncated = true;
      env.stop = true;
    }
    return;
  }
  const RelDecl& d = interp.sig.rel(names[idx]);
  std::size_t dom = 1;
  for (const auto& a : d.args) dom = finset::checked_mul(dom, interpret_type_size(a, interp));
  doctrine::Fiber fib{FinObj{dom}};
  std::uint64_t count = dom < 64 ? (std::uint64_t{1} << dom) : kSatLimit;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    interp.rels[names[idx]] = fib.element(mask);
    enum_rels(env, interp, idx + 1);
    if (env.stop) return;
  }
}

}  // namespace

EnumStats for_each_interpretation(const parser::Theory& theory, const EnumSpec& spec,
                                  const std::function<bool(const Interpretation&)>& visit) {
  EnumEnv env{theory, spec, visit, {}, false};
  const auto& bases = theory.sig.base_names();
  const std::size_t hi = theory.mentions_empty() ? 1 : spec.max_carrier;

  // Pre-compute the total for honest truncation reporting.
  std::vector<std::size_t> sizes(bases.size(), 1);
  Interpretation probe;
  probe.sig = theory.sig;
  auto load_sizes = [&](Interpretation& interp) {
    interp.carriers.clear();
    for (std::size_t i = 0; i < bases.size(); ++i) interp.carriers.emplace_back(bases[i], sizes[i]);
  };
  bool more = true;
  while (more) {
    load_sizes(probe);
    env.stats.total = sat_add(env.stats.total, models_for_sizing(probe));
    more = false;
    for (std::size_t i = sizes.size(); i > 0; --i) {
      if (++sizes[i - 1] <= hi) {
        more = true;
        break;
      }
      sizes[i - 1] = 1;
    }
  }

  Interpretation interp;
  interp.sig = theory.sig;
  sizes.assign(bases.size(), 1);
  more = true;
  while (more && !env.stop) {
    load_sizes(interp);
    enum_funs(env, interp, 0);
    more = false;
    for (std::size_t i = sizes.size(); i > 0; --i) {
      if (++sizes[i - 1] <= hi) {
        more = true;
        break;
      }
      sizes[i - 1] = 1;
    }
  }
  return env.stats;
}

std::uint64_t count_interpretations(const parser::Theory& theory, std::size_t max_carrier) {
  EnumSpec spec{max_carrier, 0};
  EnumStats st =
      for_each_interpretation(theory, spec, [](const Interpretation&) { return false; });
  return st.total;
}

AuditReport audit_soundness(const kernel::Derivation& d, const parser::Theory& theory,
                            const EnumSpec& spec) {
  AuditReport report;
  EnumStats st = for_each_interpretation(theory, spec, [&](const Interpretation& interp) {
    ++report.models_checked;
    if (!holds(d.conclusion, interp)) {
      if (report.violations.size() < 16)
        report.violations.push_back("sequent fails in model:\n" + show_model(interp));
    }
    return true;
  });
  report.truncated = st.truncated;
  return report;
}

CountermodelResult countermodel_search(const Sequent& seq, const parser::Theory& theory,
                                       const EnumSpec& spec) {
  CountermodelResult result;
  EnumStats st = for_each_interpretation(theory, spec, [&](const Interpretation& interp) {
    ++result.models_checked;
    if (!holds(seq, interp)) {
      result.model = interp;
      return false;
    }
    return true;
  });
  result.truncated = st.truncated && !result.model;
  return result;
}

}  // namespace epscalc::semantics
