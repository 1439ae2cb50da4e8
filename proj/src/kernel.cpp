#include "epscalc/kernel.hpp"

#include <algorithm>

namespace epscalc::kernel {

using namespace epscalc::syntax;

namespace {

struct RuleInfo {
  RuleTag tag;
  const char* name;
  std::size_t premises;
};

constexpr RuleInfo kRules[] = {
    {RuleTag::Axiom, "axiom", 0},       {RuleTag::Weaken, "weaken", 1},
    {RuleTag::Exchange, "exchange", 1}, {RuleTag::Cut, "cut", 2},
    {RuleTag::AndI, "and-i", 2},        {RuleTag::AndE1, "and-e1", 1},
    {RuleTag::AndE2, "and-e2", 1},      {RuleTag::OrI1, "or-i1", 1},
    {RuleTag::OrI2, "or-i2", 1},        {RuleTag::OrE, "or-e", 2},
    {RuleTag::ImpI, "imp-i", 1},        {RuleTag::ImpE, "imp-e", 2},
    {RuleTag::NotI, "not-i", 1},        {RuleTag::NotE, "not-e", 2},
    {RuleTag::TopI, "top-i", 0},        {RuleTag::BotE, "bot-e", 1},
    {RuleTag::Lem, "lem", 0},           {RuleTag::ExistsI, "exists-i", 1},
    {RuleTag::ExistsE, "exists-e", 2},  {RuleTag::ForallI, "forall-i", 1},
    {RuleTag::ForallE, "forall-e", 1},  {RuleTag::EqRefl, "eq-refl", 0},
    {RuleTag::EqSubst, "eq-subst", 2},  {RuleTag::EpsI, "eps-i", 1},
    {RuleTag::EpsEx, "eps-ex", 2},
};

const RuleInfo& info(RuleTag tag) {
  for (const auto& r : kRules)
    if (r.tag == tag) return r;
  throw Error("unknown rule tag");
}

}  // namespace

const char* rule_name(RuleTag tag) { return info(tag).name; }

std::optional<RuleTag> rule_from_name(std::string_view name) {
  for (const auto& r : kRules)
    if (name == r.name) return r.tag;
  return std::nullopt;
}

std::size_t premise_count(RuleTag tag) { return info(tag).premises; }

DerivPtr mk_node(Rule rule, std::vector<DerivPtr> premises, Sequent conclusion) {
  return std::make_shared<Derivation>(
      Derivation{std::move(rule), std::move(premises), std::move(conclusion)});
}

std::string CheckResult::first_error() const {
  for (const auto& n : nodes)
    if (!n.ok) return n.path + " (" + n.rule + "): " + n.message;
  return "";
}

namespace {

bool hyps_equal(const std::vector<FormulaPtr>& a, const std::vector<FormulaPtr>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!alpha_eq(a[i], b[i])) return false;
  return true;
}

bool hyps_subsequence(const std::vector<FormulaPtr>& a, const std::vector<FormulaPtr>& b) {
  std::size_t j = 0;
  for (const auto& f : a) {
    while (j < b.size() && !alpha_eq(b[j], f)) ++j;
    if (j == b.size()) return false;
    ++j;
  }
  return true;
}

bool hyps_permutation(const std::vector<FormulaPtr>& a, const std::vector<FormulaPtr>& b) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const auto& f : a) {
    bool matched = false;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!used[j] && alpha_eq(b[j], f)) {
        used[j] = true;
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

// b extends a by exactly one trailing formula; returns it.
const FormulaPtr* split_last_hyp(const std::vector<FormulaPtr>& a, const std::vector<FormulaPtr>& b) {
  if (b.size() != a.size() + 1) return nullptr;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!alpha_eq(a[i], b[i])) return nullptr;
  return &b.back();
}

// ctx extended by exactly one trailing variable.
bool ctx_extends_by(const Context& base, const Context& ext, std::string* var, TypePtr* type) {
  if (ext.size() != base.size() + 1) return false;
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (base.entries()[i].first != ext.entries()[i].first) return false;
    if (!type_equal(base.entries()[i].second, ext.entries()[i].second)) return false;
  }
  *var = ext.entries().back().first;
  *type = ext.entries().back().second;
  return true;
}

struct Check {
  const Derivation& node;
  const Signature& sig;
  std::string error;

  bool fail(const std::string& msg) {
    if (error.empty()) error = msg;
    return false;
  }

  const Sequent& seq() const { return node.conclusion; }
  const Sequent& prem(std::size_t i) const { return node.premises[i]->conclusion; }

  bool same_ctx(const Sequent& p) {
    if (!context_equal(p.ctx, seq().ctx)) return fail("premise context differs from conclusion context");
    return true;
  }

  bool same_ctx_hyps(const Sequent& p) {
    if (!same_ctx(p)) return false;
    if (!hyps_equal(p.hyps, seq().hyps)) return fail("premise hypotheses differ from conclusion hypotheses");
    return true;
  }

  bool run() {
    switch (node.rule.tag) {
      case RuleTag::Axiom: {
        if (seq().hyps.size() != 1) return fail("axiom takes exactly one hypothesis");
        if (!alpha_eq(seq().hyps[0], seq().concl))
          return fail("axiom hypothesis differs from its conclusion");
        return true;
      }
      case RuleTag::Weaken: {
        const Sequent& p = prem(0);
        if (!context_subsequence(p.ctx, seq().ctx))
          return fail("premise context is not a subsequence of the conclusion context");
        if (!hyps_subsequence(p.hyps, seq().hyps))
          return fail("premise hypotheses are not a subsequence of the conclusion hypotheses");
        if (!alpha_eq(p.concl, seq().concl)) return fail("weakening must not change the conclusion");
        return true;
      }
      case RuleTag::Exchange: {
        const Sequent& p = prem(0);
        if (!same_ctx(p)) return false;
        if (!hyps_permutation(p.hyps, seq().hyps))
          return fail("conclusion hypotheses are not a permutation of the premise's");
        if (!alpha_eq(p.concl, seq().concl)) return fail("exchange must not change the conclusion");
        return true;
      }
      case RuleTag::Cut: {
        const Sequent& p1 = prem(0), p2 = prem(1);
        if (!same_ctx_hyps(p1) || !same_ctx(p2)) return false;
        const FormulaPtr* cut = split_last_hyp(seq().hyps, p2.hyps);
        if (!cut) return fail("second premise must extend the hypotheses by the cut formula");
        if (!alpha_eq(*cut, p1.concl)) return fail("cut formula differs from the first premise's conclusion");
        if (!alpha_eq(p2.concl, seq().concl)) return fail("conclusion differs from the second premise's");
        return true;
      }
      case RuleTag::AndI: {
        if (!same_ctx_hyps(prem(0)) || !same_ctx_hyps(prem(1))) return false;
        if (seq().concl->kind != Formula::Kind::And) return fail("conclusion is not a conjunction");
        if (!alpha_eq(seq().concl->lhs, prem(0).concl))
          return fail("left conjunct differs from the first premise");
        if (!alpha_eq(seq().concl->rhs, prem(1).concl))
          return fail("right conjunct differs from the second premise");
        return true;
      }
      case RuleTag::AndE1:
      case RuleTag::AndE2: {
        const Sequent& p = prem(0);
        if (!same_ctx_hyps(p)) return false;
        if (p.concl->kind != Formula::Kind::And) return fail("premise is not a conjunction");
        const FormulaPtr& kept = node.rule.tag == RuleTag::AndE1 ? p.concl->lhs : p.concl->rhs;
        if (!alpha_eq(seq().concl, kept)) return fail("conclusion is not the selected conjunct");
        return true;
      }
      case RuleTag::OrI1:
      case RuleTag::OrI2: {
        const Sequent& p = prem(0);
        if (!same_ctx_hyps(p)) return false;
        if (seq().concl->kind != Formula::Kind::Or) return fail("conclusion is not a disjunction");
        const FormulaPtr& inj = node.rule.tag == RuleTag::OrI1 ? seq().concl->lhs : seq().concl->rhs;
        if (!alpha_eq(inj, p.concl)) return fail("premise is not the selected disjunct");
        return true;
      }
      case RuleTag::OrE: {
        const Sequent& p1 = prem(0), p2 = prem(1);
        if (seq().hyps.empty()) return fail("or elimination discharges the last hypothesis");
        const FormulaPtr& last = seq().hyps.back();
        if (last->kind != Formula::Kind::Or) return fail("last hypothesis is not a disjunction");
        std::vector<FormulaPtr> shared(seq().hyps.begin(), seq().hyps.end() - 1);
        if (!same_ctx(p1) || !same_ctx(p2)) return false;
        const FormulaPtr* l = split_last_hyp(shared, p1.hyps);
        const FormulaPtr* r = split_last_hyp(shared, p2.hyps);
        if (!l || !alpha_eq(*l, last->lhs))
          return fail("first premise must assume the left disjunct last");
        if (!r || !alpha_eq(*r, last->rhs))
          return fail("second premise must assume the right disjunct last");
        if (!alpha_eq(p1.concl, seq().concl) || !alpha_eq(p2.concl, seq().concl))
          return fail("premises must conclude the common formula");
        return true;
      }
      case RuleTag::ImpI: {
        const Sequent& p = prem(0);
        if (!same_ctx(p)) return false;
        if (seq().concl->kind != Formula::Kind::Imp) return fail("conclusion is not an implication");
        const FormulaPtr* ant = split_last_hyp(seq().hyps, p.hyps);
        if (!ant) return fail("premise must extend the hypotheses by the antecedent");
        if (!alpha_eq(*ant, seq().concl->lhs)) return fail("discharged hypothesis is not the antecedent");
        if (!alpha_eq(p.concl, seq().concl->rhs)) return fail("premise does not conclude the consequent");
        return true;
      }
      case RuleTag::ImpE: {
        const Sequent& p1 = prem(0), p2 = prem(1);
        if (!same_ctx_hyps(p1) || !same_ctx_hyps(p2)) return false;
        if (p1.concl->kind != Formula::Kind::Imp) return fail("first premise is not an implication");
        if (!alpha_eq(p2.concl, p1.concl->lhs))
          return fail("second premise does not match the antecedent");
        if (!alpha_eq(seq().concl, p1.concl->rhs)) return fail("conclusion is not the consequent");
        return true;
      }
      case RuleTag::NotI: {
        const Sequent& p = prem(0);
        if (!same_ctx(p)) return false;
        if (seq().concl->kind != Formula::Kind::Not) return fail("conclusion is not a negation");
        const FormulaPtr* ant = split_last_hyp(seq().hyps, p.hyps);
        if (!ant) return fail("premise must extend the hypotheses by the negated formula");
        if (!alpha_eq(*ant, seq().concl->lhs)) return fail("discharged hypothesis is not the negated formula");
        if (p.concl->kind != Formula::Kind::Bot) return fail("premise must conclude falsity");
        return true;
      }
      case RuleTag::NotE: {
        const Sequent& p1 = prem(0), p2 = prem(1);
        if (!same_ctx_hyps(p1) || !same_ctx_hyps(p2)) return false;
        if (p1.concl->kind != Formula::Kind::Not) return fail("first premise is not a negation");
        if (!alpha_eq(p2.concl, p1.concl->lhs))
          return fail("second premise does not match the negated formula");
        if (seq().concl->kind != Formula::Kind::Bot) return fail("conclusion must be falsity");
        return true;
      }
      case RuleTag::TopI: {
        if (seq().concl->kind != Formula::Kind::Top) return fail("conclusion must be truth");
        return true;
      }
      case RuleTag::BotE: {
        const Sequent& p = prem(0);
        if (!same_ctx_hyps(p)) return false;
        if (p.concl->kind != Formula::Kind::Bot) return fail("premise must conclude falsity");
        return true;
      }
      case RuleTag::Lem: {
        if (seq().concl->kind != Formula::Kind::Or) return fail("conclusion is not a disjunction");
        if (seq().concl->rhs->kind != Formula::Kind::Not)
          return fail("right disjunct is not a negation");
        if (!alpha_eq(seq().concl->lhs, seq().concl->rhs->lhs))
          return fail("disjuncts are not a formula and its negation");
        return true;
      }
      case RuleTag::ExistsI: {
        const Sequent& p = prem(0);
        if (!same_ctx_hyps(p)) return false;
        if (!node.rule.witness) return fail("exists introduction needs a witness term");
        if (seq().concl->kind != Formula::Kind::Exists) return fail("conclusion is not existential");
        TypePtr wt = typecheck_term(seq().ctx, node.rule.witness, sig);
        if (!type_equal(wt, seq().concl->bound_type))
          return fail("witness has type " + show(wt) + ", expected " + show(seq().concl->bound_type));
        FormulaPtr expected = substitute(seq().concl->lhs, {{seq().concl->name, node.rule.witness}});
        if (!alpha_eq(p.concl, expected))
          return fail("premise is not the body instantiated at the witness");
        return true;
      }
      case RuleTag::ExistsE: {
        const Sequent& p1 = prem(0), p2 = prem(1);
        if (!same_ctx_hyps(p1)) return false;
        std::string x;
        TypePtr a;
        if (!ctx_extends_by(seq().ctx, p2.ctx, &x, &a))
          return fail("second premise context must extend the conclusion context by the eigenvariable");
        const FormulaPtr* body = split_last_hyp(seq().hyps, p2.hyps);
        if (!body) return fail("second premise must assume the body last");
        if (!alpha_eq(p1.concl, f_exists(x, a, *body)))
          return fail("first premise does not conclude the matching existential");
        if (!alpha_eq(p2.concl, seq().concl))
          return fail("second premise does not conclude the goal");
        if (free_vars(seq().concl).count(x))
          return fail("eigenvariable " + x + " occurs free in the conclusion");
        for (const auto& h : seq().hyps)
          if (free_vars(h).count(x))
            return fail("eigenvariable " + x + " occurs free in the hypotheses");
        return true;
      }
      case RuleTag::ForallI: {
        const Sequent& p = prem(0);
        std::string x;
        TypePtr a;
        if (!ctx_extends_by(seq().ctx, p.ctx, &x, &a))
          return fail("premise context must extend the conclusion context by the eigenvariable");
        if (!hyps_equal(p.hyps, seq().hyps))
          return fail("premise hypotheses differ from conclusion hypotheses");
        for (const auto& h : seq().hyps)
          if (free_vars(h).count(x))
            return fail("eigenvariable " + x + " occurs free in the hypotheses");
        if (!alpha_eq(seq().concl, f_forall(x, a, p.concl)))
          return fail("conclusion is not the universal closure of the premise");
        return true;
      }
      case RuleTag::ForallE: {
        const Sequent& p = prem(0);
        if (!same_ctx_hyps(p)) return false;
        if (!node.rule.witness) return fail("forall elimination needs a witness term");
        if (p.concl->kind != Formula::Kind::Forall) return fail("premise is not universal");
        TypePtr wt = typecheck_term(seq().ctx, node.rule.witness, sig);
        if (!type_equal(wt, p.concl->bound_type))
          return fail("witness has type " + show(wt) + ", expected " + show(p.concl->bound_type));
        FormulaPtr expected = substitute(p.concl->lhs, {{p.concl->name, node.rule.witness}});
        if (!alpha_eq(seq().concl, expected))
          return fail("conclusion is not the body instantiated at the witness");
        return true;
      }
      case RuleTag::EqRefl: {
        if (seq().concl->kind != Formula::Kind::Eq) return fail("conclusion is not an equation");
        if (!alpha_eq(seq().concl->lhs_term, seq().concl->rhs_term))
          return fail("sides of the reflexivity equation differ");
        return true;
      }
      case RuleTag::EqSubst: {
        const Sequent& p1 = prem(0), p2 = prem(1);
        if (!same_ctx_hyps(p1) || !same_ctx_hyps(p2)) return false;
        if (!node.rule.target) return fail("eq-subst needs a target formula");
        if (node.rule.var.empty()) return fail("eq-subst needs a distinguished variable");
        if (p1.concl->kind != Formula::Kind::Eq) return fail("first premise is not an equation");
        const std::string& x = node.rule.var;
        if (seq().ctx.contains(x))
          return fail("eq-subst variable " + x + " already occurs in the context");
        const TermPtr& t = p1.concl->lhs_term;
        const TermPtr& u = p1.concl->rhs_term;
        TypePtr a = typecheck_term(seq().ctx, t, sig);
        wellform_formula(seq().ctx.extended(x, a), node.rule.target, sig);
        if (!alpha_eq(p2.concl, substitute(node.rule.target, {{x, t}})))
          return fail("second premise is not the target at the left-hand side");
        if (!alpha_eq(seq().concl, substitute(node.rule.target, {{x, u}})))
          return fail("conclusion is not the target at the right-hand side");
        return true;
      }
      case RuleTag::EpsI: {
        const Sequent& p = prem(0);
        if (p.hyps.size() != 1 || !alpha_eq(p.hyps[0], p.concl))
          return fail("premise must be an identity sequent carrying the body");
        std::string x;
        TypePtr a;
        if (!ctx_extends_by(seq().ctx, p.ctx, &x, &a))
          return fail("conclusion context must shrink by the bound variable");
        const FormulaPtr& psi = p.concl;
        if (seq().hyps.size() != 1) return fail("conclusion takes exactly the existential hypothesis");
        if (!alpha_eq(seq().hyps[0], f_exists(x, a, psi)))
          return fail("hypothesis is not the existential of the body");
        TermPtr eps = t_eps(x, a, psi);
        if (!alpha_eq(seq().concl, substitute(psi, {{x, eps}})))
          return fail("conclusion is not the body at its epsilon term");
        return true;
      }
      case RuleTag::EpsEx: {
        const Sequent& p1 = prem(0), p2 = prem(1);
        if (!context_equal(p1.ctx, p2.ctx)) return fail("premises live in different contexts");
        if (p1.hyps.size() != 1 || p2.hyps.size() != 1)
          return fail("each premise carries exactly one hypothesis");
        if (!alpha_eq(p2.hyps[0], p1.concl) || !alpha_eq(p2.concl, p1.hyps[0]))
          return fail("premises are not the two directions of an equivalence");
        std::string x;
        TypePtr a;
        if (!ctx_extends_by(seq().ctx, p1.ctx, &x, &a))
          return fail("conclusion context must shrink by the bound variable");
        if (!seq().hyps.empty()) return fail("conclusion carries no hypotheses");
        if (seq().concl->kind != Formula::Kind::Eq) return fail("conclusion is not an equation");
        const FormulaPtr& psi = p1.hyps[0];
        const FormulaPtr& phi = p1.concl;
        if (!alpha_eq(seq().concl->lhs_term, t_eps(x, a, psi)))
          return fail("left side is not the epsilon term of the first body");
        if (!alpha_eq(seq().concl->rhs_term, t_eps(x, a, phi)))
          return fail("right side is not the epsilon term of the second body");
        return true;
      }
    }
    return fail("unknown rule");
  }
};

void walk(const Derivation& d, const std::string& path, const Signature& sig, CheckResult& out) {
  NodeVerdict verdict{path, rule_name(d.rule.tag), true, ""};
  if (d.premises.size() != premise_count(d.rule.tag)) {
    verdict.ok = false;
    verdict.message = std::string(rule_name(d.rule.tag)) + " takes " +
                      std::to_string(premise_count(d.rule.tag)) + " premises, got " +
                      std::to_string(d.premises.size());
  } else {
    Check chk{d, sig, ""};
    try {
      if (!chk.run()) {
        verdict.ok = false;
        verdict.message = chk.error;
      } else {
        wellform_sequent(d.conclusion, sig);
      }
    } catch (const TypeError& e) {
      verdict.ok = false;
      verdict.message = chk.error.empty() ? e.what() : chk.error;
    }
  }
  if (!verdict.ok) out.ok = false;
  out.nodes.push_back(std::move(verdict));
  for (std::size_t i = 0; i < d.premises.size(); ++i)
    walk(*d.premises[i], path + "." + std::to_string(i), sig, out);
}

}  // namespace

CheckResult check_derivation(const Derivation& d, const Signature& sig) {
  CheckResult out;
  walk(d, "root", sig, out);
  return out;
}

std::pair<DerivPtr, DerivPtr> derive_epsilon_exists_equiv(const Signature& sig, const Context& ctx,
                                                          const std::string& var,
                                                          const TypePtr& type,
                                                          const FormulaPtr& psi) {
  Context ext = ctx.extended(var, type);
  wellform_formula(ext, psi, sig);

  TermPtr eps = t_eps(var, type, psi);
  FormulaPtr at_eps = substitute(psi, {{var, eps}});
  FormulaPtr existential = f_exists(var, type, psi);

  DerivPtr fwd_axiom = mk_node(Rule{RuleTag::Axiom, nullptr, nullptr, ""}, {},
                               Sequent{ctx, {at_eps}, at_eps});
  DerivPtr fwd = mk_node(Rule{RuleTag::ExistsI, eps, nullptr, ""}, {fwd_axiom},
                         Sequent{ctx, {at_eps}, existential});

  DerivPtr bwd_axiom =
      mk_node(Rule{RuleTag::Axiom, nullptr, nullptr, ""}, {}, Sequent{ext, {psi}, psi});
  DerivPtr bwd = mk_node(Rule{RuleTag::EpsI, nullptr, nullptr, ""}, {bwd_axiom},
                         Sequent{ctx, {existential}, at_eps});

  for (const auto& d : {fwd, bwd}) {
    CheckResult r = check_derivation(*d, sig);
    if (!r.ok) throw Error("internal: generated derivation rejected: " + r.first_error());
  }
  return {fwd, bwd};
}

}  // namespace epscalc::kernel
