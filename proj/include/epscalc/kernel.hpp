#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "epscalc/syntax.hpp"

namespace epscalc::kernel {

enum class RuleTag {
  Axiom,
  Weaken,
  Exchange,
  Cut,
  AndI,
  AndE1,
  AndE2,
  OrI1,
  OrI2,
  OrE,
  ImpI,
  ImpE,
  NotI,
  NotE,
  TopI,
  BotE,
  Lem,
  ExistsI,
  ExistsE,
  ForallI,
  ForallE,
  EqRefl,
  EqSubst,
  EpsI,
  EpsEx,
};

const char* rule_name(RuleTag tag);
std::optional<RuleTag> rule_from_name(std::string_view name);
std::size_t premise_count(RuleTag tag);

// A rule instance; exists-i and forall-e carry the witness term, eq-subst
// carries the replacement target and its distinguished variable.
struct Rule {
  RuleTag tag;
  syntax::TermPtr witness;
  syntax::FormulaPtr target;
  std::string var;
};

struct Derivation;
using DerivPtr = std::shared_ptr<const Derivation>;

struct Derivation {
  Rule rule;
  std::vector<DerivPtr> premises;
  syntax::Sequent conclusion;
};

DerivPtr mk_node(Rule rule, std::vector<DerivPtr> premises, syntax::Sequent conclusion);

struct NodeVerdict {
  std::string path;  // "root", "root.0", ...
  std::string rule;
  bool ok;
  std::string message;
};

struct CheckResult {
  bool ok = true;
  std::vector<NodeVerdict> nodes;  // preorder
  std::string first_error() const;
};

// Checks every node locally: premise count, rule shape, side conditions,
// then well-formedness of the conclusion sequent.
CheckResult check_derivation(const Derivation& d, const syntax::Signature& sig);

// The derivable equivalence between the substituted epsilon instance and
// the existential: returns checked derivations of
//   ctx | psi[eps/x] |- exists x:A. psi   (exists-i at the epsilon witness)
//   ctx | exists x:A. psi |- psi[eps/x]   (eps-i)
std::pair<DerivPtr, DerivPtr> derive_epsilon_exists_equiv(const syntax::Signature& sig,
                                                          const syntax::Context& ctx,
                                                          const std::string& var,
                                                          const syntax::TypePtr& type,
                                                          const syntax::FormulaPtr& psi);

}  // namespace epscalc::kernel
