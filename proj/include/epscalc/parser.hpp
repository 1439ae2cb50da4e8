#pragma once

#include <string>
#include <utility>
#include <vector>

#include "epscalc/syntax.hpp"

namespace epscalc::parser {

// A parsed theory file: signature plus named definitions and axioms.
// All formulas and sequents are typechecked on the way in.
struct Theory {
  syntax::Signature sig;
  std::vector<std::pair<std::string, syntax::TermPtr>> terms;       // def name := term
  std::vector<std::pair<std::string, syntax::FormulaPtr>> formulas; // def name := formula
  std::vector<std::pair<std::string, syntax::Sequent>> axioms;

  const syntax::Sequent* find_axiom(const std::string& name) const;
  bool mentions_empty() const;
};

Theory parse_theory(const std::string& source);

syntax::TypePtr parse_type(const std::string& source, const syntax::Signature& sig);
syntax::Context parse_context(const std::string& source, const syntax::Signature& sig);
syntax::TermPtr parse_term(const std::string& source, const syntax::Signature& sig,
                           const syntax::Context& ctx);
syntax::FormulaPtr parse_formula(const std::string& source, const syntax::Signature& sig,
                                 const syntax::Context& ctx);
syntax::Sequent parse_sequent(const std::string& source, const syntax::Signature& sig);

}  // namespace epscalc::parser
