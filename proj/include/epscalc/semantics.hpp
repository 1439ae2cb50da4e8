#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "epscalc/doctrine.hpp"
#include "epscalc/finset.hpp"
#include "epscalc/kernel.hpp"
#include "epscalc/parser.hpp"
#include "epscalc/syntax.hpp"

namespace epscalc::semantics {

// Assignment of pointed carriers to base types and of tables to symbols.
// Basepoints are frozen at element 0. Function symbol tables live over the
// mixed-radix product of the interpreted argument types.
struct Interpretation {
  syntax::Signature sig;
  std::vector<std::pair<std::string, std::size_t>> carriers;  // declaration order
  std::map<std::string, finset::FinMor> funs;
  std::map<std::string, finset::Subset> rels;

  std::size_t carrier_of(const std::string& base) const;
  // All base carriers are singletons; the only mode in which the empty
  // type is interpretable (as the terminal object).
  bool degenerate() const;
};

std::size_t interpret_type_size(const syntax::TypePtr& t, const Interpretation& interp);
finset::FinObj interpret_type(const syntax::TypePtr& t, const Interpretation& interp);

// Product layout of a context: mixed-radix, last variable fastest, so
// extending a layout by one variable is exactly the binary product with
// the row-major encoding.
struct ContextLayout {
  syntax::Context ctx;
  std::vector<std::size_t> sizes;
  std::vector<std::size_t> strides;
  finset::FinObj carrier;

  static ContextLayout make(const syntax::Context& ctx, const Interpretation& interp);
  ContextLayout extended(const std::string& var, const syntax::TypePtr& type,
                         const Interpretation& interp) const;
  finset::FinMor projection(std::size_t index) const;
};

finset::FinMor interpret_term(const ContextLayout& layout, const syntax::TermPtr& t,
                              const Interpretation& interp);
finset::Subset interpret_formula(const ContextLayout& layout, const syntax::FormulaPtr& phi,
                                 const Interpretation& interp);

// Meet of the interpreted hypotheses <= interpreted conclusion.
bool holds(const syntax::Sequent& seq, const Interpretation& interp);

// Both evaluation routes of the substitution equation: interpreting the
// substituted formula versus reindexing along the tuple of interpreted
// terms. `inner` is the context of `phi`; `terms` assigns one term over
// `outer` to each of its variables, in order.
bool substitution_lemma_check(const syntax::Context& outer, const syntax::Context& inner,
                              const syntax::FormulaPtr& phi,
                              const std::vector<syntax::TermPtr>& terms,
                              const Interpretation& interp);

struct TrivialityReport {
  bool ok = true;
  std::string reason;
};

// A theory mentioning the empty type is interpretable only in the
// degenerate all-singleton model: the epsilon term of the full predicate
// over Unit×Empty is a point of the initial object, which collapses every
// carrier.
TrivialityReport empty_type_guard(const parser::Theory& theory, const Interpretation& interp);

// ----------------------------------------------------------- enumeration

struct EnumSpec {
  std::size_t max_carrier = 3;
  std::uint64_t budget = 1000000;
};

struct EnumStats {
  std::uint64_t total = 0;  // saturating
  std::uint64_t visited = 0;
  bool truncated = false;
};

// Deterministic enumeration: carrier size vectors ascending in
// lexicographic order (first declared base type most significant), then
// function tables in tuple order, then relation masks ascending, symbols
// in declaration order. Theories mentioning the empty type only get the
// degenerate all-singleton sizing. The visitor may return false to stop.
EnumStats for_each_interpretation(const parser::Theory& theory, const EnumSpec& spec,
                                  const std::function<bool(const Interpretation&)>& visit);

std::uint64_t count_interpretations(const parser::Theory& theory, std::size_t max_carrier);

struct AuditReport {
  std::uint64_t models_checked = 0;
  bool truncated = false;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Requires check_derivation(d) = ok; enumerates every interpretation
// within the bound and asserts the root sequent holds in each.
AuditReport audit_soundness(const kernel::Derivation& d, const parser::Theory& theory,
                            const EnumSpec& spec);

struct CountermodelResult {
  std::optional<Interpretation> model;
  std::uint64_t models_checked = 0;
  bool truncated = false;
};

// First interpretation in enumeration order where the sequent fails.
CountermodelResult countermodel_search(const syntax::Sequent& seq, const parser::Theory& theory,
                                       const EnumSpec& spec);

}  // namespace epscalc::semantics
