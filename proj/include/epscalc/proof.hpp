#pragma once

#include <string>
#include <vector>

#include "epscalc/kernel.hpp"

namespace epscalc::kernel {

// Proof scripts are s-expression trees
//   (rule-name arg-strings... (premise...) "<sequent>")
// where exists-i and forall-e take the witness term as one argument and
// eq-subst takes the target formula and its variable as two. Sequents use
// the theory-file syntax; '#' starts a line comment.
DerivPtr parse_proof(const std::string& source, const syntax::Signature& sig);
std::vector<DerivPtr> parse_proofs(const std::string& source, const syntax::Signature& sig);

std::string to_sexpr(const Derivation& d);

}  // namespace epscalc::kernel
