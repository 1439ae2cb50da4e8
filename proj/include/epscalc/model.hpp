#pragma once

#include <string>

#include "epscalc/semantics.hpp"

namespace epscalc::semantics {

// Model files assign carriers to base types and tables to symbols:
//   carrier A = 2;
//   point A = 0;
//   fun f = [1, 0];
//   rel P = {(1)};
// Basepoints are frozen at 0, so `point` lines only assert pointedness.
// Sources starting with '{' are read as the JSON mirror.
Interpretation parse_model(const std::string& source, const syntax::Signature& sig);

std::string show_model(const Interpretation& interp);
std::string model_to_json_string(const Interpretation& interp);

}  // namespace epscalc::semantics
