#pragma once

#include <string>

#include "stoup/formula.hpp"

namespace stoup {

// Concrete syntax:
//   sequent := stoup '|' context '|-' formula
//   stoup   := '-' | formula
//   context := '.' | formula (',' formula)*
//   formula := infix over atoms, 'I', 'Top', 'Bot' with operators
//              '*' > '/\' > '\/' > '-o', all right-associative.
// Top/Bot/-o are rejected unless the profile enables them.
FormulaPtr parse_formula(const std::string& text, const LogicProfile& profile);
Sequent parse_sequent(const std::string& text, const LogicProfile& profile);

}  // namespace stoup
