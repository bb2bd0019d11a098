#pragma once

#include <optional>
#include <string>

#include "liftinglab/boolean_function.hpp"

namespace liftinglab {

// Grammar (whitespace insignificant):
//   expr   := term (xor term)*          xor: '⊕' | '^' | '+'
//   term   := factor (mul? factor)*     mul: '*' | '·' | juxtaposition
//   factor := 'x' digits | '0' | '1' | '(' expr ')'
// AND binds tighter than XOR. Lowering reduces over F_2 (x^2 = x, 1+1 = 0).
BooleanFunction parse_anf(const std::string& text, std::optional<int> arity_hint = std::nullopt);

// Parse without building the truth table; arity = max variable index unless
// a hint widens it.
AnfPolynomial parse_anf_polynomial(const std::string& text, std::optional<int> arity_hint = std::nullopt);

// Deterministic rendering: monomials ordered by (size, variable indices),
// joined by " ⊕ "; "0"/"1" for constants. parse_anf(format_anf(f)) == f.
std::string format_anf(const BooleanFunction& f);
std::string format_anf(const AnfPolynomial& poly);

}  // namespace liftinglab
