#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "relcycles/multipoly.hpp"

namespace relcycles {

// Variable slots of the input grammar.
inline constexpr std::size_t kVarX = 0;
inline constexpr std::size_t kVarT1 = 1; // t1..t9 occupy slots 1..9
inline constexpr std::size_t kVarY = 10;
inline constexpr std::size_t kExprVars = 11;

const std::vector<std::string>& expression_variable_names();

/// An unreduced quotient num/den of polynomials in x, t1..t9, y.
struct RationalExpr {
    SparsePoly num;
    SparsePoly den;
};

/// Grammar: integers, x, t1..t9, y, + - * / ^, parentheses; whitespace is
/// ignored. Exponents are integer literals (optionally negative). Throws
/// ParseError with line/column on malformed input.
RationalExpr parse_expression(std::string_view text, Field field);

/// Univariate view of a polynomial that only involves `var`.
UPoly to_univariate(const SparsePoly& p, std::size_t var);

/// Element of A = k[x]_(x). Throws InvalidArgument if t's or y occur and
/// UnitRequired if the denominator vanishes at x = 0.
LocalElem to_local_elem(const RationalExpr& e);

/// Polynomial in t1..t_arity over A (t_i becomes variable i-1). The
/// denominator may only involve x.
LocalPoly to_t_poly(const RationalExpr& e, std::size_t arity);

} // namespace relcycles
