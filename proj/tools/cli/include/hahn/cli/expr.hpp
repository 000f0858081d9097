#ifndef HAHN_CLI_EXPR_HPP
#define HAHN_CLI_EXPR_HPP

// Series expressions for the command line.
//
//   expr    := sum
//   sum     := product (('+' | '-') product)*
//   product := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := atom ('^' unary)?
//   atom    := number | 't' | '(' expr ')' | name '(' expr (';' expr)? ')'
//
// Names: exp, log, pi, lg, vv, ac, tpow(a; g), O(t^w). A number is an
// integer or decimal literal and is always exact; 1/3 is a division. Powers
// take integer exponents, except that t^(q) accepts any constant q.

#include <string_view>
#include <variant>

#include <hahn/scalar.hpp>
#include <hahn/series.hpp>
#include <hahn/valuation.hpp>

namespace hahn::cli
{

// vv(...) yields a value group element; everything else is a series.
using value = std::variant<series, gamma_coord>;

// Throws parse_error with the byte offset of the problem; evaluation errors
// (mode_error, domain_error, ...) pass through. Truncating operations use
// ctx.truncation as their target order.
value evaluate(std::string_view text, const numeric_context &ctx);

// evaluate() that insists on a series result.
series evaluate_series(std::string_view text, const numeric_context &ctx);

// evaluate() that insists on a constant; vv results are embedded.
scalar evaluate_scalar(std::string_view text, const numeric_context &ctx);

} // namespace hahn::cli

#endif
