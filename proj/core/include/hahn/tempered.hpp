#ifndef HAHN_TEMPERED_HPP
#define HAHN_TEMPERED_HPP

#include <hahn/scalar.hpp>
#include <hahn/series.hpp>

namespace hahn
{

// Truncation budgets. Every result below is correct modulo O(t^omega_out):
//
//   exp_series(a, T)         omega_out = min(T, omega_a)
//   log_series(b, T)         omega_out = min(T, omega_b)
//   pow_unit(b, a, T)        omega_out = min(T, omega_a, omega_b)
//   tempered_power(a, g, T)  omega_out = min(T, q g + omega_a - q)   with q = v(a)
//   tempered_exp(a, x, T)    as tempered_power with g = embed(vv(x))

// exp : O -> U^+. Splits a = a0 + b with a0 = res(a), b in M, and returns
// exp(a0) * sum_k b^k / k!.
series exp_series(const series &a, const scalar &target, const numeric_context &ctx);

// log : U^+ -> O, the inverse of exp_series.
series log_series(const series &b, const scalar &target, const numeric_context &ctx);

// b^a = exp(a log b) for b in U^+ and a in O.
series pow_unit(const series &b, const series &a, const scalar &target, const numeric_context &ctx);

// Tempered power a^g = pi(vv(a)^g) * (a / pi(vv(a)))^g for a > 0. Exact
// integer g goes through pow_int, so t^-1 squared stays exact.
series tempered_power(const series &a, const scalar &gamma, const scalar &target, const numeric_context &ctx);

// Tempered exponential x -> a^(vv(x)) for a > 0, a != 1, x != 0.
series tempered_exp(const series &a, const series &x, const scalar &target, const numeric_context &ctx);

// Checks the derivative identity d/dx a^g = g a^(g-1) with the finite
// difference h = t^N: (varpi_g(a + h) - varpi_g(a)) / h must agree with
// g varpi_{g-1}(a) on all exponents below `cutoff`. The second-order error
// sits at exponent q g - 2 q + N, so the check is sharp as long as
// cutoff <= N + q (g - 2) where q = v(a). Float work runs at twice the
// context precision because the difference cancels large coefficients.
bool derivative_check(const series &a, const scalar &gamma, const scalar &n, const scalar &cutoff,
                      const numeric_context &ctx);

} // namespace hahn

#endif
