#include <hahn/tempered.hpp>

#include <hahn/error.hpp>
#include <hahn/valuation.hpp>

namespace hahn
{

namespace
{

int exponent_sign(const scalar &e)
{
    if (e.is_exact()) {
        return sgn(e.exact());
    }
    return is_negligible(e) ? 0 : sgn(e);
}

void require_in_o(const series &a, const char *what)
{
    if (a.is_exact_zero()) {
        return;
    }
    if (!a.terms().empty()) {
        if (exponent_sign(a.terms().front().exponent) < 0) {
            raise(error_kind::not_in_o, std::string(what) + ": argument is not in the valuation ring");
        }
        return;
    }
    if (exponent_sign(*a.order()) <= 0) {
        raise(error_kind::insufficient_precision,
              std::string(what) + ": O(t^" + to_text(*a.order()) + ") is not known to lie in O");
    }
}

// Sum of coeffs[k] * x^k for k >= 1 until x^k falls below `omega`. x must lie
// in M so the powers eventually vanish modulo t^omega.
template <typename CoeffFn>
series power_sum(const series &x, const scalar &omega, CoeffFn coeff)
{
    series sum = series::big_o(omega);
    series power = series::constant(scalar(1));
    for (long k = 1;; ++k) {
        power = clip(power * x, omega);
        if (power.terms().empty()) {
            break;
        }
        sum = sum + scale(power, coeff(k));
    }
    return sum;
}

} // namespace

series exp_series(const series &a, const scalar &target, const numeric_context &ctx)
{
    require_in_o(a, "exp");
    if (a.is_exact_zero()) {
        return series::constant(scalar(1));
    }
    scalar a0(0);
    std::vector<term> rest;
    for (const auto &t : a.terms()) {
        if (exponent_sign(t.exponent) == 0) {
            a0 = t.coeff;
        } else {
            rest.push_back(t);
        }
    }
    const series b = series::from_terms(std::move(rest), a.order());

    series unit;
    if (b.is_exact_zero()) {
        unit = series::constant(scalar(1));
    } else {
        const scalar omega = *min_order(target, a.order());
        // 1 + sum b^k / k!, with the factorial folded into the running power.
        series sum = series::from_terms({term{scalar(0), scalar(1)}}, omega);
        series power = series::constant(scalar(1));
        for (long k = 1;; ++k) {
            power = scale(clip(power * b, omega), scalar::rational(1, k));
            if (power.terms().empty()) {
                break;
            }
            sum = sum + power;
        }
        unit = sum;
    }
    if (is_negligible(a0)) {
        return unit;
    }
    return scale(unit, exp_scalar(a0, ctx));
}

series log_series(const series &b, const scalar &target, const numeric_context &ctx)
{
    if (b.terms().empty() || exponent_sign(b.terms().front().exponent) != 0
        || sgn(b.terms().front().coeff) <= 0) {
        raise(error_kind::not_positive_unit, "log is only defined on positive units");
    }
    const scalar b0 = b.terms().front().coeff;
    const series m = scale(b, scalar(1) / b0) - series::constant(scalar(1));
    const scalar log_b0 = log_scalar(b0, ctx);
    if (m.is_exact_zero()) {
        return series::constant(log_b0);
    }
    const scalar omega = *min_order(target, b.order());
    // Mercator: sum (-1)^(k+1) m^k / k
    series sum = power_sum(m, omega, [](long k) { return scalar::rational(k % 2 == 1 ? 1 : -1, k); });
    return sum + series::constant(log_b0);
}

series pow_unit(const series &b, const series &a, const scalar &target, const numeric_context &ctx)
{
    require_in_o(a, "pow");
    const series log_b = log_series(b, target, ctx);
    return exp_series(a * log_b, target, ctx);
}

series tempered_power(const series &a, const scalar &gamma, const scalar &target, const numeric_context &ctx)
{
    switch (compare(a, series{})) {
        case comparison::greater:
            break;
        case comparison::ambiguous:
            raise(error_kind::ambiguous, "sign of the base is hidden below its truncation order");
        default:
            raise(error_kind::not_positive, "tempered powers need a positive base");
    }
    // Integer exponents agree with ring powers; this keeps them exact.
    if (const auto n = gamma.is_exact() ? to_integer(gamma) : std::nullopt) {
        return pow_int(a, *n, target);
    }
    const gamma_coord g = vv(a);
    const gamma_coord g_pow = gamma_pow(g, gamma);
    const series head = pi(g_pow, ctx);
    // a / pi(vv(a)) is a positive unit.
    const series unit = scale(shift(a, -g.q()), scalar(1) / embed_gamma(g, ctx));
    const series tail = pow_unit(unit, series::constant(gamma), target - g_pow.q(), ctx);
    return head * tail;
}

series tempered_exp(const series &a, const series &x, const scalar &target, const numeric_context &ctx)
{
    if (compare(a, series::constant(scalar(1))) == comparison::equal) {
        raise(error_kind::domain_error, "tempered exponential base must differ from 1");
    }
    if (x.is_exact_zero()) {
        raise(error_kind::domain_error, "tempered exponential is undefined at 0");
    }
    return tempered_power(a, embed_gamma(vv(x), ctx), target, ctx);
}

bool derivative_check(const series &a, const scalar &gamma, const scalar &n, const scalar &cutoff,
                      const numeric_context &ctx)
{
    if (sgn(n) <= 0) {
        raise(error_kind::domain_error, "difference exponent N must be positive");
    }
    const series h = series::t_power(n);
    const series a_h = a + h;
    if (!(vv(a_h) == vv(a))) {
        raise(error_kind::domain_error, "t^N is not small enough to preserve vv(a)");
    }
    const scalar q = vv(a).q();
    const scalar sharp = n + q * (gamma - scalar(2));
    if (raw_compare(cutoff, sharp) == std::strong_ordering::greater && !approx_eq(cutoff, sharp)) {
        raise(error_kind::domain_error, "cutoff " + to_text(cutoff) + " exceeds the sharp bound " + to_text(sharp));
    }
    const scalar omega = n + cutoff;
    // The difference cancels coefficients that can be far larger than 1, so
    // it is formed at twice the precision and compared at the caller's tau.
    numeric_context wide = ctx;
    if (ctx.arithmetic == mode::floating) {
        wide.precision_bits = 2 * ctx.precision_bits;
    }
    const series upper = tempered_power(a_h, gamma, omega, wide);
    const series lower = tempered_power(a, gamma, omega, wide);
    const series quotient = shift(upper - lower, -n);
    const series expected = scale(tempered_power(a, gamma - scalar(1), cutoff, wide), gamma);
    return approx_equal_below(quotient, expected, cutoff, ctx);
}

} // namespace hahn
