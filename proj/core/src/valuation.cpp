#include <hahn/valuation.hpp>

#include <hahn/error.hpp>

namespace hahn
{

namespace
{

// Sign of an exponent; floats within tolerance of 0 count as 0.
int exponent_sign(const scalar &e)
{
    if (e.is_exact()) {
        return sgn(e.exact());
    }
    return is_negligible(e) ? 0 : sgn(e);
}

const term &leading_term(const series &a)
{
    if (a.terms().empty()) {
        raise(error_kind::no_leading_term, "series O(t^" + to_text(*a.order()) + ") has no known leading term");
    }
    return a.terms().front();
}

} // namespace

gamma_coord::gamma_coord(int sign, scalar q) : m_sign(sign), m_q(std::move(q))
{
    if (sign != 1 && sign != -1) {
        raise(error_kind::domain_error, "gamma sign must be +1 or -1");
    }
}

gamma_coord gamma_coord::inverse() const
{
    if (is_zero()) {
        raise(error_kind::division_by_zero, "the zero symbol of Gamma has no inverse");
    }
    return {m_sign, -m_q};
}

gamma_coord operator*(const gamma_coord &x, const gamma_coord &y)
{
    if (x.is_zero() || y.is_zero()) {
        return gamma_coord::zero();
    }
    return {x.m_sign * y.m_sign, x.m_q + y.m_q};
}

bool operator==(const gamma_coord &x, const gamma_coord &y)
{
    return x.m_sign == y.m_sign && (x.is_zero() || x.m_q == y.m_q);
}

rv_element::rv_element(scalar q, scalar c) : m_zero(false), m_q(std::move(q)), m_c(std::move(c))
{
    if (is_negligible(m_c)) {
        raise(error_kind::domain_error, "leading coefficient must be nonzero");
    }
}

rv_element operator*(const rv_element &x, const rv_element &y)
{
    if (x.is_zero() || y.is_zero()) {
        return rv_element::zero();
    }
    return {x.m_q + y.m_q, x.m_c * y.m_c};
}

bool operator==(const rv_element &x, const rv_element &y)
{
    if (x.is_zero() || y.is_zero()) {
        return x.is_zero() == y.is_zero();
    }
    return x.m_q == y.m_q && x.m_c == y.m_c;
}

rv_element leading(const series &a)
{
    if (a.is_exact_zero()) {
        return rv_element::zero();
    }
    const auto &t = leading_term(a);
    return {t.exponent, t.coeff};
}

gamma_coord vv(const series &a)
{
    if (a.is_exact_zero()) {
        return gamma_coord::zero();
    }
    const auto &t = leading_term(a);
    return {sgn(t.coeff), t.exponent};
}

scalar ac(const series &a)
{
    if (a.is_exact_zero()) {
        return scalar(0);
    }
    return leading_term(a).coeff;
}

std::pair<scalar, gamma_coord> av(const series &a)
{
    return {ac(a), vv(a)};
}

series lg(const series &a)
{
    if (a.is_exact_zero()) {
        return {};
    }
    const auto &t = leading_term(a);
    return series::monomial(t.coeff, t.exponent);
}

scalar embed_gamma(const gamma_coord &g, const numeric_context &ctx)
{
    if (g.is_zero()) {
        return scalar(0);
    }
    const scalar magnitude = exp_scalar(-g.q(), ctx);
    return g.sign() > 0 ? magnitude : -magnitude;
}

gamma_coord gamma_pow(const gamma_coord &g, const scalar &e)
{
    if (g.is_zero()) {
        if (e.is_exact() ? sgn(e.exact()) > 0 : (!is_negligible(e) && sgn(e) > 0)) {
            return gamma_coord::zero();
        }
        raise(error_kind::domain_error, "the zero symbol only has positive powers");
    }
    if (g.sign() > 0) {
        return {1, g.q() * e};
    }
    const auto n = to_integer(e);
    if (!n) {
        raise(error_kind::domain_error, "negative Gamma element raised to non-integral power " + to_text(e));
    }
    return {(*n % 2 == 0) ? 1 : -1, g.q() * e};
}

series pi(const scalar &a, const numeric_context &ctx)
{
    if (is_negligible(a)) {
        raise(error_kind::domain_error, "pi is undefined at 0");
    }
    const scalar magnitude = abs(a);
    if (magnitude.is_exact() && magnitude.exact() == 1) {
        return series::constant(a);
    }
    return series::monomial(a, -log_scalar(magnitude, ctx));
}

series pi(const gamma_coord &g, const numeric_context &ctx)
{
    if (g.is_zero()) {
        return {};
    }
    return series::monomial(embed_gamma(g, ctx), g.q());
}

scalar residue(const series &a)
{
    if (a.is_exact_zero()) {
        return scalar(0);
    }
    if (!a.terms().empty() && exponent_sign(a.terms().front().exponent) < 0) {
        raise(error_kind::not_in_o, "residue of a series outside the valuation ring");
    }
    if (a.order() && exponent_sign(*a.order()) <= 0) {
        raise(error_kind::insufficient_precision, "residue needs truncation order above 0");
    }
    return a.coeff_at(scalar(0));
}

membership classify(const series &a, const numeric_context &ctx)
{
    membership m;
    if (a.is_exact_zero()) {
        m.in_o = m.in_m = m.in_kd = true;
        return m;
    }
    const auto &t = leading_term(a);
    const int es = exponent_sign(t.exponent);
    m.in_o = es >= 0;
    m.in_m = es > 0;
    m.in_u = es == 0;
    m.in_uplus = m.in_u && sgn(t.coeff) > 0;
    m.in_kd = a.is_exact() && a.terms().size() == 1;
    if (m.in_kd) {
        const scalar magnitude = abs(t.coeff);
        if (t.exponent.is_exact() && magnitude.is_exact()) {
            // e^r is irrational for rational r != 0, so exact data only hits 1 * t^0.
            m.in_delta = es == 0 && magnitude.exact() == 1;
        } else if (es == 0 && t.exponent.is_exact()) {
            m.in_delta = approx_eq(magnitude, scalar(1), ctx);
        } else {
            m.in_delta = approx_eq(magnitude, exp_scalar(-t.exponent, ctx), ctx);
        }
    }
    return m;
}

} // namespace hahn
