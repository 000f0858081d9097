#ifndef HAHN_VALUATION_HPP
#define HAHN_VALUATION_HPP

#include <utility>

#include <hahn/scalar.hpp>
#include <hahn/series.hpp>

namespace hahn
{

// Element of the signed value group Gamma (plus its zero symbol) in log
// coordinates: (sign, q) stands for sign * e^(-q). Group laws act on the
// coordinates only, so they stay exact in exact mode.
class gamma_coord
{
public:
    // The zero symbol.
    gamma_coord() = default;
    gamma_coord(int sign, scalar q);

    static gamma_coord zero()
    {
        return {};
    }
    static gamma_coord one()
    {
        return {1, scalar(0)};
    }

    bool is_zero() const noexcept
    {
        return m_sign == 0;
    }
    int sign() const noexcept
    {
        return m_sign;
    }
    const scalar &q() const noexcept
    {
        return m_q;
    }
    // Positive cone Gamma^+.
    bool is_positive() const noexcept
    {
        return m_sign > 0;
    }

    gamma_coord inverse() const;

    friend gamma_coord operator*(const gamma_coord &x, const gamma_coord &y);
    friend bool operator==(const gamma_coord &x, const gamma_coord &y);

private:
    int m_sign = 0;
    scalar m_q;
};

// Leading term c t^q, the concrete RV element.
class rv_element
{
public:
    rv_element() = default;
    rv_element(scalar q, scalar c);

    static rv_element zero()
    {
        return {};
    }

    bool is_zero() const noexcept
    {
        return m_zero;
    }
    const scalar &q() const noexcept
    {
        return m_q;
    }
    const scalar &c() const noexcept
    {
        return m_c;
    }

    friend rv_element operator*(const rv_element &x, const rv_element &y);
    friend bool operator==(const rv_element &x, const rv_element &y);

private:
    bool m_zero = true;
    scalar m_q;
    scalar m_c;
};

// Raises for O(t^w) inputs (terms empty, finite order).
rv_element leading(const series &a);
gamma_coord vv(const series &a);
scalar ac(const series &a);
std::pair<scalar, gamma_coord> av(const series &a);
// Leading monomial as a series.
series lg(const series &a);

// (s, q) -> s * exp(-q).
scalar embed_gamma(const gamma_coord &g, const numeric_context &ctx);
// Gamma-exponentiation. Non-integral exponents need a positive base.
gamma_coord gamma_pow(const gamma_coord &g, const scalar &e);

// Diagonal cross-section: a -> a t^(-log|a|).
series pi(const scalar &a, const numeric_context &ctx);
// (s, q) -> s e^(-q) t^q; the zero symbol maps to 0.
series pi(const gamma_coord &g, const numeric_context &ctx);

scalar residue(const series &a);

struct membership {
    bool in_o = false;
    bool in_m = false;
    bool in_u = false;
    bool in_uplus = false;
    bool in_kd = false;
    bool in_delta = false;
};

membership classify(const series &a, const numeric_context &ctx);

} // namespace hahn

#endif
