#ifndef HAHN_SERIES_HPP
#define HAHN_SERIES_HPP

#include <optional>
#include <vector>

#include <hahn/scalar.hpp>

namespace hahn
{

struct term {
    scalar exponent;
    scalar coeff;
};

// Truncation order. An empty optional is infinity: the series is known exactly.
using order_t = std::optional<scalar>;

order_t min_order(const order_t &a, const order_t &b);
// a + s with infinity absorbing.
order_t shift_order(const order_t &a, const scalar &s);
// a < b with infinity as the top element.
bool order_less(const order_t &a, const order_t &b);

// Finite-support generalized power series sum(c t^e) + O(t^omega).
//
// Terms are sorted strictly increasing by exponent, coefficients are
// non-negligible and every exponent lies below the order. Float exponents
// within tolerance of each other are merged. The canonical exact zero has no
// terms and infinite order.
class series
{
public:
    series() = default;

    static series constant(const scalar &c);
    static series monomial(const scalar &coeff, const scalar &exponent);
    // t^e
    static series t_power(const scalar &exponent);
    // O(t^omega)
    static series big_o(const scalar &omega);
    // Sorts, merges, drops negligible coefficients and terms at or above order.
    static series from_terms(std::vector<term> terms, order_t order = std::nullopt);

    const std::vector<term> &terms() const noexcept
    {
        return m_terms;
    }
    const order_t &order() const noexcept
    {
        return m_order;
    }

    bool is_exact() const noexcept
    {
        return !m_order.has_value();
    }
    bool is_exact_zero() const noexcept
    {
        return m_terms.empty() && !m_order;
    }
    // True when every exponent and coefficient is an exact rational.
    bool all_exact_scalars() const;

    // Least exponent, or the order when there are no terms (v(0 with omega) = omega).
    // Empty for the exact zero.
    order_t valuation() const;

    // Coefficient at the given exponent (tolerant for float exponents); 0 if absent.
    scalar coeff_at(const scalar &exponent) const;

private:
    std::vector<term> m_terms;
    order_t m_order;
};

series operator+(const series &a, const series &b);
series operator-(const series &a, const series &b);
series operator-(const series &a);
series operator*(const series &a, const series &b);

// Multiplies every coefficient by c.
series scale(const series &a, const scalar &c);
// Multiplies by t^e.
series shift(const series &a, const scalar &e);

// Multiplicative inverse. With a = c t^q (1 + m), the geometric series in m
// is summed so the result carries order min(target + max(0, -q), omega_a - 2q).
// Then a * invert(a) = 1 + O(t^delta) with
// delta = min(target + max(q, 0), omega_a - q) >= min(target, omega_a - 2q)
// whenever the right-hand side is attainable.
series invert(const series &a, const scalar &target);

// Integer power; negative powers go through invert with the given target.
series pow_int(const series &a, long n, const scalar &target);

series truncate(const series &a, const scalar &omega);
// Truncates to min(omega, order of a); never raises.
series clip(const series &a, const scalar &omega);

enum class comparison { less, equal, greater, ambiguous };

// Field order: sign of the leading coefficient of a - b.
comparison compare(const series &a, const series &b);

// Structural equality: same exponents, same coefficients, same order.
bool operator==(const series &a, const series &b);

// Compares coefficients at every exponent below `below` with approx_eq
// against the context tolerance.
bool approx_equal_below(const series &a, const series &b, const scalar &below, const numeric_context &ctx);

} // namespace hahn

#endif
