#ifndef HAHN_TESTS_HELPERS_HPP
#define HAHN_TESTS_HELPERS_HPP

#include <string>

#include <hahn/error.hpp>
#include <hahn/scalar.hpp>
#include <hahn/series.hpp>

namespace testing
{

inline hahn::numeric_context exact_ctx()
{
    return {};
}

inline hahn::numeric_context float_ctx(unsigned bits = 256)
{
    hahn::numeric_context c;
    c.arithmetic = hahn::mode::floating;
    c.precision_bits = bits;
    return c;
}

// Exact rational value of a scalar (floats are dyadic rationals).
inline mpq_class to_q(const hahn::scalar &x)
{
    if (x.is_exact()) {
        return x.exact();
    }
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), x.flt().get());
    return q;
}

inline hahn::scalar q(long num, long den = 1)
{
    return hahn::scalar::rational(num, den);
}

inline hahn::series t_pow(long num, long den = 1)
{
    return hahn::series::t_power(q(num, den));
}

inline hahn::series c(long num, long den = 1)
{
    return hahn::series::constant(q(num, den));
}

// Agreement within tau on every exponent both series know.
inline bool agree(const hahn::series &a, const hahn::series &b, const hahn::numeric_context &ctx)
{
    const auto below = hahn::min_order(hahn::min_order(a.order(), b.order()), hahn::scalar(1000));
    return hahn::approx_equal_below(a, b, *below, ctx);
}

// Kind of the hahn::error thrown by f, or nothing.
template <class F>
std::string error_of(F &&f)
{
    try {
        f();
    } catch (const hahn::error &e) {
        return std::string(hahn::to_string(e.kind()));
    }
    return "none";
}

} // namespace testing

#endif
