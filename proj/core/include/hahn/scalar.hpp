#ifndef HAHN_SCALAR_HPP
#define HAHN_SCALAR_HPP

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>
#include <mpfr.h>

namespace hahn
{

// RAII owner of an mpfr_t. Values are always finite; constructors that would
// produce NaN or infinity throw.
class big_float
{
public:
    explicit big_float(mpfr_prec_t prec);
    big_float(const mpq_class &q, mpfr_prec_t prec);
    big_float(const big_float &other);
    big_float(big_float &&other) noexcept;
    big_float &operator=(const big_float &other);
    big_float &operator=(big_float &&other) noexcept;
    ~big_float();

    mpfr_ptr get() noexcept
    {
        return m_value;
    }
    mpfr_srcptr get() const noexcept
    {
        return m_value;
    }
    mpfr_prec_t precision() const noexcept
    {
        return mpfr_get_prec(m_value);
    }

private:
    mpfr_t m_value;
};

enum class mode { exact, floating };

class scalar;

// Precision, tolerance and truncation policy. Passed explicitly; there is no
// global context.
struct numeric_context {
    mode arithmetic = mode::exact;
    unsigned precision_bits = 256;
    // Default truncation order used when an operation must cut a series.
    mpq_class truncation = 32;

    // 2^(-ceil(3P/4)).
    scalar tolerance() const;
    scalar default_order() const;
    // Throws domain_error unless P >= 64 and the truncation order is positive.
    void validate() const;
};

// Tolerance for a float of the given precision, 2^(-ceil(3P/4)).
scalar tolerance_for(mpfr_prec_t prec);

// Two-backend number: an exact normalized rational, or a finite binary float
// of some precision. Immutable in practice; all operations return new values.
class scalar
{
public:
    scalar() : m_value(mpq_class(0)) {}
    scalar(long v) : m_value(mpq_class(v)) {}
    scalar(int v) : m_value(mpq_class(v)) {}
    scalar(mpq_class q);
    scalar(big_float f) : m_value(std::move(f)) {}

    static scalar rational(long num, long den);

    bool is_exact() const noexcept
    {
        return std::holds_alternative<mpq_class>(m_value);
    }
    const mpq_class &exact() const
    {
        return std::get<mpq_class>(m_value);
    }
    const big_float &flt() const
    {
        return std::get<big_float>(m_value);
    }
    // 0 for exact values.
    mpfr_prec_t precision() const noexcept;

    // Converts (or re-rounds) to a float of the given precision.
    big_float to_float(mpfr_prec_t prec) const;
    double to_double() const;

    friend scalar operator+(const scalar &x, const scalar &y);
    friend scalar operator-(const scalar &x, const scalar &y);
    friend scalar operator*(const scalar &x, const scalar &y);
    friend scalar operator/(const scalar &x, const scalar &y);
    friend scalar operator-(const scalar &x);

    scalar &operator+=(const scalar &y)
    {
        return *this = *this + y;
    }
    scalar &operator-=(const scalar &y)
    {
        return *this = *this - y;
    }
    scalar &operator*=(const scalar &y)
    {
        return *this = *this * y;
    }

    // Exact value equality (floats compare bit for bit; mixed compares the
    // represented values).
    friend bool operator==(const scalar &x, const scalar &y);

private:
    std::variant<mpq_class, big_float> m_value;
};

scalar abs(const scalar &x);

// -1, 0 or +1. Throws ambiguous_sign for a float with |x| <= tau.
int sgn(const scalar &x);

// Total order on represented values, no tolerance. Used for sorting.
std::strong_ordering raw_compare(const scalar &x, const scalar &y);

// Exact: x == 0. Float: |x| <= tau at the value's own precision.
bool is_negligible(const scalar &x);

// Exact/exact compares exactly; otherwise |x-y| <= tau * max(1, |x|, |y|).
// The context-free overload takes tau from the widest float operand.
bool approx_eq(const scalar &x, const scalar &y);
bool approx_eq(const scalar &x, const scalar &y, const numeric_context &ctx);

// Promotes exact values to floats at the context precision.
scalar promote(const scalar &x, const numeric_context &ctx);

std::optional<long> to_integer(const scalar &x);

scalar min(const scalar &x, const scalar &y);
scalar max(const scalar &x, const scalar &y);

// Correctly rounded (MPFR), so the relative error is at most 2^(-P+1).
// exp(exact 0) = exact 1; any other exact argument needs floating mode.
scalar exp_scalar(const scalar &x, const numeric_context &ctx);
// log(exact 1) = exact 0; x <= 0 is a domain error.
scalar log_scalar(const scalar &x, const numeric_context &ctx);

// Text form: "p/q" or an integer for exact values, "~<decimal>" for floats.
std::string to_text(const scalar &x);
// Accepts the text form plus exact decimals ("0.25", "-1.5e3").
scalar parse_scalar(std::string_view text, const numeric_context &ctx);

} // namespace hahn

#endif
