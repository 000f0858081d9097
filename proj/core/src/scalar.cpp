#include <hahn/scalar.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <memory>

#include <hahn/error.hpp>

namespace hahn
{

// ---------------------------------------------------------------- big_float

big_float::big_float(mpfr_prec_t prec)
{
    mpfr_init2(m_value, prec);
    mpfr_set_zero(m_value, 1);
}

big_float::big_float(const mpq_class &q, mpfr_prec_t prec)
{
    mpfr_init2(m_value, prec);
    mpfr_set_q(m_value, q.get_mpq_t(), MPFR_RNDN);
}

big_float::big_float(const big_float &other)
{
    mpfr_init2(m_value, other.precision());
    mpfr_set(m_value, other.m_value, MPFR_RNDN);
}

big_float::big_float(big_float &&other) noexcept
{
    mpfr_init2(m_value, MPFR_PREC_MIN);
    mpfr_swap(m_value, other.m_value);
}

big_float &big_float::operator=(const big_float &other)
{
    if (this != &other) {
        mpfr_set_prec(m_value, other.precision());
        mpfr_set(m_value, other.m_value, MPFR_RNDN);
    }
    return *this;
}

big_float &big_float::operator=(big_float &&other) noexcept
{
    mpfr_swap(m_value, other.m_value);
    return *this;
}

big_float::~big_float()
{
    mpfr_clear(m_value);
}

namespace
{

void check_finite(const big_float &f)
{
    if (!mpfr_number_p(f.get())) {
        raise(error_kind::domain_error, "floating-point result is not finite");
    }
}

unsigned long tolerance_exponent(mpfr_prec_t prec)
{
    return (3ul * static_cast<unsigned long>(prec) + 3ul) / 4ul;
}

// Borrow an mpfr view of a scalar at (at least) the requested precision
// without copying when the scalar already is a float of that precision.
class float_view
{
public:
    float_view(const scalar &s, mpfr_prec_t prec)
    {
        if (!s.is_exact() && s.precision() == prec) {
            m_ptr = s.flt().get();
        } else {
            m_tmp = std::make_unique<big_float>(s.to_float(prec));
            m_ptr = m_tmp->get();
        }
    }
    mpfr_srcptr get() const
    {
        return m_ptr;
    }

private:
    std::unique_ptr<big_float> m_tmp;
    mpfr_srcptr m_ptr = nullptr;
};

mpfr_prec_t joint_precision(const scalar &x, const scalar &y)
{
    return std::max(x.precision(), y.precision());
}

template <typename ExactOp, typename FloatOp>
scalar binary(const scalar &x, const scalar &y, ExactOp eop, FloatOp fop)
{
    if (x.is_exact() && y.is_exact()) {
        return scalar(mpq_class(eop(x.exact(), y.exact())));
    }
    const auto prec = joint_precision(x, y);
    const float_view a(x, prec), b(y, prec);
    big_float r(prec);
    fop(r.get(), a.get(), b.get(), MPFR_RNDN);
    check_finite(r);
    return scalar(std::move(r));
}

} // namespace

// -------------------------------------------------------- numeric_context

scalar tolerance_for(mpfr_prec_t prec)
{
    big_float t(prec);
    mpfr_set_ui_2exp(t.get(), 1, -static_cast<mpfr_exp_t>(tolerance_exponent(prec)), MPFR_RNDN);
    return scalar(std::move(t));
}

scalar numeric_context::tolerance() const
{
    return tolerance_for(static_cast<mpfr_prec_t>(precision_bits));
}

scalar numeric_context::default_order() const
{
    return scalar(truncation);
}

void numeric_context::validate() const
{
    if (precision_bits < 64) {
        raise(error_kind::domain_error, "precision must be at least 64 bits");
    }
    if (sgn(truncation) <= 0) {
        raise(error_kind::domain_error, "truncation order must be positive");
    }
}

// ------------------------------------------------------------------ scalar

scalar::scalar(mpq_class q) : m_value(std::move(q))
{
    auto &v = std::get<mpq_class>(m_value);
    if (v.get_den() == 0) {
        raise(error_kind::division_by_zero, "rational with zero denominator");
    }
    v.canonicalize();
}

scalar scalar::rational(long num, long den)
{
    if (den == 0) {
        raise(error_kind::division_by_zero, "rational with zero denominator");
    }
    return scalar(mpq_class(num, den));
}

mpfr_prec_t scalar::precision() const noexcept
{
    return is_exact() ? 0 : flt().precision();
}

big_float scalar::to_float(mpfr_prec_t prec) const
{
    if (is_exact()) {
        return big_float(exact(), prec);
    }
    big_float r(prec);
    mpfr_set(r.get(), flt().get(), MPFR_RNDN);
    return r;
}

double scalar::to_double() const
{
    return is_exact() ? exact().get_d() : mpfr_get_d(flt().get(), MPFR_RNDN);
}

scalar operator+(const scalar &x, const scalar &y)
{
    return binary(
        x, y, [](const mpq_class &a, const mpq_class &b) { return a + b; }, mpfr_add);
}

scalar operator-(const scalar &x, const scalar &y)
{
    return binary(
        x, y, [](const mpq_class &a, const mpq_class &b) { return a - b; }, mpfr_sub);
}

scalar operator*(const scalar &x, const scalar &y)
{
    return binary(
        x, y, [](const mpq_class &a, const mpq_class &b) { return a * b; }, mpfr_mul);
}

scalar operator/(const scalar &x, const scalar &y)
{
    if (y.is_exact() ? sgn(y.exact()) == 0 : is_negligible(y)) {
        raise(error_kind::division_by_zero, "division by zero");
    }
    return binary(
        x, y, [](const mpq_class &a, const mpq_class &b) { return a / b; }, mpfr_div);
}

scalar operator-(const scalar &x)
{
    if (x.is_exact()) {
        return scalar(mpq_class(-x.exact()));
    }
    big_float r(x.precision());
    mpfr_neg(r.get(), x.flt().get(), MPFR_RNDN);
    return scalar(std::move(r));
}

bool operator==(const scalar &x, const scalar &y)
{
    return raw_compare(x, y) == std::strong_ordering::equal;
}

scalar abs(const scalar &x)
{
    if (x.is_exact()) {
        return scalar(mpq_class(::abs(x.exact())));
    }
    big_float r(x.precision());
    mpfr_abs(r.get(), x.flt().get(), MPFR_RNDN);
    return scalar(std::move(r));
}

bool is_negligible(const scalar &x)
{
    if (x.is_exact()) {
        return sgn(x.exact()) == 0;
    }
    const auto tau = tolerance_for(x.precision());
    return mpfr_cmpabs(x.flt().get(), tau.flt().get()) <= 0;
}

int sgn(const scalar &x)
{
    if (x.is_exact()) {
        return sgn(x.exact());
    }
    if (is_negligible(x)) {
        raise(error_kind::ambiguous_sign, "sign of " + to_text(x) + " is below the tolerance");
    }
    return mpfr_sgn(x.flt().get()) > 0 ? 1 : -1;
}

std::strong_ordering raw_compare(const scalar &x, const scalar &y)
{
    int c = 0;
    if (x.is_exact() && y.is_exact()) {
        c = cmp(x.exact(), y.exact());
    } else if (!x.is_exact() && !y.is_exact()) {
        c = mpfr_cmp(x.flt().get(), y.flt().get());
    } else if (x.is_exact()) {
        c = -mpfr_cmp_q(y.flt().get(), x.exact().get_mpq_t());
    } else {
        c = mpfr_cmp_q(x.flt().get(), y.exact().get_mpq_t());
    }
    return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

namespace
{

bool approx_eq_with(const scalar &x, const scalar &y, const scalar &tau)
{
    const auto prec = std::max({x.precision(), y.precision(), tau.precision()});
    const float_view a(x, prec), b(y, prec), t(tau, prec);
    big_float diff(prec), scale(prec);
    mpfr_sub(diff.get(), a.get(), b.get(), MPFR_RNDN);
    mpfr_abs(diff.get(), diff.get(), MPFR_RNDN);
    mpfr_set_ui(scale.get(), 1, MPFR_RNDN);
    if (mpfr_cmpabs(a.get(), scale.get()) > 0) {
        mpfr_abs(scale.get(), a.get(), MPFR_RNDN);
    }
    if (mpfr_cmpabs(b.get(), scale.get()) > 0) {
        mpfr_abs(scale.get(), b.get(), MPFR_RNDN);
    }
    mpfr_mul(scale.get(), scale.get(), t.get(), MPFR_RNDU);
    return mpfr_cmp(diff.get(), scale.get()) <= 0;
}

} // namespace

bool approx_eq(const scalar &x, const scalar &y)
{
    if (x.is_exact() && y.is_exact()) {
        return x.exact() == y.exact();
    }
    return approx_eq_with(x, y, tolerance_for(joint_precision(x, y)));
}

bool approx_eq(const scalar &x, const scalar &y, const numeric_context &ctx)
{
    if (x.is_exact() && y.is_exact()) {
        return x.exact() == y.exact();
    }
    return approx_eq_with(x, y, ctx.tolerance());
}

scalar promote(const scalar &x, const numeric_context &ctx)
{
    if (!x.is_exact()) {
        return x;
    }
    return scalar(x.to_float(static_cast<mpfr_prec_t>(ctx.precision_bits)));
}

std::optional<long> to_integer(const scalar &x)
{
    if (!x.is_exact() || x.exact().get_den() != 1 || !x.exact().get_num().fits_slong_p()) {
        return std::nullopt;
    }
    return x.exact().get_num().get_si();
}

scalar min(const scalar &x, const scalar &y)
{
    return raw_compare(y, x) == std::strong_ordering::less ? y : x;
}

scalar max(const scalar &x, const scalar &y)
{
    return raw_compare(y, x) == std::strong_ordering::greater ? y : x;
}

namespace
{

void require_floating(const scalar &x, const numeric_context &ctx, const char *what)
{
    if (x.is_exact() && ctx.arithmetic == mode::exact) {
        raise(error_kind::mode_error,
              std::string(what) + "(" + to_text(x) + ") is irrational; use floating mode");
    }
}

} // namespace

scalar exp_scalar(const scalar &x, const numeric_context &ctx)
{
    if (x.is_exact() && sgn(x.exact()) == 0) {
        return scalar(1);
    }
    require_floating(x, ctx, "exp");
    const auto f = promote(x, ctx);
    big_float r(f.precision());
    mpfr_exp(r.get(), f.flt().get(), MPFR_RNDN);
    check_finite(r);
    if (mpfr_sgn(r.get()) <= 0) {
        raise(error_kind::domain_error, "exp underflowed to zero");
    }
    return scalar(std::move(r));
}

scalar log_scalar(const scalar &x, const numeric_context &ctx)
{
    if (x.is_exact()) {
        if (sgn(x.exact()) <= 0) {
            raise(error_kind::domain_error, "log of non-positive " + to_text(x));
        }
        if (x.exact() == 1) {
            return scalar(0);
        }
    } else if (is_negligible(x) || mpfr_sgn(x.flt().get()) < 0) {
        raise(error_kind::domain_error, "log of non-positive " + to_text(x));
    }
    require_floating(x, ctx, "log");
    const auto f = promote(x, ctx);
    big_float r(f.precision());
    mpfr_log(r.get(), f.flt().get(), MPFR_RNDN);
    check_finite(r);
    return scalar(std::move(r));
}

// -------------------------------------------------------------------- text

std::string to_text(const scalar &x)
{
    if (x.is_exact()) {
        return x.exact().get_str();
    }
    // Enough significant digits for the decimal form to round-trip.
    const auto digits =
        static_cast<int>(std::ceil(static_cast<double>(x.precision()) * 0.30102999566398120)) + 1;
    char *buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rg", digits, x.flt().get());
    std::string out = "~";
    out += buf;
    mpfr_free_str(buf);
    return out;
}

namespace
{

[[noreturn]] void bad_scalar(std::string_view text)
{
    raise(error_kind::parse_error, "malformed scalar '" + std::string(text) + "'");
}

bool all_digits(std::string_view s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

// [+-]digits[.digits][(e|E)[+-]digits] as an exact rational.
mpq_class parse_decimal(std::string_view text)
{
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    long exp10 = 0;
    if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        auto es = s.substr(e + 1);
        bool eneg = false;
        if (!es.empty() && (es.front() == '+' || es.front() == '-')) {
            eneg = es.front() == '-';
            es.remove_prefix(1);
        }
        if (!all_digits(es) || es.size() > 6) {
            bad_scalar(text);
        }
        exp10 = std::stol(std::string(es));
        if (eneg) {
            exp10 = -exp10;
        }
        s = s.substr(0, e);
    }
    std::string digits;
    if (const auto dot = s.find('.'); dot != std::string_view::npos) {
        const auto ip = s.substr(0, dot);
        const auto fp = s.substr(dot + 1);
        if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp))) {
            bad_scalar(text);
        }
        digits = std::string(ip) + std::string(fp);
        exp10 -= static_cast<long>(fp.size());
    } else {
        if (!all_digits(s)) {
            bad_scalar(text);
        }
        digits = std::string(s);
    }
    mpz_class num(digits, 10);
    mpz_class pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exp10)));
    mpq_class q = exp10 >= 0 ? mpq_class(num * pow10) : mpq_class(num, pow10);
    q.canonicalize();
    return negative ? mpq_class(-q) : q;
}

} // namespace

scalar parse_scalar(std::string_view text, const numeric_context &ctx)
{
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())) != 0) {
        text.remove_prefix(1);
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())) != 0) {
        text.remove_suffix(1);
    }
    if (text.empty()) {
        bad_scalar(text);
    }
    if (text.front() == '~') {
        const std::string body(text.substr(1));
        big_float f(static_cast<mpfr_prec_t>(ctx.precision_bits));
        if (body.empty()) {
            bad_scalar(text);
        }
        char *end = nullptr;
        mpfr_strtofr(f.get(), body.c_str(), &end, 10, MPFR_RNDN);
        if (end != body.c_str() + body.size()) {
            bad_scalar(text);
        }
        check_finite(f);
        return scalar(std::move(f));
    }
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        auto num = text.substr(0, slash);
        const auto den = text.substr(slash + 1);
        bool negative = false;
        if (!num.empty() && (num.front() == '+' || num.front() == '-')) {
            negative = num.front() == '-';
            num.remove_prefix(1);
        }
        if (!all_digits(num) || !all_digits(den)) {
            bad_scalar(text);
        }
        mpz_class n(std::string(num), 10), d(std::string(den), 10);
        if (d == 0) {
            bad_scalar(text);
        }
        mpq_class q(n, d);
        q.canonicalize();
        return scalar(negative ? mpq_class(-q) : q);
    }
    return scalar(parse_decimal(text));
}

} // namespace hahn
