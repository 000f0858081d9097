#include <hahn/series.hpp>

#include <algorithm>

#include <hahn/error.hpp>

namespace hahn
{

namespace
{

bool same_exponent(const scalar &x, const scalar &y)
{
    if (x.is_exact() && y.is_exact()) {
        return x.exact() == y.exact();
    }
    return approx_eq(x, y);
}

bool less(const scalar &x, const scalar &y)
{
    return raw_compare(x, y) == std::strong_ordering::less;
}

// e >= omega, with float exponents within tolerance of omega counting as equal.
bool at_or_above(const scalar &e, const scalar &omega)
{
    return !less(e, omega) || same_exponent(e, omega);
}

} // namespace

order_t min_order(const order_t &a, const order_t &b)
{
    if (!a) {
        return b;
    }
    if (!b) {
        return a;
    }
    return min(*a, *b);
}

order_t shift_order(const order_t &a, const scalar &s)
{
    if (!a) {
        return std::nullopt;
    }
    return *a + s;
}

bool order_less(const order_t &a, const order_t &b)
{
    if (!a) {
        return false;
    }
    if (!b) {
        return true;
    }
    return less(*a, *b);
}

series series::constant(const scalar &c)
{
    return from_terms({term{scalar(0), c}});
}

series series::monomial(const scalar &coeff, const scalar &exponent)
{
    return from_terms({term{exponent, coeff}});
}

series series::t_power(const scalar &exponent)
{
    return monomial(scalar(1), exponent);
}

series series::big_o(const scalar &omega)
{
    return from_terms({}, omega);
}

series series::from_terms(std::vector<term> terms, order_t order)
{
    std::sort(terms.begin(), terms.end(),
              [](const term &x, const term &y) { return less(x.exponent, y.exponent); });

    series out;
    out.m_order = std::move(order);
    out.m_terms.reserve(terms.size());
    for (std::size_t i = 0; i < terms.size();) {
        scalar exponent = terms[i].exponent;
        scalar coeff = terms[i].coeff;
        std::size_t j = i + 1;
        for (; j < terms.size() && same_exponent(exponent, terms[j].exponent); ++j) {
            coeff += terms[j].coeff;
            if (!exponent.is_exact() && terms[j].exponent.is_exact()) {
                exponent = terms[j].exponent;
            }
        }
        i = j;
        if (is_negligible(coeff)) {
            continue;
        }
        if (out.m_order && at_or_above(exponent, *out.m_order)) {
            break;
        }
        out.m_terms.push_back(term{std::move(exponent), std::move(coeff)});
    }
    return out;
}

bool series::all_exact_scalars() const
{
    if (m_order && !m_order->is_exact()) {
        return false;
    }
    return std::all_of(m_terms.begin(), m_terms.end(),
                       [](const term &t) { return t.exponent.is_exact() && t.coeff.is_exact(); });
}

order_t series::valuation() const
{
    if (!m_terms.empty()) {
        return m_terms.front().exponent;
    }
    return m_order;
}

scalar series::coeff_at(const scalar &exponent) const
{
    for (const auto &t : m_terms) {
        if (same_exponent(t.exponent, exponent)) {
            return t.coeff;
        }
        if (less(exponent, t.exponent)) {
            break;
        }
    }
    return scalar(0);
}

series operator+(const series &a, const series &b)
{
    std::vector<term> all;
    all.reserve(a.terms().size() + b.terms().size());
    all.insert(all.end(), a.terms().begin(), a.terms().end());
    all.insert(all.end(), b.terms().begin(), b.terms().end());
    return series::from_terms(std::move(all), min_order(a.order(), b.order()));
}

series operator-(const series &a)
{
    std::vector<term> out;
    out.reserve(a.terms().size());
    for (const auto &t : a.terms()) {
        out.push_back(term{t.exponent, -t.coeff});
    }
    return series::from_terms(std::move(out), a.order());
}

series operator-(const series &a, const series &b)
{
    return a + (-b);
}

series operator*(const series &a, const series &b)
{
    if (a.is_exact_zero() || b.is_exact_zero()) {
        return series{};
    }
    const auto va = a.valuation();
    const auto vb = b.valuation();
    // Both are set: a series with no terms and infinite order is the exact zero.
    const order_t omega = min_order(shift_order(a.order(), *vb), shift_order(b.order(), *va));

    std::vector<term> out;
    out.reserve(a.terms().size() * b.terms().size());
    for (const auto &x : a.terms()) {
        for (const auto &y : b.terms()) {
            scalar e = x.exponent + y.exponent;
            if (omega && at_or_above(e, *omega)) {
                break;
            }
            out.push_back(term{std::move(e), x.coeff * y.coeff});
        }
    }
    return series::from_terms(std::move(out), omega);
}

series scale(const series &a, const scalar &c)
{
    std::vector<term> out;
    out.reserve(a.terms().size());
    for (const auto &t : a.terms()) {
        out.push_back(term{t.exponent, t.coeff * c});
    }
    return series::from_terms(std::move(out), a.order());
}

series shift(const series &a, const scalar &e)
{
    std::vector<term> out;
    out.reserve(a.terms().size());
    for (const auto &t : a.terms()) {
        out.push_back(term{t.exponent + e, t.coeff});
    }
    return series::from_terms(std::move(out), shift_order(a.order(), e));
}

series invert(const series &a, const scalar &target)
{
    if (a.terms().empty()) {
        if (a.is_exact()) {
            raise(error_kind::division_by_zero, "inverse of exact zero");
        }
        raise(error_kind::no_leading_term, "inverse of a series with no known leading term");
    }
    const scalar q = a.terms().front().exponent;
    const scalar c = a.terms().front().coeff;
    const scalar one_over_c = scalar(1) / c;

    // a = c t^q (1 + m)
    const series m = scale(shift(a, -q), one_over_c) - series::constant(scalar(1));
    if (m.is_exact_zero()) {
        return series::monomial(one_over_c, -q);
    }

    const scalar lift = less(q, scalar(0)) ? -q : scalar(0);
    const order_t result_order = min_order(target + lift, shift_order(a.order(), -q - q));
    // Precision needed for (1 + m)^-1 so that t^-q (1 + m)^-1 reaches result_order.
    const scalar unit_order = *result_order + q;

    const series neg_m = -m;
    series sum = series::from_terms({term{scalar(0), scalar(1)}}, unit_order);
    series power = sum;
    while (true) {
        power = clip(power * neg_m, unit_order);
        if (power.terms().empty()) {
            break;
        }
        sum = sum + power;
    }
    return scale(shift(clip(sum, unit_order), -q), one_over_c);
}

series pow_int(const series &a, long n, const scalar &target)
{
    if (n < 0) {
        return invert(pow_int(a, -n, target), target);
    }
    series result = series::constant(scalar(1));
    series base = a;
    auto k = static_cast<unsigned long>(n);
    while (k != 0) {
        if ((k & 1ul) != 0) {
            result = result * base;
        }
        k >>= 1;
        if (k != 0) {
            base = base * base;
        }
    }
    return result;
}

series truncate(const series &a, const scalar &omega)
{
    if (a.order() && less(*a.order(), omega) && !same_exponent(*a.order(), omega)) {
        raise(error_kind::precision_gain, "cannot truncate at " + to_text(omega) + " above the known order "
                                              + to_text(*a.order()));
    }
    return series::from_terms(a.terms(), omega);
}

series clip(const series &a, const scalar &omega)
{
    return series::from_terms(a.terms(), min_order(a.order(), omega));
}

comparison compare(const series &a, const series &b)
{
    const series d = a - b;
    if (d.terms().empty()) {
        return d.is_exact() ? comparison::equal : comparison::ambiguous;
    }
    return sgn(d.terms().front().coeff) > 0 ? comparison::greater : comparison::less;
}

bool operator==(const series &a, const series &b)
{
    if (a.order().has_value() != b.order().has_value() || (a.order() && !(*a.order() == *b.order()))) {
        return false;
    }
    return std::equal(a.terms().begin(), a.terms().end(), b.terms().begin(), b.terms().end(),
                      [](const term &x, const term &y) { return x.exponent == y.exponent && x.coeff == y.coeff; });
}

bool approx_equal_below(const series &a, const series &b, const scalar &below, const numeric_context &ctx)
{
    for (const auto *s : {&a, &b}) {
        if (s->order() && less(*s->order(), below) && !same_exponent(*s->order(), below)) {
            return false;
        }
    }
    const auto &x = a.terms();
    const auto &y = b.terms();
    std::size_t i = 0, j = 0;
    const scalar zero(0);
    while (i < x.size() || j < y.size()) {
        const bool take_x = i < x.size();
        const bool take_y = j < y.size();
        if (take_x && take_y && same_exponent(x[i].exponent, y[j].exponent)) {
            if (at_or_above(x[i].exponent, below)) {
                break;
            }
            if (!approx_eq(x[i].coeff, y[j].coeff, ctx)) {
                return false;
            }
            ++i;
            ++j;
        } else if (take_x && (!take_y || less(x[i].exponent, y[j].exponent))) {
            if (at_or_above(x[i].exponent, below)) {
                i = x.size();
                continue;
            }
            if (!approx_eq(x[i].coeff, zero, ctx)) {
                return false;
            }
            ++i;
        } else {
            if (at_or_above(y[j].exponent, below)) {
                j = y.size();
                continue;
            }
            if (!approx_eq(y[j].coeff, zero, ctx)) {
                return false;
            }
            ++j;
        }
    }
    return true;
}

} // namespace hahn
