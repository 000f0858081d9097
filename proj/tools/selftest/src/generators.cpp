#include <hahn/selftest/generators.hpp>

#include <set>

namespace hahn::gen
{

long uniform_int(rng_t &rng, long lo, long hi)
{
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

scalar rational(rng_t &rng, long lo, long hi, long max_den)
{
    const long den = uniform_int(rng, 1, max_den);
    return scalar::rational(uniform_int(rng, lo * den, hi * den), den);
}

scalar nonzero_rational(rng_t &rng, long lo, long hi, long max_den)
{
    while (true) {
        auto x = rational(rng, lo, hi, max_den);
        if (!is_negligible(x)) {
            return x;
        }
    }
}

scalar real(rng_t &rng, double lo, double hi, const numeric_context &ctx)
{
    // 128 random bits of mantissa in [0, 1), then affine map; exact in mpq.
    mpz_class bits = 0;
    for (int i = 0; i < 2; ++i) {
        bits <<= 64;
        bits += mpz_class(std::to_string(rng()));
    }
    mpz_class denom = 1;
    denom <<= 128;
    const mpq_class unit(bits, denom);
    const mpq_class value = mpq_class(lo) + unit * (mpq_class(hi) - mpq_class(lo));
    return promote(scalar(value), ctx);
}

namespace
{

std::vector<scalar> distinct_exponents(rng_t &rng, int count, long lo, long hi, long den)
{
    std::vector<scalar> out;
    std::set<mpq_class> seen;
    int attempts = 0;
    while (static_cast<int>(out.size()) < count && attempts++ < 1000) {
        auto e = rational(rng, lo, hi, den);
        if (seen.insert(e.exact()).second) {
            out.push_back(e);
        }
    }
    return out;
}

} // namespace

series exact_series(rng_t &rng, const series_shape &shape)
{
    const int n = static_cast<int>(uniform_int(rng, shape.min_terms, shape.max_terms));
    std::vector<term> terms;
    for (auto &e : distinct_exponents(rng, n, shape.exp_lo, shape.exp_hi, shape.exp_den)) {
        terms.push_back(term{e, nonzero_rational(rng, shape.coeff_lo, shape.coeff_hi, shape.coeff_den)});
    }
    return series::from_terms(std::move(terms));
}

series positive_series(rng_t &rng, const series_shape &shape)
{
    auto s = exact_series(rng, shape);
    if (s.terms().empty() || sgn(s.terms().front().coeff) < 0) {
        return -s;
    }
    return s;
}

series float_coeff_series(rng_t &rng, const series_shape &shape, const numeric_context &ctx)
{
    const auto s = exact_series(rng, shape);
    std::vector<term> terms;
    for (const auto &t : s.terms()) {
        terms.push_back(term{t.exponent, promote(t.coeff, ctx)});
    }
    return series::from_terms(std::move(terms), s.order());
}

series o_element(rng_t &rng, const series_shape &shape)
{
    auto s = shape;
    s.exp_lo = 0;
    return exact_series(rng, s);
}

oclass oclass_value(rng_t &rng, std::uint32_t max_dim, std::int64_t chi_bound)
{
    const auto dim = static_cast<std::uint32_t>(uniform_int(rng, 0, max_dim));
    if (dim == 0) {
        return {0, uniform_int(rng, 0, chi_bound)};
    }
    return {dim, uniform_int(rng, -chi_bound, chi_bound)};
}

lambda_class lambda_value(rng_t &rng, std::uint32_t top, std::uint32_t max_dim, std::int64_t chi_bound,
                          bool exact_top)
{
    const auto n = exact_top ? top : static_cast<std::uint32_t>(uniform_int(rng, 0, top));
    lambda_class u;
    for (std::uint32_t i = 0; i < n; ++i) {
        if (uniform_int(rng, 0, 3) != 0) {
            u.set(i, oclass_value(rng, max_dim, chi_bound));
        }
    }
    oclass head;
    do {
        head = oclass_value(rng, max_dim, chi_bound);
    } while (head.is_zero());
    u.set(n, head);
    return u;
}

} // namespace hahn::gen
