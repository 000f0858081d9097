#include <doctest.h>

#include <random>

#include <hahn/selftest/generators.hpp>
#include <hahn/series.hpp>

#include "helpers.hpp"

using namespace hahn;
using testing::c;
using testing::error_of;
using testing::q;
using testing::t_pow;

TEST_CASE("addition")
{
    CHECK((c(1) + t_pow(1)) + (-t_pow(1) + t_pow(2)) == c(1) + t_pow(2));
    const series a = c(3) + t_pow(1, 2);
    CHECK(a + series() == a);

    const series lhs = c(1) + series::big_o(q(3));
    const series r = lhs + t_pow(3);
    CHECK(r.terms().size() == 1);
    CHECK(*r.order() == q(3));
    CHECK(r == lhs);
}

TEST_CASE("multiplication")
{
    CHECK((c(1) + t_pow(1)) * (c(1) - t_pow(1)) == c(1) - t_pow(2));
    CHECK(series::monomial(q(3), q(2)) * series::monomial(q(5), q(1, 2)) == series::monomial(q(15), q(5, 2)));

    const series a = c(1) + t_pow(1) + series::big_o(q(2));
    const series r = a * (c(1) - t_pow(1));
    CHECK(r == c(1) + series::big_o(q(2)));
}

TEST_CASE("order bookkeeping in products")
{
    // (t^-1 + O(t)) * (t^2 + O(t^3)): orders 1 + 2 and 3 - 1
    const series a = t_pow(-1) + series::big_o(q(1));
    const series b = t_pow(2) + series::big_o(q(3));
    const series r = a * b;
    CHECK(*r.order() == q(2));
    CHECK(r.terms().size() == 1);
    CHECK(r.coeff_at(q(1)) == scalar(1));
}

TEST_CASE("inverse")
{
    const series geo = invert(c(1) - t_pow(1), q(3));
    CHECK(geo == c(1) + t_pow(1) + t_pow(2) + series::big_o(q(3)));
    CHECK((c(1) - t_pow(1)) * geo == c(1) + series::big_o(q(3)));

    CHECK(invert(series::monomial(q(2), q(1)), q(5)) == series::monomial(q(1, 2), q(-1)));
    CHECK(invert(c(1), q(7)) == c(1));

    CHECK(error_of([] { (void)invert(series(), q(3)); }) == "DivisionByZero");
    CHECK(error_of([] { (void)invert(series::big_o(q(3)), q(3)); }) == "NoLeadingTerm");
}

TEST_CASE("inverse with negative leading exponent")
{
    // a = t^-2 (1 + t): q = -2, delta reaches target + max(q, 0) = target.
    const series a = t_pow(-2) + t_pow(-1);
    const series inv = invert(a, q(4));
    const series prod = a * inv;
    REQUIRE(prod.order().has_value());
    CHECK_FALSE(order_less(prod.order(), q(4)));
    CHECK(prod.terms().size() == 1);
    CHECK(prod.coeff_at(q(0)) == scalar(1));
}

TEST_CASE("pow_int")
{
    const series a = c(1) + t_pow(1);
    CHECK(pow_int(a, 0, q(5)) == c(1));
    CHECK(pow_int(a, 3, q(5)) == a * a * a);
    CHECK(pow_int(t_pow(-1), -2, q(5)) == t_pow(2));
}

TEST_CASE("compare")
{
    CHECK(compare(series::monomial(q(5), q(1)), c(1)) == comparison::less);
    const series a = c(2) - t_pow(1, 3);
    CHECK(compare(a, a) == comparison::equal);
    const series b = c(1) + series::big_o(q(2));
    CHECK(compare(b, b) == comparison::ambiguous);
    CHECK(compare(t_pow(-1), c(1000)) == comparison::greater);
}

TEST_CASE("truncate")
{
    CHECK(truncate(c(1) + t_pow(1) + t_pow(2), q(2)) == c(1) + t_pow(1) + series::big_o(q(2)));
    CHECK(truncate(series(), q(5)) == series::big_o(q(5)));
    CHECK(error_of([] { (void)truncate(c(1) + series::big_o(q(1)), q(2)); }) == "PrecisionGain");
    CHECK(clip(c(1) + series::big_o(q(1)), q(2)) == c(1) + series::big_o(q(1)));
}

TEST_CASE("valuation")
{
    CHECK(*series::big_o(q(3)).valuation() == q(3));
    CHECK_FALSE(series().valuation().has_value());
    CHECK(*(t_pow(1, 2) + c(4)).valuation() == scalar(0));
}

TEST_CASE("float coefficients drop below tolerance")
{
    const auto fl = testing::float_ctx();
    const scalar one = promote(scalar(1), fl);
    const series a = series::constant(one) + t_pow(1);
    const series b = series::constant(-one);
    const series r = a + b;
    CHECK(r.terms().size() == 1);
    CHECK(r.coeff_at(q(1)) == scalar(1));
}

TEST_CASE("ring laws on random series")
{
    gen::rng_t rng(20261016);
    gen::series_shape shape;
    for (int i = 0; i < 200; ++i) {
        const series a = gen::exact_series(rng, shape);
        const series b = gen::exact_series(rng, shape);
        const series d = gen::exact_series(rng, shape);
        CHECK((a + b) + d == a + (b + d));
        CHECK(a + b == b + a);
        CHECK((a * b) * d == a * (b * d));
        CHECK(a * b == b * a);
        CHECK(a * (b + d) == a * b + a * d);
        CHECK((a - a).is_exact_zero());
    }
}

TEST_CASE("inverse contract on random series")
{
    gen::rng_t rng(7);
    gen::series_shape shape;
    shape.max_terms = 4;
    for (int i = 0; i < 100; ++i) {
        series a = gen::exact_series(rng, shape);
        const bool truncated = gen::uniform_int(rng, 0, 1) == 1;
        if (truncated) {
            const scalar top = a.terms().back().exponent + q(1);
            a = clip(a, top);
        }
        const scalar target = gen::rational(rng, 1, 6, 2);
        const scalar qa = a.terms().front().exponent;
        const series prod = a * invert(a, target);

        // delta >= min(target, omega_a - 2q). For q < 0 only omega_a - q is
        // knowable from a truncated input.
        order_t bound = target;
        if (a.order()) {
            bound = min_order(bound, *a.order() - qa - (raw_compare(qa, 0) < 0 ? scalar(0) : qa));
        }
        CHECK_FALSE(order_less(prod.order(), bound));
        REQUIRE_FALSE(prod.terms().empty());
        CHECK(prod.terms().front().exponent == scalar(0));
        CHECK(prod.terms().front().coeff == scalar(1));
        CHECK(prod.terms().size() == 1);
    }
}
