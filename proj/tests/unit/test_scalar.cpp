#include <doctest.h>

#include <hahn/scalar.hpp>

#include "helpers.hpp"
#include "real_oracle.hpp"

using namespace hahn;
using testing::error_of;
using testing::q;
using testing::to_q;

namespace
{

// A correctly rounded P-bit value lies within 2^-P relative of the truth.
void check_enclosed(const scalar &value, const oracle::enclosure &truth, long bits)
{
    REQUIRE_FALSE(value.is_exact());
    CHECK(value.precision() == bits);
    const mpq_class v = to_q(value);
    const mpq_class slack = abs(v) * oracle::pow2(-bits);
    CHECK(v >= truth.lo - slack);
    CHECK(v <= truth.hi + slack);
}

} // namespace

TEST_CASE("exact rational arithmetic")
{
    CHECK(q(2, 3) + q(1, 3) == scalar(1));
    CHECK(sgn(scalar(-7)) == -1);
    CHECK(sgn(scalar(0)) == 0);
    CHECK((q(1, 2) * q(2, 3)).exact() == mpq_class(1, 3));
    CHECK(error_of([] { (void)(scalar(1) / scalar(0)); }) == "DivisionByZero");
    CHECK(to_integer(q(6, 3)) == 2L);
    CHECK_FALSE(to_integer(q(1, 2)).has_value());
}

TEST_CASE("float division is correctly rounded")
{
    const auto ctx = testing::float_ctx();
    const scalar third = promote(scalar(1), ctx) / promote(scalar(3), ctx);
    const mpq_class err = abs(to_q(third) - mpq_class(1, 3));
    CHECK(err <= mpq_class(1, 3) * oracle::pow2(-256));
}

TEST_CASE("mixed operands promote to the float precision")
{
    const auto ctx = testing::float_ctx(128);
    const scalar x = promote(scalar(1), ctx) + q(1, 3);
    CHECK(x.precision() == 128);
}

TEST_CASE("exp and log against the rational oracle")
{
    const auto ctx = testing::float_ctx();
    check_enclosed(exp_scalar(promote(scalar(1), ctx), ctx), oracle::exp_enclosure(1, 320), 256);
    check_enclosed(exp_scalar(promote(scalar(-2), ctx), ctx), oracle::exp_enclosure(-2, 320), 256);
    check_enclosed(log_scalar(promote(scalar(2), ctx), ctx), oracle::log2_enclosure(320), 256);

    // Float mode promotes exact arguments.
    check_enclosed(exp_scalar(scalar(1), ctx), oracle::exp_enclosure(1, 320), 256);

    // Frozen leading digits.
    CHECK(to_text(exp_scalar(scalar(1), ctx)).rfind("~2.718281828459045235360287", 0) == 0);
    CHECK(to_text(exp_scalar(scalar(-2), ctx)).rfind("~0.1353352832366126918939994", 0) == 0);
    CHECK(to_text(log_scalar(scalar(2), ctx)).rfind("~0.6931471805599453094172321", 0) == 0);
}

TEST_CASE("exp and log special values and errors")
{
    const auto ex = testing::exact_ctx();
    const auto fl = testing::float_ctx();
    CHECK(exp_scalar(scalar(0), ex) == scalar(1));
    CHECK(exp_scalar(scalar(0), ex).is_exact());
    CHECK(log_scalar(scalar(1), ex) == scalar(0));
    CHECK(error_of([&] { (void)exp_scalar(scalar(1), ex); }) == "ModeError");
    CHECK(error_of([&] { (void)log_scalar(scalar(2), ex); }) == "ModeError");
    CHECK(error_of([&] { (void)log_scalar(scalar(0), fl); }) == "DomainError");
    CHECK(error_of([&] { (void)log_scalar(scalar(-1), fl); }) == "DomainError");

    CHECK(approx_eq(log_scalar(exp_scalar(scalar(3), fl), fl), scalar(3), fl));
    CHECK(approx_eq(exp_scalar(log_scalar(scalar(5), fl), fl), scalar(5), fl));
}

TEST_CASE("tolerance and approximate equality")
{
    const auto fl = testing::float_ctx();
    // tau = 2^-192 at P = 256
    CHECK(to_q(fl.tolerance()) == oracle::pow2(-192));
    CHECK(approx_eq(q(1, 3), q(1, 3)));
    CHECK_FALSE(approx_eq(q(1, 3), q(1, 4)));

    const scalar tiny = promote(scalar(oracle::pow2(-256)), fl);
    CHECK(approx_eq(promote(scalar(0), fl), tiny, fl));
    CHECK(is_negligible(tiny));
    CHECK(error_of([&] { (void)sgn(tiny); }) == "AmbiguousSign");
    CHECK_FALSE(approx_eq(promote(scalar(0), fl), promote(scalar(oracle::pow2(-100)), fl), fl));
}

TEST_CASE("context validation")
{
    numeric_context c = testing::float_ctx(32);
    CHECK(error_of([&] { c.validate(); }) == "DomainError");
    c.precision_bits = 64;
    c.truncation = 0;
    CHECK(error_of([&] { c.validate(); }) == "DomainError");
    c.truncation = 1;
    CHECK(error_of([&] { c.validate(); }) == "none");
}

TEST_CASE("text form round trip")
{
    const auto fl = testing::float_ctx();
    CHECK(to_text(q(-3, 4)) == "-3/4");
    CHECK(to_text(scalar(7)) == "7");
    CHECK(parse_scalar("-3/4", fl) == q(-3, 4));
    CHECK(parse_scalar("0.25", fl) == q(1, 4));
    CHECK(parse_scalar("-1.5e3", fl) == scalar(-1500));
    CHECK(parse_scalar("2e-2", fl) == q(1, 50));

    const scalar e = exp_scalar(scalar(1), fl);
    const scalar back = parse_scalar(to_text(e), fl);
    CHECK_FALSE(back.is_exact());
    CHECK(approx_eq(back, e, fl));

    CHECK(error_of([&] { (void)parse_scalar("1/0", fl); }) == "ParseError");
    CHECK(error_of([&] { (void)parse_scalar("abc", fl); }) == "ParseError");
    CHECK(error_of([&] { (void)parse_scalar("", fl); }) == "ParseError");
}
