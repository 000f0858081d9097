#include <doctest.h>

#include <hahn/euler.hpp>
#include <hahn/selftest/generators.hpp>

#include "helpers.hpp"

using namespace hahn;
using testing::error_of;

namespace
{

lambda_class lam(std::map<std::uint32_t, oclass> levels)
{
    return lambda_class(std::move(levels));
}

} // namespace

TEST_CASE("cell measures")
{
    CHECK(measure(cell_expr::named(cell_expr::kind::q)) == oclass(2, 2));
    CHECK(q_class() == oclass(2, 2));
    CHECK(measure(cell_expr::point()) == oclass(0, 1));
    CHECK(measure(cell_expr::prod(cell_expr::open_interval(), cell_expr::open_interval())) == oclass(2, 1));
    CHECK(measure(cell_expr::named(cell_expr::kind::lambda)) == oclass(2, 4));
    CHECK(measure(parse_cell_expr("Prod(OpenInterval, DisjUnion(Point, PosRay))")) == oclass(2, 0));
    CHECK(measure(parse_cell_expr(" Q ")) == oclass(2, 2));
    CHECK(error_of([] { (void)parse_cell_expr("Prod(Point"); }) == "ParseError");
    CHECK(error_of([] { (void)parse_cell_expr("Circle"); }) == "ParseError");
}

TEST_CASE("class arithmetic")
{
    CHECK(oclass(0, 3) + oclass(2, -5) == oclass(2, -2));
    CHECK(oclass(1, 7) + oclass::zero() == oclass(1, 7));
    CHECK(oclass(0, 2) + oclass(0, 3) == oclass(0, 5));
    CHECK(oclass(2, -5) * oclass(3, 2) == oclass(5, -10));
    CHECK(oclass(3, -4) * oclass::point() == oclass(3, -4));
    CHECK(oclass(1, -1) * oclass(1, -1) == oclass(2, 1));
    CHECK(oclass(4, 9) * oclass::zero() == oclass::zero());
    // A positive-dimensional class with chi 0 is not the empty class.
    CHECK_FALSE(oclass(1, 0).is_zero());
    CHECK(error_of([] { (void)oclass(0, -1); }) == "DomainError");
}

TEST_CASE("lambda classes")
{
    CHECK(lam({{1, {1, 1}}}) * lam({{1, {1, 1}}}) == lam({{2, {2, 1}}}));
    const auto u = lam({{0, {0, 3}}, {2, {1, -1}}});
    CHECK(u + lambda_class() == u);
    CHECK(lam({{0, {0, 2}}}) * lam({{1, {1, -1}}}) == lam({{1, {1, -2}}}));
    CHECK(chi_alt(lam({{0, {0, 3}}, {1, {1, -2}}, {2, {2, 5}}})) == 10);
    CHECK(chi_alt(lambda_class()) == 0);
    CHECK(chi_alt(lam({{1, {1, 1}}})) == -1);
    CHECK(signature(lam({{0, {0, 1}}, {2, {2, 2}}})) == std::vector<oclass>{{0, 1}, {0, 0}, {2, 2}});
    CHECK(signature(lambda_class()).empty());
    CHECK(lam({{3, oclass::zero()}}).is_zero());
}

TEST_CASE("semiring laws on random classes")
{
    gen::rng_t rng(8);
    for (int i = 0; i < 500; ++i) {
        const oclass x = gen::oclass_value(rng, 4, 20);
        const oclass y = gen::oclass_value(rng, 4, 20);
        const oclass z = gen::oclass_value(rng, 4, 20);
        CHECK((x + y) + z == x + (y + z));
        CHECK(x + y == y + x);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * y == y * x);
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x + oclass::zero() == x);
        CHECK(x * oclass::point() == x);
    }
}

TEST_CASE("chi_alt is a ring map on random lambda classes")
{
    gen::rng_t rng(9);
    for (int i = 0; i < 300; ++i) {
        const auto u = gen::lambda_value(rng, 4, 4, 10, false);
        const auto v = gen::lambda_value(rng, 4, 4, 10, false);
        CHECK(chi_alt(u + v) == chi_alt(u) + chi_alt(v));
        CHECK(chi_alt(u * v) == chi_alt(u) * chi_alt(v));
        CHECK((u * v).top() == std::optional<std::uint32_t>(*u.top() + *v.top()));
    }
}
