#include <doctest.h>

#include <hahn/blowup.hpp>
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

TEST_CASE("single blowups")
{
    const auto v = lam({{1, {1, 3}}});
    const auto w = blowup_apply(v, blowup_step{1, {0, 1}, {1, 2}});
    CHECK(w == lam({{0, {0, 1}}, {1, {2, 4}}}));
    CHECK(chi_alt(v) == -3);
    CHECK(chi_alt(w) == -3);

    CHECK(blowup_apply(lam({{1, {0, 1}}}), blowup_step{1, {0, 1}, {0, 0}}) == lam({{0, {0, 1}}, {1, {2, 2}}}));

    CHECK(error_of([&] { (void)blowup_apply(lam({{0, {0, 2}}}), blowup_step{0, {0, 1}, {0, 1}}); })
          == "InvalidStep");
    CHECK(error_of([&] { (void)blowup_apply(v, blowup_step{1, {0, 1}, {1, 3}}); }) == "InvalidStep");
    CHECK(error_of([&] { (void)blowup_apply(v, blowup_step{2, {0, 1}, {0, 0}}); }) == "InvalidStep");
    CHECK(error_of([&] { (void)blowup_apply(v, blowup_step{1, {0, 0}, {1, 3}}); }) == "InvalidStep");
}

TEST_CASE("evenup planner")
{
    const auto u = lam({{0, {0, 1}}, {1, {1, 1}}});
    const auto plan = evenup_plan(u, {5, 5}, 4);
    const auto done = blowup_apply(u, plan);
    CHECK(signature(done) == std::vector<oclass>{{2, 6}, {4, 6}});
    CHECK(evenup_target(u, {5, 5}, 4) == signature(done));

    // m = 0 keeps the Euler characteristics.
    const auto v = lam({{0, {1, -2}}, {1, {0, 3}}, {2, {2, 1}}});
    const auto flat = blowup_apply(v, evenup_plan(v, {0, 0, 0}, 5));
    CHECK(signature(flat) == std::vector<oclass>{{3, -2}, {5, 3}, {5, 1}});

    CHECK(error_of([&] { (void)evenup_plan(u, {5, 4}, 4); }) == "PreconditionError");
    CHECK(error_of([&] { (void)evenup_plan(u, {5}, 4); }) == "PreconditionError");
    CHECK(error_of([&] { (void)evenup_plan(u, {0, 0}, 2); }) == "PreconditionError");
    CHECK(error_of([&] { (void)evenup_plan(lam({{1, {4, 1}}}), {0, 0}, 5); }) == "PreconditionError");
    CHECK(error_of([&] { (void)evenup_plan(lam({{0, {0, 1}}}), {0}, 4); }) == "PreconditionError");
}

TEST_CASE("evenup on random admissible data")
{
    gen::rng_t rng(2718);
    for (int i = 0; i < 60; ++i) {
        const auto n = static_cast<std::uint32_t>(gen::uniform_int(rng, 1, 4));
        const auto u = gen::lambda_value(rng, n, 4, 8);
        const auto l = static_cast<std::uint32_t>(gen::uniform_int(rng, 6, 12));
        std::vector<std::int64_t> m(n + 1);
        std::int64_t alt = 0;
        for (std::uint32_t k = 1; k <= n; ++k) {
            m[k] = gen::uniform_int(rng, -50, 50);
            alt += (k % 2 == 0) ? m[k] : -m[k];
        }
        m[0] = -alt;
        const auto plan = evenup_plan(u, m, l);
        lambda_class cur = u;
        for (const auto &s : plan.steps) {
            const auto next = blowup_apply(cur, s);
            CHECK(chi_alt(next) == chi_alt(cur));
            cur = next;
        }
        CHECK(signature(cur) == evenup_target(u, m, l));
    }
}

TEST_CASE("isp relation")
{
    CHECK(isp_related(lam({{2, {2, 1}}, {0, {0, 3}}}), lam({{2, {5, -1}}, {1, {1, -5}}})));
    CHECK_FALSE(isp_related(lam({{0, {0, 3}}}), lam({{0, {0, 4}}})));
    CHECK_FALSE(isp_related(lam({{1, {1, 1}}}), lam({{2, {2, -1}}})));
    CHECK(isp_related(lambda_class(), lambda_class()));
    CHECK_FALSE(isp_related(lambda_class(), lam({{1, {1, 0}}})));
}

TEST_CASE("quotient map")
{
    CHECK(to_odouble(lam({{0, {2, -3}}})) == odouble{odouble_plain{2, -3}});
    CHECK(to_odouble(lam({{0, {0, 1}}, {1, {2, 4}}})) == odouble{odouble_dom{1, -3}});
    CHECK(to_odouble(lam({{0, {0, 5}}})) == odouble{odouble_shared{5}});
    CHECK(to_odouble(lambda_class()) == odouble{odouble_shared{0}});
}

TEST_CASE("O|_O arithmetic")
{
    const odouble p{odouble_plain{1, 3}};
    const odouble d{odouble_dom{2, 4}};
    CHECK(odouble_add(p, d) == odouble{odouble_dom{2, 7}});
    CHECK(odouble_add(d, p) == odouble{odouble_dom{2, 7}});
    CHECK(odouble_mul(p, d) == odouble{odouble_dom{2, 12}});
    CHECK(odouble_mul(odouble_dom{1, 2}, odouble_dom{2, -3}) == odouble{odouble_dom{3, -6}});
    CHECK(odouble_add(odouble_shared{2}, odouble_plain{3, -1}) == odouble{odouble_plain{3, 1}});
    CHECK(odouble_mul(odouble_shared{0}, d) == odouble{odouble_shared{0}});
    CHECK(odouble_mul(odouble_shared{3}, d) == odouble{odouble_dom{2, 12}});
    CHECK(canonical(odouble_plain{0, 4}) == odouble{odouble_shared{4}});
    CHECK(error_of([] { (void)canonical(odouble_shared{-1}); }) == "DomainError");
}

TEST_CASE("integrate")
{
    CHECK(integrate(lambda_class()) == 0);
    CHECK(integrate(lam({{0, {0, 1}}, {1, {2, 2}}})) == -1);
}

TEST_CASE("quotient is a congruence and a homomorphism")
{
    gen::rng_t rng(161);
    for (int i = 0; i < 200; ++i) {
        const auto u = gen::lambda_value(rng, 3, 3, 6, false);
        const auto v = gen::lambda_value(rng, 3, 3, 6, false);
        CHECK((to_odouble(u) == to_odouble(v)) == isp_related(u, v));
        CHECK(to_odouble(u + v) == odouble_add(to_odouble(u), to_odouble(v)));
        CHECK(to_odouble(u * v) == odouble_mul(to_odouble(u), to_odouble(v)));
        CHECK(integrate(u * v) == integrate(u) * integrate(v));
    }
}
