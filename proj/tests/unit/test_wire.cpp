#include <doctest.h>

#include <hahn/selftest/generators.hpp>
#include <hahn/wire.hpp>

#include "helpers.hpp"

using namespace hahn;
using testing::error_of;
using testing::q;
using wire::json;

TEST_CASE("scalar encoding")
{
    const auto ex = testing::exact_ctx();
    CHECK(wire::to_json(scalar(7)) == json(7));
    CHECK(wire::to_json(q(-3, 4)) == json("-3/4"));
    CHECK(wire::scalar_from_json(json(0.25), ex) == q(1, 4));
    CHECK(wire::scalar_from_json(json("-3/4"), ex) == q(-3, 4));
    CHECK(error_of([&] { (void)wire::scalar_from_json(json::array(), ex); }) == "ParseError");
}

TEST_CASE("series encoding")
{
    const auto ex = testing::exact_ctx();
    const series a = series::constant(scalar(1)) - series::t_power(q(2));
    CHECK(wire::to_json(a) == json::parse(R"({"terms": [[0, 1], [2, -1]], "order": null})"));
    const series b = series::monomial(q(1, 3), q(-1, 2)) + series::big_o(q(5, 2));
    CHECK(wire::to_json(b) == json::parse(R"({"terms": [["-1/2", "1/3"]], "order": "5/2"})"));
    CHECK(error_of([&] { (void)wire::series_from_json(json::parse(R"({"terms": [[1]]})"), ex); }) == "ParseError");
}

TEST_CASE("class encodings")
{
    CHECK(wire::oclass_from_json(json("(2, -5)")) == oclass(2, -5));
    CHECK(wire::oclass_from_json(json::parse("[0, 3]")) == oclass(0, 3));
    CHECK(error_of([] { (void)wire::oclass_from_json(json("(2,")); }) == "ParseError");
    CHECK(error_of([] { (void)wire::oclass_from_json(json::parse("[-1, 3]")); }) == "ParseError");
    CHECK(error_of([] { (void)wire::oclass_from_json(json::parse("[0, -3]")); }) == "DomainError");
    const auto u = wire::lambda_from_json(json::parse(R"({"levels": {"0": [0, 1], "1": [1, 1]}})"));
    CHECK(u == lambda_class({{0, {0, 1}}, {1, {1, 1}}}));
    CHECK(error_of([] { (void)wire::lambda_from_json(json::parse(R"({"levels": {"x": [0, 1]}})")); })
          == "ParseError");
    CHECK(wire::to_json(odouble{odouble_dom{2, 7}}) == json::parse(R"({"dom": [2, 7]})"));
    CHECK(wire::odouble_from_json(json::parse(R"({"plain": [0, 4]})")) == odouble{odouble_shared{4}});
}

TEST_CASE("exact values round trip through JSON text")
{
    const auto ex = testing::exact_ctx();
    gen::rng_t rng(55);
    gen::series_shape shape;
    for (int i = 0; i < 200; ++i) {
        series a = gen::exact_series(rng, shape);
        if (i % 2 == 0) {
            a = clip(a, gen::rational(rng, 0, 6, 5));
        }
        const auto text = wire::to_json(a).dump();
        CHECK(wire::series_from_json(json::parse(text), ex) == a);

        const auto u = gen::lambda_value(rng, 4, 4, 9, false);
        CHECK(wire::lambda_from_json(json::parse(wire::to_json(u).dump())) == u);

        blowup_plan plan;
        plan.steps.push_back({static_cast<std::uint32_t>(i % 3 + 1), gen::oclass_value(rng, 3, 5),
                              gen::oclass_value(rng, 3, 5)});
        CHECK(wire::plan_from_json(json::parse(wire::to_json(plan).dump())) == plan);
    }
}
