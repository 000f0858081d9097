#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include <hahn/cli/app.hpp>
#include <hahn/cli/expr.hpp>
#include <hahn/selftest/generators.hpp>
#include <hahn/wire.hpp>

#include "helpers.hpp"

using nlohmann::json;
using testing::error_of;

namespace
{

struct outcome {
    int code;
    std::string text;
    json doc;
};

outcome call(const std::vector<std::string> &args, const std::string &stdin_text = "")
{
    std::istringstream in(stdin_text);
    std::ostringstream out;
    const int code = hahn::cli::run(args, in, out);
    const auto text = out.str();
    json doc = json::parse(text.substr(0, text.find('\n')), nullptr, false);
    return {code, text, doc};
}

} // namespace

TEST_CASE("documented command examples")
{
    auto r = call({"eval-series", "(1+t)*(1-t)"});
    CHECK(r.code == 0);
    CHECK(r.text == "{\"ok\":true,\"result\":{\"order\":null,\"terms\":[[0,1],[2,-1]]}}\n");

    r = call({"oclass", "add", "(0,3)", "(2,-5)"});
    CHECK(r.doc["result"] == json::parse("[2,-2]"));

    r = call({"evenup", R"({"levels":{"0":[0,1],"1":[1,1]}})", "5,5", "4"});
    CHECK(r.code == 0);
    CHECK(r.doc["result"]["signature"] == json::parse("[[2,6],[4,6]]"));
    // The reported plan replays to the reported signature.
    r = call({"blowup-apply", R"({"levels":{"0":[0,1],"1":[1,1]}})", r.doc["result"]["plan"].dump()});
    CHECK(r.doc["result"] == json::parse(R"({"levels":{"0":[2,6],"1":[4,6]}})"));
}

TEST_CASE("expression grammar")
{
    const auto ex = testing::exact_ctx();
    auto two = hahn::cli::evaluate_series("t^(1/2) + 3", ex);
    CHECK(two.terms().size() == 2);

    auto ctx = ex;
    ctx.truncation = 5;
    const auto geo = hahn::cli::evaluate_series("1/(1-t)", ctx);
    CHECK(geo == hahn::invert(testing::c(1) - testing::t_pow(1), testing::q(5)));
    CHECK(hahn::cli::evaluate_series("2^3 - -t^2*t^-1", ex) == testing::c(8) + testing::t_pow(1));
    CHECK(hahn::cli::evaluate_series("O(t^3) + 1", ex) == testing::c(1) + hahn::series::big_o(testing::q(3)));
    CHECK(hahn::cli::evaluate_series("lg(3*t^2 + t^3)", ex) == hahn::series::monomial(testing::q(3), testing::q(2)));
    CHECK(hahn::cli::evaluate_series("0.5e1*t", ex) == hahn::series::monomial(testing::q(5), testing::q(1)));
    CHECK(std::get<hahn::gamma_coord>(hahn::cli::evaluate("vv(t)*vv(t)", ex)) == hahn::gamma_coord(1, testing::q(2)));

    CHECK(error_of([&] { (void)hahn::cli::evaluate("t^", ex); }) == "ParseError");
    CHECK(error_of([&] { (void)hahn::cli::evaluate("(1+t", ex); }) == "ParseError");
    CHECK(error_of([&] { (void)hahn::cli::evaluate("sin(t)", ex); }) == "ParseError");
    CHECK(error_of([&] { (void)hahn::cli::evaluate("1 2", ex); }) == "ParseError");
    CHECK(error_of([&] { (void)hahn::cli::evaluate("tpow(t)", ex); }) == "ParseError");
    CHECK(error_of([&] { (void)hahn::cli::evaluate("exp(1)", ex); }) == "ModeError");
    CHECK(error_of([&] { (void)hahn::cli::evaluate("(1+t)^(1/2)", ex); }) == "DomainError");
    CHECK(error_of([&] { (void)hahn::cli::evaluate("vv(t) + 1", ex); }) == "DomainError");
}

TEST_CASE("parse errors report the byte offset")
{
    const auto r = call({"eval-series", "t^"});
    CHECK(r.code == 3);
    CHECK(r.doc["ok"] == false);
    CHECK(r.doc["error"]["kind"] == "ParseError");
    CHECK(r.doc["error"]["message"].get<std::string>().find("byte 2") != std::string::npos);
}

TEST_CASE("exit codes")
{
    CHECK(call({"exp", "1+t"}).code == 2);
    CHECK(call({"exp", "1+t"}).doc["error"]["kind"] == "ModeError");
    CHECK(call({"--mode", "float", "exp", "1+t"}).code == 0);
    CHECK(call({"log", "-1+t"}).doc["error"]["kind"] == "NotPositiveUnit");
    CHECK(call({"residue", "t^-1"}).code == 2);
    CHECK(call({"evenup", R"({"levels":{"0":[0,1],"1":[1,1]}})", "5,4", "4"}).doc["error"]["kind"]
          == "PreconditionError");
    CHECK(call({"nosuchcommand"}).code == 3);
    CHECK(call({}).code == 3);
    CHECK(call({"--mode", "fuzzy", "vv", "t"}).code == 3);
    CHECK(call({"--precision", "abc", "vv", "t"}).code == 3);
    CHECK(call({"--precision", "16", "vv", "t"}).code == 2);
    CHECK(call({"--trunc", "0", "vv", "t"}).code == 2);
    CHECK(call({"--input", "/nonexistent/commands.txt"}).code == 4);
    CHECK(call({"--output", "/nonexistent/dir/out.json", "vv", "t"}).code == 4);
    CHECK(call({"--help"}).code == 0);
}

TEST_CASE("batch input")
{
    const std::string script = "# comment\n"
                               "oclass mul (2,-5) (3,2)\n"
                               "\n"
                               "isp '{\"levels\": {\"0\": [0, 3]}}' '{\"levels\": {\"0\": [0, 4]}}'\n"
                               "eval-series \"1 + t\"\n";
    const auto r = call({"--input", "-"}, script);
    CHECK(r.code == 0);
    std::istringstream lines(r.text);
    std::string line;
    std::vector<json> docs;
    while (std::getline(lines, line)) {
        docs.push_back(json::parse(line));
    }
    REQUIRE(docs.size() == 3);
    CHECK(docs[0]["result"] == json::parse("[5,-10]"));
    CHECK(docs[1]["result"] == false);
    CHECK(docs[2]["result"]["terms"] == json::parse("[[0,1],[1,1]]"));

    // The first failing line decides the exit code; later lines still run.
    const auto mixed = call({"--input", "-"}, "eval-series t^\nexp 1+t\nintegrate {\"levels\":{}}\n");
    CHECK(mixed.code == 3);
    CHECK(std::count(mixed.text.begin(), mixed.text.end(), '\n') == 3);
}

TEST_CASE("output file")
{
    const std::string path = "hahncalc_test_output.json";
    const auto r = call({"--output", path, "integrate", R"({"levels":{"0":[0,1],"1":[2,2]}})"});
    CHECK(r.code == 0);
    CHECK(r.text.empty());
    std::ifstream file(path);
    std::string content((std::istreambuf_iterator<char>(file)), std::istreambuf_iterator<char>());
    CHECK(content == "{\"ok\":true,\"result\":-1}\n");
    std::remove(path.c_str());
}

TEST_CASE("float mode output")
{
    const auto r = call({"--mode", "float", "pi", "2"});
    REQUIRE(r.code == 0);
    const auto terms = r.doc["result"]["terms"];
    REQUIRE(terms.size() == 1);
    CHECK(terms[0][1] == 2);
    CHECK(terms[0][0].get<std::string>().rfind("~-0.69314718055994530941723212145817656807", 0) == 0);
}

TEST_CASE("exact JSON output re-parses to the same value")
{
    const auto ex = testing::exact_ctx();
    hahn::gen::rng_t rng(4242);
    hahn::gen::series_shape shape;
    for (int i = 0; i < 100; ++i) {
        const auto a = hahn::clip(hahn::gen::exact_series(rng, shape), hahn::gen::rational(rng, 1, 8, 3));
        // Build an expression for a, run it, and read the JSON back.
        std::string expr = "0";
        for (const auto &t : a.terms()) {
            expr += " + (" + hahn::to_text(t.coeff) + ")*t^(" + hahn::to_text(t.exponent) + ")";
        }
        expr += " + O(t^(" + hahn::to_text(*a.order()) + "))";
        const auto r = call({"eval-series", expr});
        REQUIRE(r.code == 0);
        CHECK(hahn::wire::series_from_json(r.doc["result"], ex) == a);
    }
}
