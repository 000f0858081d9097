#include <hahn/cli/app.hpp>

#include <charconv>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <hahn/blowup.hpp>
#include <hahn/cli/expr.hpp>
#include <hahn/error.hpp>
#include <hahn/euler.hpp>
#include <hahn/selftest/suites.hpp>
#include <hahn/tempered.hpp>
#include <hahn/valuation.hpp>
#include <hahn/wire.hpp>

namespace hahn::cli
{

namespace
{

using json = nlohmann::json;
using args_t = std::vector<std::string>;

// Raised by `selftest` when a suite fails; the report is still printed.
struct selftest_failed {
    json report;
};

[[noreturn]] void usage(const std::string &msg)
{
    raise(error_kind::parse_error, msg);
}

void arity(const args_t &a, std::size_t n, const std::string &synopsis)
{
    if (a.size() != n) {
        usage("usage: " + synopsis);
    }
}

json parse_json_arg(const std::string &text, const std::string &what)
{
    auto j = json::parse(text, nullptr, false);
    if (j.is_discarded()) {
        usage("malformed JSON for " + what + ": " + text);
    }
    return j;
}

// Class arguments accept JSON ([d, c]) or the "(d,c)" shorthand.
oclass class_arg(const std::string &text)
{
    auto j = json::parse(text, nullptr, false);
    return wire::oclass_from_json(j.is_discarded() ? json(text) : j);
}

lambda_class lambda_arg(const std::string &text)
{
    return wire::lambda_from_json(parse_json_arg(text, "lambda class"));
}

std::int64_t int_arg(const std::string &text, const std::string &what)
{
    std::int64_t v = 0;
    const auto *end = text.data() + text.size();
    const auto res = std::from_chars(text.data(), end, v);
    if (res.ec != std::errc() || res.ptr != end) {
        usage("expected an integer for " + what + ", got '" + text + "'");
    }
    return v;
}

std::vector<std::int64_t> int_list_arg(const std::string &text)
{
    // "5,5" or a JSON array
    std::string body = text;
    if (!body.empty() && body.front() == '[' && body.back() == ']') {
        body = body.substr(1, body.size() - 2);
    }
    std::vector<std::int64_t> out;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto first = item.find_first_not_of(' ');
        const auto last = item.find_last_not_of(' ');
        out.push_back(int_arg(first == std::string::npos ? "" : item.substr(first, last - first + 1), "increment"));
    }
    return out;
}

json membership_json(const membership &m)
{
    return {{"in_O", m.in_o},     {"in_M", m.in_m},   {"in_U", m.in_u},
            {"in_Uplus", m.in_uplus}, {"in_KD", m.in_kd}, {"in_Delta", m.in_delta}};
}

json value_json(const value &v)
{
    return std::visit([](const auto &x) { return wire::to_json(x); }, v);
}

json dispatch(const args_t &all, const numeric_context &ctx)
{
    if (all.empty()) {
        usage("missing command; try --help");
    }
    const std::string &cmd = all.front();
    const args_t a(all.begin() + 1, all.end());
    const scalar target = ctx.default_order();
    const auto ser = [&](const std::string &text) { return evaluate_series(text, ctx); };

    if (cmd == "eval-series" || cmd == "eval") {
        arity(a, 1, cmd + " EXPR");
        return value_json(evaluate(a[0], ctx));
    }
    if (cmd == "vv") {
        arity(a, 1, "vv EXPR");
        return wire::to_json(vv(ser(a[0])));
    }
    if (cmd == "ac") {
        arity(a, 1, "ac EXPR");
        return wire::to_json(ac(ser(a[0])));
    }
    if (cmd == "av") {
        arity(a, 1, "av EXPR");
        const auto [x, g] = av(ser(a[0]));
        return {{"ac", wire::to_json(x)}, {"vv", wire::to_json(g)}};
    }
    if (cmd == "lg") {
        arity(a, 1, "lg EXPR");
        return wire::to_json(lg(ser(a[0])));
    }
    if (cmd == "pi") {
        arity(a, 1, "pi EXPR");
        return value_json(evaluate("pi(" + a[0] + ")", ctx));
    }
    if (cmd == "leading") {
        arity(a, 1, "leading EXPR");
        return wire::to_json(leading(ser(a[0])));
    }
    if (cmd == "residue") {
        arity(a, 1, "residue EXPR");
        return wire::to_json(residue(ser(a[0])));
    }
    if (cmd == "classify") {
        arity(a, 1, "classify EXPR");
        return membership_json(classify(ser(a[0]), ctx));
    }
    if (cmd == "compare") {
        arity(a, 2, "compare EXPR EXPR");
        static const char *const names[] = {"LT", "EQ", "GT", "Ambiguous"};
        return names[static_cast<int>(compare(ser(a[0]), ser(a[1])))];
    }
    if (cmd == "exp") {
        arity(a, 1, "exp EXPR");
        return wire::to_json(exp_series(ser(a[0]), target, ctx));
    }
    if (cmd == "log") {
        arity(a, 1, "log EXPR");
        return wire::to_json(log_series(ser(a[0]), target, ctx));
    }
    if (cmd == "pow") {
        arity(a, 2, "pow BASE EXPONENT");
        return wire::to_json(pow_unit(ser(a[0]), ser(a[1]), target, ctx));
    }
    if (cmd == "tpow") {
        arity(a, 2, "tpow BASE GAMMA");
        return wire::to_json(tempered_power(ser(a[0]), evaluate_scalar(a[1], ctx), target, ctx));
    }
    if (cmd == "texp") {
        arity(a, 2, "texp BASE X");
        return wire::to_json(tempered_exp(ser(a[0]), ser(a[1]), target, ctx));
    }
    if (cmd == "derivative") {
        arity(a, 4, "derivative A GAMMA N CUTOFF");
        return derivative_check(ser(a[0]), evaluate_scalar(a[1], ctx), evaluate_scalar(a[2], ctx),
                                evaluate_scalar(a[3], ctx), ctx);
    }
    if (cmd == "oclass") {
        if (a.size() == 2 && a[0] == "measure") {
            return wire::to_json(measure(parse_cell_expr(a[1])));
        }
        arity(a, 3, "oclass add|mul X Y | oclass measure CELL");
        if (a[0] == "add") {
            return wire::to_json(class_arg(a[1]) + class_arg(a[2]));
        }
        if (a[0] == "mul") {
            return wire::to_json(class_arg(a[1]) * class_arg(a[2]));
        }
        usage("unknown oclass operation '" + a[0] + "'");
    }
    if (cmd == "lambda") {
        if (a.size() == 2 && a[0] == "chi") {
            return chi_alt(lambda_arg(a[1]));
        }
        if (a.size() == 2 && a[0] == "sig") {
            return wire::to_json(signature(lambda_arg(a[1])));
        }
        arity(a, 3, "lambda add|mul U V | lambda chi|sig U");
        if (a[0] == "add") {
            return wire::to_json(lambda_arg(a[1]) + lambda_arg(a[2]));
        }
        if (a[0] == "mul") {
            return wire::to_json(lambda_arg(a[1]) * lambda_arg(a[2]));
        }
        usage("unknown lambda operation '" + a[0] + "'");
    }
    if (cmd == "blowup-apply") {
        arity(a, 2, "blowup-apply U PLAN");
        return wire::to_json(blowup_apply(lambda_arg(a[0]), wire::plan_from_json(parse_json_arg(a[1], "plan"))));
    }
    if (cmd == "evenup") {
        arity(a, 3, "evenup U M L");
        const auto u = lambda_arg(a[0]);
        const auto m = int_list_arg(a[1]);
        const auto l = int_arg(a[2], "l");
        if (l < 0 || l > 1'000'000) {
            raise(error_kind::precondition_error, "evenup: l out of range");
        }
        const auto plan = evenup_plan(u, m, static_cast<std::uint32_t>(l));
        return {{"plan", wire::to_json(plan)}, {"signature", wire::to_json(signature(blowup_apply(u, plan)))}};
    }
    if (cmd == "isp") {
        arity(a, 2, "isp U V");
        return isp_related(lambda_arg(a[0]), lambda_arg(a[1]));
    }
    if (cmd == "odouble") {
        if (a.size() == 2 && a[0] == "of") {
            return wire::to_json(to_odouble(lambda_arg(a[1])));
        }
        arity(a, 3, "odouble add|mul X Y | odouble of U");
        const auto x = wire::odouble_from_json(parse_json_arg(a[1], "O|_O value"));
        const auto y = wire::odouble_from_json(parse_json_arg(a[2], "O|_O value"));
        if (a[0] == "add") {
            return wire::to_json(odouble_add(x, y));
        }
        if (a[0] == "mul") {
            return wire::to_json(odouble_mul(x, y));
        }
        usage("unknown odouble operation '" + a[0] + "'");
    }
    if (cmd == "integrate") {
        arity(a, 1, "integrate U");
        return integrate(lambda_arg(a[0]));
    }
    if (cmd == "selftest") {
        const std::string which = a.empty() ? "all" : a[0];
        if (a.size() > 1) {
            usage("usage: selftest [all|SUITE]");
        }
        std::vector<selftest::suite_result> results;
        try {
            results = selftest::run(which);
        } catch (const std::invalid_argument &e) {
            usage(e.what());
        }
        auto rep = selftest::report(results);
        if (!rep.at("passed").get<bool>()) {
            throw selftest_failed{std::move(rep)};
        }
        return rep;
    }
    usage("unknown command '" + cmd + "'");
}

int exit_code(error_kind k)
{
    switch (k) {
        case error_kind::parse_error:
            return exit_parse;
        case error_kind::io_error:
            return exit_io;
        default:
            return exit_domain;
    }
}

// Envelope written by hand so that "ok" leads; json objects sort their keys.
struct document {
    bool ok = true;
    json result;
    json error;

    std::string text() const
    {
        std::string out = ok ? R"({"ok":true)" : R"({"ok":false)";
        if (!ok) {
            out += R"(,"error":)" + error.dump();
        }
        if (!result.is_null() || ok) {
            out += R"(,"result":)" + result.dump();
        }
        return out + "}";
    }
};

document error_doc(std::string_view kind, const std::string &message)
{
    return {false, nullptr, {{"kind", kind}, {"message", message}}};
}

// Runs one command and returns its exit code with the JSON document.
std::pair<int, document> execute(const args_t &args, const numeric_context &ctx)
{
    try {
        return {exit_ok, document{true, dispatch(args, ctx), nullptr}};
    } catch (const selftest_failed &f) {
        auto doc = error_doc("SelftestFailure", "at least one suite failed");
        doc.result = f.report;
        return {exit_failed, doc};
    } catch (const error &e) {
        return {exit_code(e.kind()), error_doc(to_string(e.kind()), e.what())};
    }
}

// Splits a batch line: whitespace separated, '...' and "..." group.
args_t split_line(const std::string &line)
{
    args_t out;
    std::istringstream ss(line);
    while (ss >> std::ws && ss.peek() != std::char_traits<char>::eof()) {
        std::string tok;
        const auto c = static_cast<char>(ss.peek());
        if (c == '\'' || c == '"') {
            ss >> std::quoted(tok, c);
        } else {
            ss >> tok;
        }
        out.push_back(std::move(tok));
    }
    return out;
}

struct options {
    std::string mode = "exact";
    unsigned precision = 256;
    std::string trunc = "32";
    std::string input;
    std::string output = "-";
    args_t command;
};

numeric_context make_context(const options &o)
{
    numeric_context ctx;
    if (o.mode == "exact") {
        ctx.arithmetic = mode::exact;
    } else if (o.mode == "float") {
        ctx.arithmetic = mode::floating;
    } else {
        raise(error_kind::parse_error, "--mode must be exact or float, got '" + o.mode + "'");
    }
    ctx.precision_bits = o.precision;
    const scalar omega = parse_scalar(o.trunc, ctx);
    if (!omega.is_exact()) {
        raise(error_kind::parse_error, "--trunc must be an exact rational");
    }
    ctx.truncation = omega.exact();
    ctx.validate();
    return ctx;
}

} // namespace

int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out)
{
    CLI::App app{"Arithmetic in the tempered Hahn field R((t^R)) and the class semiring calculus.", "hahncalc"};
    options o;
    app.add_option("--mode", o.mode, "exact or float")->default_val("exact");
    app.add_option("--precision", o.precision, "float precision in bits")->default_val(256);
    app.add_option("--trunc", o.trunc, "default truncation order")->default_val("32");
    app.add_option("--input", o.input, "read one command per line from FILE or - (stdin)");
    app.add_option("--output", o.output, "write JSON to FILE or - (stdout)")->default_val("-");
    app.usage("hahncalc [OPTIONS] COMMAND ARGS...");
    app.allow_extras();
    app.footer("Commands: eval-series vv ac av lg pi leading residue classify compare exp log pow tpow texp\n"
               "derivative oclass lambda blowup-apply evenup isp odouble integrate selftest");

    const auto emit_to = [&](std::ostream &os, const document &doc) { os << doc.text() << '\n'; };

    args_t argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError &e) {
        emit_to(out, error_doc("ParseError", e.what()));
        return exit_parse;
    }
    // Extras in command line order, minus a "--" separator.
    for (const auto &s : app.remaining()) {
        if (s != "--") {
            o.command.push_back(s);
        }
    }

    std::ofstream file;
    std::ostream *sink = &out;
    if (o.output != "-") {
        file.open(o.output);
        if (!file) {
            emit_to(out, error_doc("IOError", "cannot open output file '" + o.output + "'"));
            return exit_io;
        }
        sink = &file;
    }

    numeric_context ctx;
    try {
        ctx = make_context(o);
    } catch (const error &e) {
        emit_to(*sink, error_doc(to_string(e.kind()), e.what()));
        return exit_code(e.kind());
    }

    if (o.input.empty()) {
        const auto [code, doc] = execute(o.command, ctx);
        emit_to(*sink, doc);
        return code;
    }

    if (!o.command.empty()) {
        emit_to(*sink, error_doc("ParseError", "--input and a command line command are mutually exclusive"));
        return exit_parse;
    }
    std::ifstream source;
    std::istream *lines = &in;
    if (o.input != "-") {
        source.open(o.input);
        if (!source) {
            emit_to(*sink, error_doc("IOError", "cannot open input file '" + o.input + "'"));
            return exit_io;
        }
        lines = &source;
    }
    // One JSON document per command line; the first failure sets the exit code.
    int status = exit_ok;
    std::string line;
    while (std::getline(*lines, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        const auto [code, doc] = execute(split_line(line), ctx);
        emit_to(*sink, doc);
        if (status == exit_ok) {
            status = code;
        }
    }
    if (lines->bad()) {
        emit_to(*sink, error_doc("IOError", "error while reading input"));
        return exit_io;
    }
    sink->flush();
    if (!*sink) {
        return exit_io;
    }
    return status;
}

} // namespace hahn::cli
