#include <hahn/wire.hpp>

#include <charconv>
#include <limits>
#include <string>

#include <hahn/error.hpp>

namespace hahn::wire
{

namespace
{

[[noreturn]] void malformed(const std::string &what, const json &j)
{
    raise(error_kind::parse_error, "malformed " + what + ": " + j.dump());
}

std::int64_t get_int(const json &j, const std::string &what)
{
    if (!j.is_number_integer()) {
        malformed(what, j);
    }
    if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
        malformed(what, j);
    }
    return j.get<std::int64_t>();
}

std::uint32_t get_natural(const json &j, const std::string &what)
{
    const auto v = get_int(j, what);
    if (v < 0 || v > static_cast<std::int64_t>(std::numeric_limits<std::uint32_t>::max())) {
        malformed(what, j);
    }
    return static_cast<std::uint32_t>(v);
}

} // namespace

json to_json(const scalar &x)
{
    if (x.is_exact() && x.exact().get_den() == 1 && x.exact().get_num().fits_slong_p()) {
        return json(static_cast<std::int64_t>(x.exact().get_num().get_si()));
    }
    return json(to_text(x));
}

json to_json(const series &a)
{
    json terms = json::array();
    for (const auto &t : a.terms()) {
        terms.push_back(json::array({to_json(t.exponent), to_json(t.coeff)}));
    }
    return json{{"terms", std::move(terms)}, {"order", a.order() ? to_json(*a.order()) : json(nullptr)}};
}

json to_json(const gamma_coord &g)
{
    if (g.is_zero()) {
        return "zero";
    }
    return json{{"sign", g.sign()}, {"q", to_json(g.q())}};
}

json to_json(const rv_element &r)
{
    if (r.is_zero()) {
        return "zero";
    }
    return json{{"q", to_json(r.q())}, {"c", to_json(r.c())}};
}

json to_json(const oclass &c)
{
    return json::array({c.dim(), c.chi()});
}

json to_json(const lambda_class &u)
{
    json levels = json::object();
    for (const auto &[level, c] : u.levels()) {
        levels[std::to_string(level)] = to_json(c);
    }
    return json{{"levels", std::move(levels)}};
}

json to_json(const blowup_step &s)
{
    return json{{"level", s.level}, {"locus", to_json(s.locus)}, {"remainder", to_json(s.remainder)}};
}

json to_json(const blowup_plan &p)
{
    json steps = json::array();
    for (const auto &s : p.steps) {
        steps.push_back(to_json(s));
    }
    return json{{"steps", std::move(steps)}};
}

json to_json(const odouble &x)
{
    if (const auto *s = std::get_if<odouble_shared>(&x)) {
        return json{{"shared", s->k}};
    }
    if (const auto *p = std::get_if<odouble_plain>(&x)) {
        return json{{"plain", json::array({p->dim, p->chi})}};
    }
    const auto &d = std::get<odouble_dom>(x);
    return json{{"dom", json::array({d.n, d.chi})}};
}

json to_json(const std::vector<oclass> &sig)
{
    json out = json::array();
    for (const auto &c : sig) {
        out.push_back(to_json(c));
    }
    return out;
}

scalar scalar_from_json(const json &j, const numeric_context &ctx)
{
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) {
            return scalar(mpq_class(mpz_class(std::to_string(j.get<std::uint64_t>()))));
        }
        return scalar(mpq_class(mpz_class(std::to_string(j.get<std::int64_t>()))));
    }
    if (j.is_number_float()) {
        // Shortest round-trip decimal, read back as an exact rational.
        char buf[64];
        const auto res = std::to_chars(buf, buf + sizeof(buf), j.get<double>());
        return parse_scalar(std::string_view(buf, static_cast<std::size_t>(res.ptr - buf)), ctx);
    }
    if (j.is_string()) {
        return parse_scalar(j.get<std::string>(), ctx);
    }
    malformed("scalar", j);
}

series series_from_json(const json &j, const numeric_context &ctx)
{
    if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array()) {
        malformed("series", j);
    }
    std::vector<term> terms;
    for (const auto &t : j.at("terms")) {
        if (!t.is_array() || t.size() != 2) {
            malformed("series term", t);
        }
        terms.push_back(term{scalar_from_json(t[0], ctx), scalar_from_json(t[1], ctx)});
    }
    order_t order;
    if (j.contains("order") && !j.at("order").is_null()) {
        order = scalar_from_json(j.at("order"), ctx);
    }
    return series::from_terms(std::move(terms), std::move(order));
}

gamma_coord gamma_from_json(const json &j, const numeric_context &ctx)
{
    if (j.is_string() && j.get<std::string>() == "zero") {
        return gamma_coord::zero();
    }
    if (!j.is_object() || !j.contains("sign") || !j.contains("q")) {
        malformed("gamma", j);
    }
    const auto s = get_int(j.at("sign"), "gamma sign");
    if (s != 1 && s != -1) {
        malformed("gamma sign", j);
    }
    return {static_cast<int>(s), scalar_from_json(j.at("q"), ctx)};
}

oclass oclass_from_json(const json &j)
{
    if (j.is_string()) {
        // "(d,c)" shorthand
        const auto s = j.get<std::string>();
        std::string body;
        for (char ch : s) {
            if (ch != ' ') {
                body += ch;
            }
        }
        if (body.size() < 5 || body.front() != '(' || body.back() != ')') {
            malformed("class", j);
        }
        return oclass_from_json(json::parse("[" + body.substr(1, body.size() - 2) + "]", nullptr, false));
    }
    if (!j.is_array() || j.size() != 2) {
        malformed("class", j);
    }
    return {get_natural(j[0], "class dimension"), get_int(j[1], "class chi")};
}

lambda_class lambda_from_json(const json &j)
{
    if (!j.is_object() || !j.contains("levels") || !j.at("levels").is_object()) {
        malformed("lambda class", j);
    }
    lambda_class u;
    for (const auto &[key, value] : j.at("levels").items()) {
        std::uint32_t level = 0;
        const auto res = std::from_chars(key.data(), key.data() + key.size(), level);
        if (res.ec != std::errc() || res.ptr != key.data() + key.size()) {
            malformed("lambda level", j);
        }
        u.set(level, oclass_from_json(value));
    }
    return u;
}

blowup_plan plan_from_json(const json &j)
{
    if (!j.is_object() || !j.contains("steps") || !j.at("steps").is_array()) {
        malformed("blowup plan", j);
    }
    blowup_plan plan;
    for (const auto &s : j.at("steps")) {
        if (!s.is_object() || !s.contains("level") || !s.contains("locus") || !s.contains("remainder")) {
            malformed("blowup step", s);
        }
        plan.steps.push_back({get_natural(s.at("level"), "step level"), oclass_from_json(s.at("locus")),
                              oclass_from_json(s.at("remainder"))});
    }
    return plan;
}

odouble odouble_from_json(const json &j)
{
    if (j.is_object() && j.size() == 1) {
        if (j.contains("shared")) {
            return canonical(odouble_shared{get_int(j.at("shared"), "shared value")});
        }
        if (j.contains("plain")) {
            const auto c = oclass_from_json(j.at("plain"));
            return canonical(odouble_plain{c.dim(), c.chi()});
        }
        if (j.contains("dom")) {
            const auto &d = j.at("dom");
            if (!d.is_array() || d.size() != 2) {
                malformed("dominator value", j);
            }
            return canonical(odouble_dom{get_natural(d[0], "dominator level"), get_int(d[1], "dominator chi")});
        }
    }
    malformed("O|_O value", j);
}

} // namespace hahn::wire
