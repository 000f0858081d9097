#include <hahn/cli/expr.hpp>

#include <cctype>
#include <memory>
#include <string>
#include <vector>

#include <hahn/error.hpp>
#include <hahn/tempered.hpp>

namespace hahn::cli
{

namespace
{

struct node {
    enum class kind { number, t, neg, add, sub, mul, div, pow, call };

    kind type;
    std::size_t offset = 0;
    std::string literal; // number text or function name
    std::vector<std::unique_ptr<node>> args;
};

using node_ptr = std::unique_ptr<node>;

node_ptr make(node::kind k, std::size_t offset)
{
    auto n = std::make_unique<node>();
    n->type = k;
    n->offset = offset;
    return n;
}

[[noreturn]] void parse_fail(const std::string &msg, std::size_t offset)
{
    raise(error_kind::parse_error, msg + " at byte " + std::to_string(offset));
}

class parser
{
public:
    explicit parser(std::string_view text) : m_text(text) {}

    node_ptr parse()
    {
        auto e = sum();
        skip_ws();
        if (m_pos != m_text.size()) {
            parse_fail(std::string("unexpected '") + m_text[m_pos] + "'", m_pos);
        }
        return e;
    }

private:
    void skip_ws()
    {
        while (m_pos < m_text.size() && std::isspace(static_cast<unsigned char>(m_text[m_pos])) != 0) {
            ++m_pos;
        }
    }

    bool accept(char c)
    {
        skip_ws();
        if (m_pos < m_text.size() && m_text[m_pos] == c) {
            ++m_pos;
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!accept(c)) {
            parse_fail(std::string("expected '") + c + "'", m_pos);
        }
    }

    node_ptr binary(node::kind k, std::size_t offset, node_ptr lhs, node_ptr rhs)
    {
        auto n = make(k, offset);
        n->args.push_back(std::move(lhs));
        n->args.push_back(std::move(rhs));
        return n;
    }

    node_ptr sum()
    {
        auto lhs = product();
        while (true) {
            skip_ws();
            const auto at = m_pos;
            if (accept('+')) {
                lhs = binary(node::kind::add, at, std::move(lhs), product());
            } else if (accept('-')) {
                lhs = binary(node::kind::sub, at, std::move(lhs), product());
            } else {
                return lhs;
            }
        }
    }

    node_ptr product()
    {
        auto lhs = unary();
        while (true) {
            skip_ws();
            const auto at = m_pos;
            if (accept('*')) {
                lhs = binary(node::kind::mul, at, std::move(lhs), unary());
            } else if (accept('/')) {
                lhs = binary(node::kind::div, at, std::move(lhs), unary());
            } else {
                return lhs;
            }
        }
    }

    node_ptr unary()
    {
        skip_ws();
        const auto at = m_pos;
        if (accept('-')) {
            auto n = make(node::kind::neg, at);
            n->args.push_back(unary());
            return n;
        }
        if (accept('+')) {
            return unary();
        }
        return power();
    }

    node_ptr power()
    {
        auto base = atom();
        skip_ws();
        const auto at = m_pos;
        if (accept('^')) {
            return binary(node::kind::pow, at, std::move(base), unary());
        }
        return base;
    }

    node_ptr atom()
    {
        skip_ws();
        const auto at = m_pos;
        if (m_pos >= m_text.size()) {
            parse_fail("unexpected end of expression", m_pos);
        }
        const char c = m_text[m_pos];
        if (accept('(')) {
            auto e = sum();
            expect(')');
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) != 0 || c == '.') {
            return number();
        }
        if (std::isalpha(static_cast<unsigned char>(c)) != 0) {
            while (m_pos < m_text.size() && std::isalnum(static_cast<unsigned char>(m_text[m_pos])) != 0) {
                ++m_pos;
            }
            std::string name(m_text.substr(at, m_pos - at));
            if (name == "t") {
                return make(node::kind::t, at);
            }
            static const char *const known[] = {"exp", "log", "pi", "lg", "vv", "ac", "tpow", "O"};
            bool found = false;
            for (const char *k : known) {
                found = found || name == k;
            }
            if (!found) {
                parse_fail("unknown name '" + name + "'", at);
            }
            auto n = make(node::kind::call, at);
            n->literal = name;
            expect('(');
            n->args.push_back(sum());
            if (name == "tpow") {
                if (!accept(';') && !accept(',')) {
                    parse_fail("tpow takes two arguments separated by ';'", m_pos);
                }
                n->args.push_back(sum());
            }
            expect(')');
            return n;
        }
        parse_fail(std::string("unexpected '") + c + "'", at);
    }

    node_ptr number()
    {
        const auto at = m_pos;
        const auto digits = [&] {
            while (m_pos < m_text.size() && std::isdigit(static_cast<unsigned char>(m_text[m_pos])) != 0) {
                ++m_pos;
            }
        };
        digits();
        if (m_pos < m_text.size() && m_text[m_pos] == '.') {
            ++m_pos;
            digits();
        }
        if (m_pos < m_text.size() && (m_text[m_pos] == 'e' || m_text[m_pos] == 'E')) {
            // Exponent only when digits follow, so "2exp(1)" is not swallowed.
            std::size_t p = m_pos + 1;
            if (p < m_text.size() && (m_text[p] == '+' || m_text[p] == '-')) {
                ++p;
            }
            if (p < m_text.size() && std::isdigit(static_cast<unsigned char>(m_text[p])) != 0) {
                m_pos = p;
                digits();
            }
        }
        auto n = make(node::kind::number, at);
        n->literal = std::string(m_text.substr(at, m_pos - at));
        if (n->literal == ".") {
            parse_fail("malformed number", at);
        }
        return n;
    }

    std::string_view m_text;
    std::size_t m_pos = 0;
};

class evaluator
{
public:
    explicit evaluator(const numeric_context &ctx) : m_ctx(ctx), m_target(ctx.default_order()) {}

    value eval(const node &n)
    {
        switch (n.type) {
            case node::kind::number:
                return series::constant(parse_scalar(n.literal, m_ctx));
            case node::kind::t:
                return series::t_power(scalar(1));
            case node::kind::neg:
                return -as_series(*n.args[0]);
            case node::kind::add:
                return as_series(*n.args[0]) + as_series(*n.args[1]);
            case node::kind::sub:
                return as_series(*n.args[0]) - as_series(*n.args[1]);
            case node::kind::mul:
                return multiply(n);
            case node::kind::div:
                return divide(n);
            case node::kind::pow:
                return power(n);
            case node::kind::call:
                return call(n);
        }
        raise(error_kind::parse_error, "unknown expression node");
    }

    series as_series(const node &n)
    {
        auto v = eval(n);
        if (auto *s = std::get_if<series>(&v)) {
            return std::move(*s);
        }
        raise(error_kind::domain_error, "value group element used as a series at byte " + std::to_string(n.offset)
                                            + "; wrap it in pi(...)");
    }

    scalar as_scalar(const node &n)
    {
        auto v = eval(n);
        if (const auto *g = std::get_if<gamma_coord>(&v)) {
            return embed_gamma(*g, m_ctx);
        }
        return constant_of(std::get<series>(v), n.offset);
    }

private:
    static scalar constant_of(const series &s, std::size_t offset)
    {
        if (s.is_exact_zero()) {
            return scalar(0);
        }
        if (s.is_exact() && s.terms().size() == 1 && s.terms()[0].exponent == scalar(0)) {
            return s.terms()[0].coeff;
        }
        raise(error_kind::domain_error, "expected a constant at byte " + std::to_string(offset));
    }

    value multiply(const node &n)
    {
        auto x = eval(*n.args[0]);
        auto y = eval(*n.args[1]);
        const auto *gx = std::get_if<gamma_coord>(&x);
        const auto *gy = std::get_if<gamma_coord>(&y);
        if (gx && gy) {
            return *gx * *gy;
        }
        if (gx || gy) {
            raise(error_kind::domain_error,
                  "cannot multiply a value group element by a series at byte " + std::to_string(n.offset));
        }
        return std::get<series>(x) * std::get<series>(y);
    }

    value divide(const node &n)
    {
        auto x = eval(*n.args[0]);
        auto y = eval(*n.args[1]);
        const auto *gx = std::get_if<gamma_coord>(&x);
        const auto *gy = std::get_if<gamma_coord>(&y);
        if (gx && gy) {
            return *gx * gy->inverse();
        }
        if (gx || gy) {
            raise(error_kind::domain_error,
                  "cannot divide a value group element by a series at byte " + std::to_string(n.offset));
        }
        return std::get<series>(x) * invert(std::get<series>(y), m_target);
    }

    value power(const node &n)
    {
        auto base = eval(*n.args[0]);
        const scalar e = as_scalar(*n.args[1]);
        if (const auto *g = std::get_if<gamma_coord>(&base)) {
            return gamma_pow(*g, e);
        }
        const auto &s = std::get<series>(base);
        if (const auto k = e.is_exact() ? to_integer(e) : std::nullopt) {
            return pow_int(s, *k, m_target);
        }
        // t^q and other bare powers of t
        if (s.is_exact() && s.terms().size() == 1 && s.terms()[0].coeff == scalar(1)) {
            return series::t_power(s.terms()[0].exponent * e);
        }
        raise(error_kind::domain_error, "non-integer power of a general series at byte " + std::to_string(n.offset)
                                            + "; use tpow(a; g)");
    }

    value call(const node &n)
    {
        const auto &name = n.literal;
        if (name == "vv") {
            return vv(as_series(*n.args[0]));
        }
        if (name == "pi") {
            auto v = eval(*n.args[0]);
            if (const auto *g = std::get_if<gamma_coord>(&v)) {
                return pi(*g, m_ctx);
            }
            return pi(constant_of(std::get<series>(v), n.args[0]->offset), m_ctx);
        }
        if (name == "tpow") {
            return tempered_power(as_series(*n.args[0]), as_scalar(*n.args[1]), m_target, m_ctx);
        }
        const series a = as_series(*n.args[0]);
        if (name == "exp") {
            return exp_series(a, m_target, m_ctx);
        }
        if (name == "log") {
            return log_series(a, m_target, m_ctx);
        }
        if (name == "lg") {
            return lg(a);
        }
        if (name == "ac") {
            return series::constant(ac(a));
        }
        // O(t^w)
        if (a.is_exact() && a.terms().size() == 1 && a.terms()[0].coeff == scalar(1)) {
            return series::big_o(a.terms()[0].exponent);
        }
        raise(error_kind::domain_error, "O(...) takes a power of t at byte " + std::to_string(n.offset));
    }

    const numeric_context &m_ctx;
    scalar m_target;
};

} // namespace

value evaluate(std::string_view text, const numeric_context &ctx)
{
    const auto tree = parser(text).parse();
    return evaluator(ctx).eval(*tree);
}

series evaluate_series(std::string_view text, const numeric_context &ctx)
{
    const auto tree = parser(text).parse();
    return evaluator(ctx).as_series(*tree);
}

scalar evaluate_scalar(std::string_view text, const numeric_context &ctx)
{
    const auto tree = parser(text).parse();
    return evaluator(ctx).as_scalar(*tree);
}

} // namespace hahn::cli
