#include <hahn/euler.hpp>

#include <algorithm>
#include <cctype>
#include <string>

#include <hahn/error.hpp>

namespace hahn
{

oclass::oclass(std::uint32_t dim, std::int64_t chi) : m_dim(dim), m_chi(chi)
{
    if (dim == 0 && chi < 0) {
        raise(error_kind::domain_error,
              "a class of dimension 0 is a finite set and needs chi >= 0, got " + std::to_string(chi));
    }
}

oclass oclass::open_cell(std::uint32_t dim)
{
    return {dim, dim % 2 == 0 ? 1 : -1};
}

oclass operator+(const oclass &x, const oclass &y)
{
    return {std::max(x.dim(), y.dim()), x.chi() + y.chi()};
}

oclass operator*(const oclass &x, const oclass &y)
{
    if (x.is_zero() || y.is_zero()) {
        return oclass::zero();
    }
    return {x.dim() + y.dim(), x.chi() * y.chi()};
}

oclass q_class()
{
    return measure(cell_expr::named(cell_expr::kind::q));
}

// ---------------------------------------------------------------- cells

cell_expr cell_expr::point()
{
    return cell_expr(kind::point);
}

cell_expr cell_expr::open_interval()
{
    return cell_expr(kind::open_interval);
}

cell_expr cell_expr::pos_ray()
{
    return cell_expr(kind::pos_ray);
}

cell_expr cell_expr::neg_ray()
{
    return cell_expr(kind::neg_ray);
}

cell_expr cell_expr::prod(cell_expr a, cell_expr b)
{
    cell_expr e(kind::prod);
    e.m_lhs = std::make_shared<const cell_expr>(std::move(a));
    e.m_rhs = std::make_shared<const cell_expr>(std::move(b));
    return e;
}

cell_expr cell_expr::disj_union(cell_expr a, cell_expr b)
{
    cell_expr e(kind::disj_union);
    e.m_lhs = std::make_shared<const cell_expr>(std::move(a));
    e.m_rhs = std::make_shared<const cell_expr>(std::move(b));
    return e;
}

cell_expr cell_expr::named(kind k)
{
    switch (k) {
        case kind::q_plus:
            // K+ x (0, 1)
            return prod(pos_ray(), open_interval());
        case kind::q_minus:
            // K- x (-1, 0)
            return prod(neg_ray(), open_interval());
        case kind::q:
            return disj_union(named(kind::q_plus), named(kind::q_minus));
        case kind::lambda: {
            // K^x x K^x
            auto units = disj_union(pos_ray(), neg_ray());
            return prod(units, units);
        }
        default:
            return cell_expr(k);
    }
}

oclass measure(const cell_expr &e)
{
    switch (e.type()) {
        case cell_expr::kind::point:
            return oclass::point();
        case cell_expr::kind::open_interval:
        case cell_expr::kind::pos_ray:
        case cell_expr::kind::neg_ray:
            return oclass::open_cell(1);
        case cell_expr::kind::prod:
            return measure(e.lhs()) * measure(e.rhs());
        case cell_expr::kind::disj_union:
            return measure(e.lhs()) + measure(e.rhs());
        default:
            return measure(cell_expr::named(e.type()));
    }
}

namespace
{

class cell_parser
{
public:
    explicit cell_parser(std::string_view text) : m_text(text) {}

    cell_expr parse()
    {
        auto e = expr();
        skip_ws();
        if (m_pos != m_text.size()) {
            fail("trailing input");
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

    [[noreturn]] void fail(const std::string &msg) const
    {
        raise(error_kind::parse_error, "cell expression: " + msg + " at byte " + std::to_string(m_pos));
    }

    void expect(char c)
    {
        skip_ws();
        if (m_pos >= m_text.size() || m_text[m_pos] != c) {
            fail(std::string("expected '") + c + "'");
        }
        ++m_pos;
    }

    cell_expr expr()
    {
        skip_ws();
        const auto start = m_pos;
        while (m_pos < m_text.size() && std::isalpha(static_cast<unsigned char>(m_text[m_pos])) != 0) {
            ++m_pos;
        }
        const auto name = m_text.substr(start, m_pos - start);
        if (name == "Prod" || name == "DisjUnion") {
            expect('(');
            auto a = expr();
            expect(',');
            auto b = expr();
            expect(')');
            return name == "Prod" ? cell_expr::prod(std::move(a), std::move(b))
                                  : cell_expr::disj_union(std::move(a), std::move(b));
        }
        using k = cell_expr::kind;
        if (name == "Point") {
            return cell_expr::point();
        }
        if (name == "OpenInterval") {
            return cell_expr::open_interval();
        }
        if (name == "PosRay") {
            return cell_expr::pos_ray();
        }
        if (name == "NegRay") {
            return cell_expr::neg_ray();
        }
        if (name == "Qplus") {
            return cell_expr::named(k::q_plus);
        }
        if (name == "Qminus") {
            return cell_expr::named(k::q_minus);
        }
        if (name == "Q") {
            return cell_expr::named(k::q);
        }
        if (name == "Lambda") {
            return cell_expr::named(k::lambda);
        }
        m_pos = start;
        fail("unknown cell '" + std::string(name) + "'");
    }

    std::string_view m_text;
    std::size_t m_pos = 0;
};

} // namespace

cell_expr parse_cell_expr(std::string_view text)
{
    return cell_parser(text).parse();
}

// --------------------------------------------------------- lambda_class

lambda_class::lambda_class(std::map<std::uint32_t, oclass> levels)
{
    for (const auto &[level, c] : levels) {
        set(level, c);
    }
}

lambda_class lambda_class::at_level(std::uint32_t level, const oclass &c)
{
    lambda_class u;
    u.set(level, c);
    return u;
}

std::optional<std::uint32_t> lambda_class::top() const
{
    if (m_levels.empty()) {
        return std::nullopt;
    }
    return m_levels.rbegin()->first;
}

oclass lambda_class::at(std::uint32_t level) const
{
    const auto it = m_levels.find(level);
    return it == m_levels.end() ? oclass::zero() : it->second;
}

void lambda_class::set(std::uint32_t level, const oclass &c)
{
    if (c.is_zero()) {
        m_levels.erase(level);
    } else {
        m_levels[level] = c;
    }
}

lambda_class operator+(const lambda_class &u, const lambda_class &v)
{
    lambda_class out = u;
    for (const auto &[level, c] : v.levels()) {
        out.set(level, out.at(level) + c);
    }
    return out;
}

lambda_class operator*(const lambda_class &u, const lambda_class &v)
{
    lambda_class out;
    for (const auto &[i, x] : u.levels()) {
        for (const auto &[j, y] : v.levels()) {
            out.set(i + j, out.at(i + j) + x * y);
        }
    }
    return out;
}

std::int64_t chi_alt(const lambda_class &u)
{
    std::int64_t total = 0;
    for (const auto &[level, c] : u.levels()) {
        total += (level % 2 == 0) ? c.chi() : -c.chi();
    }
    return total;
}

std::vector<oclass> signature(const lambda_class &u)
{
    std::vector<oclass> out;
    if (const auto n = u.top()) {
        out.reserve(*n + 1);
        for (std::uint32_t i = 0; i <= *n; ++i) {
            out.push_back(u.at(i));
        }
    }
    return out;
}

} // namespace hahn
