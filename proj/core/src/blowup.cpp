#include <hahn/blowup.hpp>

#include <algorithm>
#include <string>
#include <type_traits>

#include <hahn/error.hpp>

namespace hahn
{

namespace
{

std::string show(const oclass &c)
{
    return "(" + std::to_string(c.dim()) + "," + std::to_string(c.chi()) + ")";
}

[[noreturn]] void precondition(const std::string &msg)
{
    raise(error_kind::precondition_error, "evenup: " + msg);
}

} // namespace

lambda_class blowup_apply(const lambda_class &v, const blowup_step &step)
{
    if (step.level == 0) {
        raise(error_kind::invalid_step, "level 0 only admits the identity blowup");
    }
    if (step.locus.is_zero()) {
        raise(error_kind::invalid_step, "blowup locus must be nonempty");
    }
    const oclass vn = v.at(step.level);
    if (vn.is_zero()) {
        raise(error_kind::invalid_step, "level " + std::to_string(step.level) + " is empty");
    }
    if (!(step.locus + step.remainder == vn)) {
        raise(error_kind::invalid_step, "locus " + show(step.locus) + " + remainder " + show(step.remainder)
                                            + " does not recover level " + std::to_string(step.level) + " = "
                                            + show(vn));
    }
    lambda_class out = v;
    out.set(step.level, step.remainder + step.locus * q_class());
    out.set(step.level - 1, out.at(step.level - 1) + step.locus);
    return out;
}

lambda_class blowup_apply(const lambda_class &v, const blowup_plan &plan)
{
    lambda_class out = v;
    for (const auto &s : plan.steps) {
        out = blowup_apply(out, s);
    }
    return out;
}

namespace
{

std::uint32_t validate_evenup(const lambda_class &u, const std::vector<std::int64_t> &m, std::uint32_t l)
{
    const auto top = u.top();
    if (!top || *top == 0) {
        precondition("the class must have a positive top level");
    }
    const auto n = *top;
    if (m.size() != n + 1) {
        precondition("expected " + std::to_string(n + 1) + " increments, got " + std::to_string(m.size()));
    }
    std::int64_t alternating = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        alternating += (i % 2 == 0) ? m[i] : -m[i];
    }
    if (alternating != 0) {
        precondition("increments must have alternating sum 0, got " + std::to_string(alternating));
    }
    if (l < 3) {
        precondition("l must be at least 3");
    }
    for (const auto &[level, c] : u.levels()) {
        if (c.dim() + 2 > l) {
            precondition("l = " + std::to_string(l) + " is below dim(U_" + std::to_string(level) + ") + 2");
        }
    }
    return n;
}

} // namespace

std::vector<oclass> evenup_target(const lambda_class &u, const std::vector<std::int64_t> &m, std::uint32_t l)
{
    const auto n = validate_evenup(u, m, l);
    std::vector<oclass> out;
    out.reserve(n + 1);
    out.emplace_back(l - 2, m[0] + u.at(0).chi());
    for (std::uint32_t i = 1; i <= n; ++i) {
        out.emplace_back(l, m[i] + u.at(i).chi());
    }
    return out;
}

blowup_plan evenup_plan(const lambda_class &u, const std::vector<std::int64_t> &m, std::uint32_t l)
{
    const auto n = validate_evenup(u, m, l);

    blowup_plan plan;
    lambda_class current = u;
    std::vector<std::int64_t> increment = m;
    const auto emit = [&](const blowup_step &step) {
        current = blowup_apply(current, step);
        plan.steps.push_back(step);
    };

    // Blow up one point of U_n so that dim(U_n) >= 2 and U_{n-1} is nonempty.
    if (const oclass top = current.at(n); top.dim() < 2 || current.at(n - 1).is_zero()) {
        emit({n, oclass::point(), oclass(top.dim(), top.chi() - 1)});
        increment[n] -= 1;
        increment[n - 1] -= 1;
    }

    const oclass cell = (l % 2 == 0) ? oclass::point() : oclass::open_cell(1);
    const std::uint32_t rounds = l / 2;
    const std::int64_t chain_chi = cell.chi() * ((std::int64_t{1} << rounds) - 1);

    for (std::uint32_t i = n; i >= 1; --i) {
        const oclass level = current.at(i);
        // Everything except the chain cell; it keeps the full dimension.
        const oclass rest(level.dim(), level.chi() - cell.chi());
        oclass piece = cell;
        for (std::uint32_t k = 0; k < rounds; ++k) {
            emit({i, piece, rest});
            piece = piece * q_class();
        }
        // Points (chi 1) or open intervals (chi -1) for the remaining increment.
        if (const std::int64_t s = increment[i] - chain_chi; s != 0) {
            const oclass locus = s > 0 ? oclass(0, s) : oclass(1, s);
            emit({i, locus, oclass(rest.dim(), rest.chi() - s) + piece});
        }
        increment[i - 1] -= increment[i];
    }
    return plan;
}

bool isp_related(const lambda_class &u, const lambda_class &v)
{
    if (u.is_zero() || v.is_zero()) {
        return u.is_zero() && v.is_zero();
    }
    if (*u.top() != *v.top()) {
        return false;
    }
    if (*u.top() == 0) {
        return u == v;
    }
    return chi_alt(u) == chi_alt(v);
}

// ---------------------------------------------------------------- O|_O

namespace
{

odouble from_oclass(const oclass &c)
{
    if (c.dim() == 0) {
        return odouble_shared{c.chi()};
    }
    return odouble_plain{c.dim(), c.chi()};
}

// Shared and plain values live in the first copy of O.
oclass as_oclass(const odouble &x)
{
    if (const auto *s = std::get_if<odouble_shared>(&x)) {
        return {0, s->k};
    }
    const auto &p = std::get<odouble_plain>(x);
    return {p.dim, p.chi};
}

// The chi component in either copy.
std::int64_t chi_of(const odouble &x)
{
    return std::visit(
        [](const auto &v) -> std::int64_t {
            if constexpr (std::is_same_v<std::decay_t<decltype(v)>, odouble_shared>) {
                return v.k;
            } else {
                return v.chi;
            }
        },
        x);
}

} // namespace

odouble canonical(const odouble &x)
{
    if (const auto *s = std::get_if<odouble_shared>(&x)) {
        if (s->k < 0) {
            raise(error_kind::domain_error, "shared part is N; got " + std::to_string(s->k));
        }
        return x;
    }
    if (const auto *p = std::get_if<odouble_plain>(&x)) {
        return from_oclass(oclass(p->dim, p->chi));
    }
    const auto &d = std::get<odouble_dom>(x);
    if (d.n == 0) {
        return from_oclass(oclass(0, d.chi));
    }
    return x;
}

odouble odouble_add(const odouble &x0, const odouble &y0)
{
    const auto x = canonical(x0);
    const auto y = canonical(y0);
    const auto *dx = std::get_if<odouble_dom>(&x);
    const auto *dy = std::get_if<odouble_dom>(&y);
    if (dx && dy) {
        return odouble_dom{std::max(dx->n, dy->n), dx->chi + dy->chi};
    }
    // (a, b) + (c, d) = (c, b + d) with (c, d) in the dominator.
    if (dx) {
        return odouble_dom{dx->n, chi_of(y) + dx->chi};
    }
    if (dy) {
        return odouble_dom{dy->n, chi_of(x) + dy->chi};
    }
    return from_oclass(as_oclass(x) + as_oclass(y));
}

odouble odouble_mul(const odouble &x0, const odouble &y0)
{
    const auto x = canonical(x0);
    const auto y = canonical(y0);
    const auto *dx = std::get_if<odouble_dom>(&x);
    const auto *dy = std::get_if<odouble_dom>(&y);
    if (dx && dy) {
        return odouble_dom{dx->n + dy->n, dx->chi * dy->chi};
    }
    const auto is_zero = [](const odouble &v) {
        const auto *s = std::get_if<odouble_shared>(&v);
        return s != nullptr && s->k == 0;
    };
    // (a, b) (c, d) = (c, b d) with (c, d) in the dominator; zero absorbs.
    if (dx) {
        return is_zero(y) ? odouble{odouble_shared{0}} : odouble{odouble_dom{dx->n, chi_of(y) * dx->chi}};
    }
    if (dy) {
        return is_zero(x) ? odouble{odouble_shared{0}} : odouble{odouble_dom{dy->n, chi_of(x) * dy->chi}};
    }
    return from_oclass(as_oclass(x) * as_oclass(y));
}

odouble to_odouble(const lambda_class &u)
{
    const auto top = u.top();
    if (!top) {
        return odouble_shared{0};
    }
    if (*top == 0) {
        return from_oclass(u.at(0));
    }
    return odouble_dom{*top, chi_alt(u)};
}

std::int64_t integrate(const lambda_class &u)
{
    return chi_alt(u);
}

} // namespace hahn
