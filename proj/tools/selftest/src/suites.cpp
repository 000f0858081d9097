#include <hahn/selftest/suites.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <stdexcept>

#include <hahn/blowup.hpp>
#include <hahn/error.hpp>
#include <hahn/euler.hpp>
#include <hahn/selftest/generators.hpp>
#include <hahn/tempered.hpp>
#include <hahn/valuation.hpp>
#include <hahn/wire.hpp>

namespace hahn::selftest
{

namespace
{

using json = nlohmann::json;

// Counts samples and failures, keeps the first failure message and hashes
// every recorded value.
class recorder
{
public:
    recorder(std::string name, int criterion)
    {
        m_result.name = std::move(name);
        m_result.criterion = criterion;
    }

    void sample()
    {
        ++m_result.samples;
    }

    void check(bool ok, const std::string &what)
    {
        if (!ok) {
            fail(what);
        }
    }

    void fail(const std::string &what)
    {
        ++m_result.failures;
        if (!m_result.first_failure) {
            m_result.first_failure = what;
        }
    }

    // Runs one sample body; a library exception counts as a failure.
    void attempt(const std::string &label, const std::function<void()> &body)
    {
        sample();
        try {
            body();
        } catch (const error &e) {
            fail(label + ": " + std::string(to_string(e.kind())) + ": " + e.what());
        }
    }

    template <typename T>
    void record(const T &value)
    {
        hash(wire::to_json(value).dump());
    }

    void record_int(std::int64_t v)
    {
        hash(std::to_string(v));
    }

    suite_result finish()
    {
        m_result.digest = m_hash;
        return m_result;
    }

private:
    void hash(const std::string &text)
    {
        for (const unsigned char ch : text) {
            m_hash ^= ch;
            m_hash *= 0x100000001b3ull;
        }
        m_hash ^= 0xff;
        m_hash *= 0x100000001b3ull;
    }

    suite_result m_result;
    std::uint64_t m_hash = 0xcbf29ce484222325ull;
};

numeric_context exact_context()
{
    return {};
}

numeric_context float_context()
{
    numeric_context ctx;
    ctx.arithmetic = mode::floating;
    ctx.precision_bits = 256;
    return ctx;
}

std::string show(const series &a)
{
    return wire::to_json(a).dump();
}

// Agreement within tau on every exponent below `below`; both sides must be
// known that far.
bool agree_below(const series &a, const series &b, const scalar &below, const numeric_context &ctx)
{
    return approx_equal_below(a, b, below, ctx);
}

// ------------------------------------------------------------------ 1

suite_result ring_laws(std::uint64_t seed)
{
    recorder rec("ring", 1);
    gen::rng_t rng(seed);
    gen::series_shape shape;
    shape.max_terms = 6;
    shape.exp_lo = -5;
    shape.exp_hi = 5;
    shape.exp_den = 4;
    for (int i = 0; i < 1000; ++i) {
        const series a = gen::exact_series(rng, shape);
        const series b = gen::exact_series(rng, shape);
        const series c = gen::exact_series(rng, shape);
        rec.attempt("ring sample " + std::to_string(i), [&] {
            const std::string where = " at sample " + std::to_string(i);
            rec.check((a + b) + c == a + (b + c), "addition is not associative" + where);
            rec.check(a + b == b + a, "addition is not commutative" + where);
            const series ab = a * b;
            rec.check(ab * c == a * (b * c), "multiplication is not associative" + where);
            rec.check(ab == b * a, "multiplication is not commutative" + where);
            rec.check(a * (b + c) == ab + a * c, "distributivity fails" + where);
            rec.check((a - a).is_exact_zero(), "a - a is not the exact zero" + where);

            // a * invert(a) = 1 + O(t^delta), delta >= min(target, omega_a - 2q).
            // Half of the inverses are taken from a truncated copy of a.
            series base = a;
            if (i % 2 == 1) {
                base = clip(a, a.terms().back().exponent + scalar(1));
            }
            const scalar target = gen::rational(rng, 1, 6, 2);
            const series inv = invert(base, target);
            const series prod = base * inv;
            const scalar q = base.terms().front().exponent;
            order_t delta = target;
            if (base.order()) {
                // With q < 0 a truncated input only determines a * a^-1 up to omega_a - q.
                const scalar lost = raw_compare(q, scalar(0)) < 0 ? q : q + q;
                delta = min_order(delta, *base.order() - lost);
            }
            const bool one = prod.terms().size() == 1 && prod.terms()[0].exponent == scalar(0)
                             && prod.terms()[0].coeff == scalar(1);
            rec.check(one && !order_less(prod.order(), delta), "a * invert(a) = " + show(prod) + where);
            rec.record(ab);
            rec.record(inv);
        });
    }
    return rec.finish();
}

// ------------------------------------------------------------------ 2

suite_result axioms(std::uint64_t seed)
{
    recorder rec("axioms", 2);
    gen::rng_t rng(seed);
    const auto ex = exact_context();
    const auto fl = float_context();
    gen::series_shape shape;

    // vv and ac are multiplicative; vv(VF+) = Gamma+.
    for (int i = 0; i < 1000; ++i) {
        const series a = gen::exact_series(rng, shape);
        const series b = gen::exact_series(rng, shape);
        rec.attempt("homomorphism sample " + std::to_string(i), [&] {
            const series ab = a * b;
            rec.check(vv(ab) == vv(a) * vv(b), "vv(ab) != vv(a) vv(b) for " + show(a) + ", " + show(b));
            rec.check(ac(ab) == ac(a) * ac(b), "ac(ab) != ac(a) ac(b) for " + show(a) + ", " + show(b));
            rec.check((compare(a, series()) == comparison::greater) == vv(a).is_positive(),
                      "sign of " + show(a) + " disagrees with vv");
            rec.record(vv(ab));
        });
    }

    // vv o pi = ac o pi = id, within tau at P = 256.
    for (int i = 0; i < 1000; ++i) {
        scalar alpha = gen::real(rng, -50, 50, fl);
        rec.attempt("cross-section sample " + std::to_string(i), [&] {
            if (is_negligible(alpha)) {
                alpha = promote(scalar(1), fl);
            }
            const series p = pi(alpha, fl);
            rec.check(approx_eq(ac(p), alpha, fl), "ac(pi(a)) != a for a = " + to_text(alpha));
            rec.check(approx_eq(embed_gamma(vv(p), fl), alpha, fl), "vv(pi(a)) != a for a = " + to_text(alpha));
        });
    }

    // Residue laws for units.
    gen::series_shape unit_shape;
    unit_shape.exp_lo = 1;
    unit_shape.exp_hi = 5;
    unit_shape.min_terms = 0;
    unit_shape.max_terms = 4;
    for (int i = 0; i < 1000; ++i) {
        const scalar r = gen::nonzero_rational(rng, -9, 9, 4);
        const scalar s = i % 3 == 0 ? r : gen::nonzero_rational(rng, -9, 9, 4);
        const series a = series::constant(r) + gen::exact_series(rng, unit_shape);
        const series b = series::constant(s) + gen::exact_series(rng, unit_shape);
        rec.attempt("residue sample " + std::to_string(i), [&] {
            const auto m = classify(a, ex);
            rec.check(m.in_u && !m.in_m, show(a) + " should be a unit");
            rec.check(residue(series::constant(ac(a))) == residue(a), "res(ac(a)) != res(a) for " + show(a));
            if (residue(a) == residue(b)) {
                rec.check(ac(a) == ac(b), "equal residues but different ac for " + show(a) + ", " + show(b));
            }
            rec.check(residue(a * b) == residue(a) * residue(b), "res is not multiplicative");
            rec.check(residue(a + b) == residue(a) + residue(b), "res is not additive");
            rec.check(residue(invert(a, scalar(4))) == scalar(1) / residue(a), "res(1/a) != 1/res(a)");
            rec.record(residue(a * b));
        });
    }
    return rec.finish();
}

// ------------------------------------------------------------------ 3

suite_result lg_kd(std::uint64_t seed)
{
    recorder rec("lg", 3);
    gen::rng_t rng(seed);
    const auto ex = exact_context();
    const auto fl = float_context();
    gen::series_shape shape;
    shape.max_terms = 4;
    for (int i = 0; i < 500; ++i) {
        series a = gen::exact_series(rng, shape);
        if (i % 4 == 0) {
            a = lg(a);
        }
        rec.attempt("lg sample " + std::to_string(i), [&] {
            const series l = lg(a);
            rec.check(leading(l) == leading(a), "rv(lg(a)) != rv(a) for " + show(a));
            rec.check(lg(l) == l, "lg is not idempotent on " + show(a));
            const bool single = a.is_exact() && a.terms().size() == 1;
            rec.check(classify(a, ex).in_kd == single, "in_KD disagrees with single-term for " + show(a));
            rec.check(classify(a, ex).in_kd == (l == a), "in_KD disagrees with lg(a) = a for " + show(a));

            // lg(a) = pi(a'') a' / a'' with a'' = embed(vv(a)), a' = ac(a).
            const scalar ddot = embed_gamma(vv(a), fl);
            const series formula = scale(pi(ddot, fl), ac(a) / ddot);
            const bool ok = formula.terms().size() == 1 && approx_eq(formula.terms()[0].exponent, l.terms()[0].exponent, fl)
                            && approx_eq(formula.terms()[0].coeff, l.terms()[0].coeff, fl);
            rec.check(ok, "lg formula mismatch for " + show(a) + ": " + show(formula));
            rec.record(l);
        });
    }
    return rec.finish();
}

// ------------------------------------------------------------------ 4

suite_result exp_log(std::uint64_t seed)
{
    recorder rec("exp-log", 4);
    gen::rng_t rng(seed);
    const auto ex = exact_context();
    const auto fl = float_context();
    gen::series_shape shape;
    shape.max_terms = 4;
    shape.exp_hi = 3;
    shape.exp_den = 2;
    shape.coeff_lo = -3;
    shape.coeff_hi = 3;
    const scalar omega(6);
    for (int i = 0; i < 500; ++i) {
        const series a = gen::o_element(rng, shape);
        const series b = gen::o_element(rng, shape);
        const long n = gen::uniform_int(rng, -3, 3);
        // Positive unit with residue 1 keeps log and exp rational.
        gen::series_shape m_shape = shape;
        m_shape.exp_lo = 1;
        const series u = series::constant(scalar(1)) + gen::exact_series(rng, m_shape);
        rec.attempt("exp/log sample " + std::to_string(i), [&] {
            const series lhs = exp_series(a + b, omega, fl);
            const series rhs = clip(exp_series(a, omega, fl) * exp_series(b, omega, fl), omega);
            rec.check(agree_below(lhs, rhs, omega, fl), "exp(a + b) != exp(a) exp(b) for " + show(a) + ", " + show(b));
            const series back = log_series(exp_series(a, omega, fl), omega, fl);
            rec.check(agree_below(back, a, omega, fl), "log(exp(a)) != a for " + show(a));

            const series p = pow_unit(u, series::constant(scalar(n)), omega, ex);
            const series ring = clip(pow_int(u, n, omega), omega);
            rec.check(clip(p, omega) == ring, "pow_unit(b, " + std::to_string(n) + ") != b^n for b = " + show(u));
            rec.record(p);
        });
    }
    return rec.finish();
}

// ------------------------------------------------------------------ 5

suite_result identities(std::uint64_t seed)
{
    recorder rec("identities", 5);
    gen::rng_t rng(seed);
    const auto fl = float_context();
    gen::series_shape shape;
    shape.max_terms = 3;
    shape.exp_lo = -3;
    shape.exp_hi = 3;
    shape.exp_den = 1;
    shape.coeff_lo = -4;
    shape.coeff_hi = 4;
    shape.coeff_den = 2;
    const scalar omega(16);
    // |q gamma| <= 6, so this headroom keeps every product known below omega.
    const scalar work = omega + scalar(7);
    for (int i = 0; i < 200; ++i) {
        const series a = gen::positive_series(rng, shape);
        const series b = gen::positive_series(rng, shape);
        const scalar g = gen::rational(rng, -2, 2, 4);
        const scalar h = gen::rational(rng, -2, 2, 4);
        const scalar alpha = gen::real(rng, 0.125, 8, fl);
        rec.attempt("identity sample " + std::to_string(i), [&] {
            const std::string where = " for a = " + show(a) + ", g = " + to_text(g);
            const series ag = tempered_power(a, g, work, fl);
            rec.check(vv(ag) == gamma_pow(vv(a), g), "vv(a^g) != vv(a)^g" + where);

            const series pa = tempered_power(pi(alpha, fl), g, work, fl);
            const scalar expected = exp_scalar(g * log_scalar(alpha, fl), fl);
            rec.check(approx_eq(ac(pa), expected, fl), "ac(pi(x)^g) != x^g for x = " + to_text(alpha));

            const series abg = tempered_power(a * b, g, work, fl);
            rec.check(agree_below(abg, clip(ag * tempered_power(b, g, work, fl), omega), omega, fl),
                      "(ab)^g != a^g b^g" + where);

            // (a^g)^h needs a^g known further out: its budget loses q g (h - 1).
            const series ag_far = tempered_power(a, g, work + scalar(19), fl);
            const series agh = tempered_power(ag_far, h, work, fl);
            rec.check(agree_below(agh, tempered_power(a, g * h, work, fl), omega, fl), "(a^g)^h != a^(gh)" + where);

            const series sum = tempered_power(a, g + h, work, fl);
            rec.check(agree_below(sum, clip(ag * tempered_power(a, h, work, fl), omega), omega, fl),
                      "a^(g+h) != a^g a^h" + where);
            rec.record(vv(ag));
        });
    }
    return rec.finish();
}

// ------------------------------------------------------------------ 6

suite_result derivative(std::uint64_t seed)
{
    recorder rec("derivative", 6);
    gen::rng_t rng(seed);
    const auto fl = float_context();
    const scalar n(32);
    const scalar cutoff(16);
    for (int i = 0; i < 100; ++i) {
        // a = c t^q (1 + sum c_k t^k), q a half integer in [-3, 3], k in {1, 2, 3}.
        const scalar q = gen::rational(rng, -3, 3, 2);
        const scalar lead = gen::rational(rng, 1, 5, 3);
        std::vector<term> terms{term{q, is_negligible(lead) ? scalar(1) : lead}};
        for (long k = 1; k <= 3; ++k) {
            if (gen::uniform_int(rng, 0, 1) == 1) {
                terms.push_back(term{q + scalar(k), gen::nonzero_rational(rng, -4, 4, 2)});
            }
        }
        const series a = series::from_terms(std::move(terms));
        // Every tenth sample uses an integer exponent.
        const scalar g = i % 10 == 0 ? scalar(gen::uniform_int(rng, -2, 2)) : gen::rational(rng, -2, 2, 4);
        rec.attempt("derivative sample " + std::to_string(i), [&] {
            rec.check(derivative_check(a, g, n, cutoff, fl),
                      "derivative check fails for a = " + show(a) + ", g = " + to_text(g));
            rec.record(a);
        });
    }
    return rec.finish();
}

// ------------------------------------------------------------------ 7

suite_result no_cancellation(std::uint64_t seed)
{
    recorder rec("no-cancellation", 7);
    gen::rng_t rng(seed);
    gen::series_shape shape;
    for (int i = 0; i < 1000; ++i) {
        const series b = gen::exact_series(rng, shape);
        const scalar q = b.terms().front().exponent;
        const scalar c = gen::rational(rng, 1, 9, 4);
        const scalar lead = sgn(ac(b)) > 0 ? c : -c;
        gen::series_shape tail_shape = shape;
        tail_shape.min_terms = 0;
        tail_shape.exp_lo = 1;
        tail_shape.exp_hi = 6;
        const series b2 = series::monomial(is_negligible(lead) ? ac(b) : lead, q)
                          + shift(gen::exact_series(rng, tail_shape), q);
        rec.attempt("cancellation sample " + std::to_string(i), [&] {
            if (!(vv(b) == vv(b2))) {
                rec.fail("generator produced different vv");
                return;
            }
            rec.check(vv(b + b2) == vv(b), "vv(b + b') != vv(b) for " + show(b) + ", " + show(b2));
            rec.record(vv(b + b2));
        });
    }
    return rec.finish();
}

// ------------------------------------------------------------------ 8

suite_result euler_laws(std::uint64_t seed)
{
    recorder rec("euler", 8);
    gen::rng_t rng(seed);
    rec.attempt("measure of Q", [&] {
        const oclass q = measure(cell_expr::named(cell_expr::kind::q));
        rec.check(q == oclass(2, 2), "measure(Q) = " + wire::to_json(q).dump());
        rec.record(q);
    });
    for (int i = 0; i < 1000; ++i) {
        const oclass x = gen::oclass_value(rng, 6, 40);
        const oclass y = gen::oclass_value(rng, 6, 40);
        const oclass z = gen::oclass_value(rng, 6, 40);
        rec.attempt("semiring sample " + std::to_string(i), [&] {
            const std::string where = " for " + wire::to_json(std::vector<oclass>{x, y, z}).dump();
            rec.check((x + y) + z == x + (y + z), "class addition is not associative" + where);
            rec.check(x + y == y + x, "class addition is not commutative" + where);
            rec.check((x * y) * z == x * (y * z), "class multiplication is not associative" + where);
            rec.check(x * y == y * x, "class multiplication is not commutative" + where);
            rec.check(x * (y + z) == x * y + x * z, "distributivity fails" + where);
            rec.check(x + oclass::zero() == x && x * oclass::point() == x, "units fail" + where);
            rec.check(x * oclass::zero() == oclass::zero(), "zero does not absorb" + where);
            rec.record(x * (y + z));
        });
    }
    for (int i = 0; i < 1000; ++i) {
        const auto u = gen::lambda_value(rng, 5, 5, 20, false);
        const auto v = gen::lambda_value(rng, 5, 5, 20, false);
        rec.attempt("chi_alt sample " + std::to_string(i), [&] {
            rec.check(chi_alt(u + v) == chi_alt(u) + chi_alt(v), "chi_alt is not additive");
            rec.check(chi_alt(u * v) == chi_alt(u) * chi_alt(v), "chi_alt is not multiplicative");
            rec.record(u * v);
        });
    }
    return rec.finish();
}

// ------------------------------------------------------------------ 9

// A random step that fits v; v must have a nonempty positive level.
blowup_step random_step(gen::rng_t &rng, const lambda_class &v)
{
    std::vector<std::uint32_t> levels;
    for (const auto &[level, c] : v.levels()) {
        if (level > 0) {
            levels.push_back(level);
        }
    }
    const auto n = levels[static_cast<std::size_t>(gen::uniform_int(rng, 0, static_cast<long>(levels.size()) - 1))];
    const oclass vn = v.at(n);
    if (vn.dim() == 0) {
        const long k = gen::uniform_int(rng, 1, vn.chi());
        return {n, oclass(0, k), oclass(0, vn.chi() - k)};
    }
    switch (gen::uniform_int(rng, 0, 2)) {
        case 0: {
            // Lower-dimensional locus, full-dimensional remainder.
            const auto d = static_cast<std::uint32_t>(gen::uniform_int(rng, 0, vn.dim() - 1));
            const oclass locus = d == 0 ? oclass(0, gen::uniform_int(rng, 1, 5)) : oclass(d, gen::uniform_int(rng, -5, 5));
            return {n, locus, oclass(vn.dim(), vn.chi() - locus.chi())};
        }
        case 1:
            // Everything.
            return {n, vn, oclass::zero()};
        default: {
            // Full-dimensional locus, a finite set left over.
            const long k = gen::uniform_int(rng, 0, 4);
            return {n, oclass(vn.dim(), vn.chi() - k), oclass(0, k)};
        }
    }
}

suite_result blowups(std::uint64_t seed)
{
    recorder rec("blowup", 9);
    gen::rng_t rng(seed);

    // chi_alt along random plans.
    for (int i = 0; i < 200; ++i) {
        const auto top = static_cast<std::uint32_t>(gen::uniform_int(rng, 1, 4));
        const auto u = gen::lambda_value(rng, top, 4, 10);
        const auto length = gen::uniform_int(rng, 1, 10);
        rec.attempt("plan sample " + std::to_string(i), [&] {
            lambda_class cur = u;
            for (long k = 0; k < length; ++k) {
                const auto step = random_step(rng, cur);
                const auto next = blowup_apply(cur, step);
                rec.check(chi_alt(next) == chi_alt(u), "chi_alt changed along a plan from " + wire::to_json(u).dump());
                rec.check(next.top() == cur.top(), "blowup changed the top level");
                cur = next;
            }
            rec.record(cur);
        });
    }

    // Planner reproduces the target signature, including odd l.
    for (int i = 0; i < 100; ++i) {
        const auto n = static_cast<std::uint32_t>(gen::uniform_int(rng, 1, 4));
        const auto u = gen::lambda_value(rng, n, 6, 12);
        std::uint32_t max_dim = 0;
        for (const auto &[level, c] : u.levels()) {
            max_dim = std::max(max_dim, c.dim());
        }
        const auto l_min = std::max<std::uint32_t>(3, max_dim + 2);
        const auto l = static_cast<std::uint32_t>(gen::uniform_int(rng, l_min, std::max<std::uint32_t>(l_min, 12)));
        std::vector<std::int64_t> m(n + 1);
        std::int64_t alt = 0;
        for (std::uint32_t k = 1; k <= n; ++k) {
            m[k] = gen::uniform_int(rng, -50, 50);
            alt += k % 2 == 0 ? m[k] : -m[k];
        }
        // Keep |m_0| <= 50 by trimming the level-1 entry when needed.
        if (alt > 50 || alt < -50) {
            const std::int64_t excess = alt > 0 ? alt - 50 : alt + 50;
            m[1] += excess;
            alt -= excess;
        }
        m[0] = -alt;
        rec.attempt("evenup sample " + std::to_string(i), [&] {
            const auto plan = evenup_plan(u, m, l);
            const auto done = blowup_apply(u, plan);
            rec.check(signature(done) == evenup_target(u, m, l),
                      "evenup missed its target for " + wire::to_json(u).dump() + " with l = " + std::to_string(l));
            rec.check(chi_alt(done) == chi_alt(u), "evenup changed chi_alt");
            rec.record(plan);
        });
    }

    // Isp congruence, quotient map, realizability.
    for (int i = 0; i < 200; ++i) {
        const auto top = static_cast<std::uint32_t>(gen::uniform_int(rng, 0, 3));
        const auto u = gen::lambda_value(rng, top, 3, 8);
        const auto v = gen::lambda_value(rng, static_cast<std::uint32_t>(gen::uniform_int(rng, 0, 3)), 3, 8);
        // Isp-related partners: blown-up copies (top > 0) or equal classes.
        const auto related = [&](const lambda_class &x) {
            lambda_class y = x;
            if (*x.top() > 0) {
                for (long k = gen::uniform_int(rng, 0, 3); k > 0; --k) {
                    y = blowup_apply(y, random_step(rng, y));
                }
            }
            return y;
        };
        const auto u2 = related(u);
        const auto v2 = related(v);
        rec.attempt("isp sample " + std::to_string(i), [&] {
            rec.check(isp_related(u, u2) && isp_related(v, v2), "blowups left the Isp class");
            rec.check(isp_related(u + v, u2 + v2), "Isp is not compatible with addition");
            rec.check(isp_related(u * v, u2 * v2), "Isp is not compatible with multiplication");
            rec.check((to_odouble(u) == to_odouble(v)) == isp_related(u, v), "kernel of the quotient map is not Isp");
            rec.check(to_odouble(u) == to_odouble(u2), "quotient map is not constant on Isp classes");
            rec.check(to_odouble(u + v) == odouble_add(to_odouble(u), to_odouble(v)), "quotient map is not additive");
            rec.check(to_odouble(u * v) == odouble_mul(to_odouble(u), to_odouble(v)),
                      "quotient map is not multiplicative");
            rec.check(integrate(u) == chi_alt(u), "integrate != chi_alt");
            rec.check(integrate(u * v) == integrate(u) * integrate(v), "integrate is not multiplicative");

            // Realizability: even both sides up with m_i = chi(V_i) - chi(U_i).
            if (*u.top() > 0 && isp_related(u, u2)) {
                const auto n = *u.top();
                std::vector<std::int64_t> mu(n + 1), mv(n + 1, 0);
                for (std::uint32_t k = 0; k <= n; ++k) {
                    mu[k] = u2.at(k).chi() - u.at(k).chi();
                }
                std::uint32_t max_dim = 0;
                for (const auto *x : {&u, &u2}) {
                    for (const auto &[level, c] : x->levels()) {
                        max_dim = std::max(max_dim, c.dim());
                    }
                }
                const auto l = std::max<std::uint32_t>(3, max_dim + 2);
                const auto left = blowup_apply(u, evenup_plan(u, mu, l));
                const auto right = blowup_apply(u2, evenup_plan(u2, mv, l));
                rec.check(signature(left) == signature(right), "Isp-related classes did not meet");
            }
            rec.record(to_odouble(u * v));
        });
    }

    // Cross rules: (a, b) + (c, d) = (c, b + d) and (a, b)(c, d) = (c, b d)
    // with (c, d) in the dominating copy.
    for (int i = 0; i < 200; ++i) {
        const auto a = static_cast<std::uint32_t>(gen::uniform_int(rng, 1, 6));
        const auto b = gen::uniform_int(rng, -20, 20);
        const auto c = static_cast<std::uint32_t>(gen::uniform_int(rng, 1, 6));
        const auto d = gen::uniform_int(rng, -20, 20);
        const auto k = gen::uniform_int(rng, 1, 20);
        rec.attempt("cross rule sample " + std::to_string(i), [&] {
            const odouble plain = odouble_plain{a, b};
            const odouble dom = odouble_dom{c, d};
            rec.check(odouble_add(plain, dom) == odouble{odouble_dom{c, b + d}}, "plain + dominator rule");
            rec.check(odouble_mul(plain, dom) == odouble{odouble_dom{c, b * d}}, "plain * dominator rule");
            rec.check(odouble_add(odouble_shared{k}, dom) == odouble{odouble_dom{c, k + d}}, "shared + dominator rule");
            rec.check(odouble_mul(odouble_shared{k}, dom) == odouble{odouble_dom{c, k * d}}, "shared * dominator rule");
            rec.check(odouble_add(plain, odouble_shared{k}) == odouble{odouble_plain{a, b + k}}, "plain + shared rule");
            rec.record(odouble_mul(plain, dom));
        });
    }
    return rec.finish();
}

struct entry {
    suite_info info;
    suite_result (*run)(std::uint64_t);
};

const std::vector<entry> &registry()
{
    static const std::vector<entry> suites{
        {{"ring", 1, "ring laws and inverse precision in exact mode"}, ring_laws},
        {{"axioms", 2, "vv, ac, pi, residue and sign axioms"}, axioms},
        {{"lg", 3, "lg idempotence, rv and KD membership"}, lg_kd},
        {{"exp-log", 4, "exp/log homomorphism and inverse, pow_unit against ring powers"}, exp_log},
        {{"identities", 5, "tempered power identities"}, identities},
        {{"derivative", 6, "finite difference derivative of tempered powers"}, derivative},
        {{"no-cancellation", 7, "leading terms of equal vv do not cancel"}, no_cancellation},
        {{"euler", 8, "class semiring laws and chi_alt"}, euler_laws},
        {{"blowup", 9, "blowups, evenup planner, Isp and O|_O"}, blowups},
    };
    return suites;
}

} // namespace

const std::vector<suite_info> &suite_list()
{
    static const std::vector<suite_info> list = [] {
        std::vector<suite_info> out;
        for (const auto &e : registry()) {
            out.push_back(e.info);
        }
        return out;
    }();
    return list;
}

suite_result run_suite(const std::string &name, std::uint64_t seed)
{
    for (const auto &e : registry()) {
        if (e.info.name == name) {
            const auto start = std::chrono::steady_clock::now();
            // Each suite gets its own stream so they can run independently.
            auto result = e.run(seed + static_cast<std::uint64_t>(e.info.criterion));
            result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            return result;
        }
    }
    throw std::invalid_argument("unknown suite '" + name + "'");
}

std::vector<suite_result> run(const std::string &which, std::uint64_t seed)
{
    std::vector<suite_result> out;
    if (which == "all") {
        for (const auto &e : registry()) {
            out.push_back(run_suite(e.info.name, seed));
        }
    } else {
        out.push_back(run_suite(which, seed));
    }
    return out;
}

nlohmann::json to_json(const suite_result &r)
{
    char digest[17];
    std::snprintf(digest, sizeof(digest), "%016llx", static_cast<unsigned long long>(r.digest));
    return {{"suite", r.name},
            {"criterion", r.criterion},
            {"samples", r.samples},
            {"failures", r.failures},
            {"digest", digest},
            {"first_failure", r.first_failure ? nlohmann::json(*r.first_failure) : nlohmann::json(nullptr)}};
}

nlohmann::json report(const std::vector<suite_result> &results)
{
    auto suites = nlohmann::json::array();
    bool ok = true;
    for (const auto &r : results) {
        suites.push_back(to_json(r));
        ok = ok && r.ok();
    }
    return {{"passed", ok}, {"suites", std::move(suites)}};
}

} // namespace hahn::selftest
