#ifndef HAHN_BLOWUP_HPP
#define HAHN_BLOWUP_HPP

#include <cstdint>
#include <variant>
#include <vector>

#include <hahn/euler.hpp>

namespace hahn
{

// One blowup at class level. The level-n part V_n splits as
// locus + remainder; the locus C is replaced by C x Q at level n and a copy
// of C appears at level n - 1.
struct blowup_step {
    std::uint32_t level = 0;
    oclass locus;
    oclass remainder;

    friend bool operator==(const blowup_step &, const blowup_step &) = default;
};

struct blowup_plan {
    std::vector<blowup_step> steps;

    friend bool operator==(const blowup_plan &, const blowup_plan &) = default;
};

// Throws invalid_step when the step does not fit V (level 0, empty locus,
// empty V_n, or locus + remainder != V_n). Preserves chi_alt.
lambda_class blowup_apply(const lambda_class &v, const blowup_step &step);
lambda_class blowup_apply(const lambda_class &v, const blowup_plan &plan);

// Blowup plan taking U (top level n > 0) to the signature
//   ((l-2, m_0 + chi(U_0)), (l, m_1 + chi(U_1)), ..., (l, m_n + chi(U_n))).
//
// Preconditions (precondition_error otherwise): m has n+1 entries with
// alternating sum 0, l >= 3 and l >= dim(U_i) + 2 for every level.
//
// Levels are processed from n down to 1. At level i the locus A (a point for
// even l, an open interval for odd l) is blown up, then A x Q, A x Q^2, ...
// for floor(l/2) rounds, which adds sum_k 2^k chi(A) to both levels i and
// i-1. A final blowup at a disjoint union of points B and intervals C makes
// up the rest of the increment, with the smaller of #B, #C equal to zero.
// The increment for level i-1 is then reduced by the one just applied. A
// preliminary point blowup is emitted when dim(U_n) < 2 or U_{n-1} is empty.
blowup_plan evenup_plan(const lambda_class &u, const std::vector<std::int64_t> &m, std::uint32_t l);

// Signature the planner aims for.
std::vector<oclass> evenup_target(const lambda_class &u, const std::vector<std::int64_t> &m, std::uint32_t l);

// Isp congruence on classes: both zero; or both at top level 0 and equal
// (Isp[0] is trivial); or the same positive top level with equal chi_alt.
// A zero class is never related to a nonzero one.
bool isp_related(const lambda_class &u, const lambda_class &v);

// Elements of the semiring O|_O: two copies of O glued along {0} x N, the
// second one being the dominator.
struct odouble_shared {
    std::int64_t k = 0;
    friend bool operator==(const odouble_shared &, const odouble_shared &) = default;
};
struct odouble_plain {
    std::uint32_t dim = 1;
    std::int64_t chi = 0;
    friend bool operator==(const odouble_plain &, const odouble_plain &) = default;
};
struct odouble_dom {
    std::uint32_t n = 1;
    std::int64_t chi = 0;
    friend bool operator==(const odouble_dom &, const odouble_dom &) = default;
};

using odouble = std::variant<odouble_shared, odouble_plain, odouble_dom>;

// Puts values with dimension 0 into the shared part; rejects invalid data.
odouble canonical(const odouble &x);

odouble odouble_add(const odouble &x, const odouble &y);
odouble odouble_mul(const odouble &x, const odouble &y);

// Quotient map gsk Lambda[*] -> gsk Lambda[*] / Isp = O|_O.
odouble to_odouble(const lambda_class &u);

// Class-level integral to Z: the groupification collapses O|_O to Z via chi_alt.
std::int64_t integrate(const lambda_class &u);

} // namespace hahn

#endif
