#ifndef HAHN_EULER_HPP
#define HAHN_EULER_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace hahn
{

// Class of a definable set in the Grothendieck semiring O, which is fully
// determined by (dimension, Euler characteristic). The underlying set is
// ({0} x N) u (N+ x Z); (0, 0) is the class of the empty set.
class oclass
{
public:
    constexpr oclass() = default;
    // Throws domain_error for dim 0 with negative chi.
    oclass(std::uint32_t dim, std::int64_t chi);

    static constexpr oclass zero()
    {
        return {};
    }
    static oclass point()
    {
        return {0, 1};
    }
    static oclass open_cell(std::uint32_t dim);

    std::uint32_t dim() const noexcept
    {
        return m_dim;
    }
    std::int64_t chi() const noexcept
    {
        return m_chi;
    }
    bool is_zero() const noexcept
    {
        return m_dim == 0 && m_chi == 0;
    }

    friend bool operator==(const oclass &, const oclass &) = default;

private:
    std::uint32_t m_dim = 0;
    std::int64_t m_chi = 0;
};

// (a, b) + (c, d) = (max(a, c), b + d)
oclass operator+(const oclass &x, const oclass &y);
// (a, b) * (c, d) = (a + c, b d), with the empty class absorbing.
oclass operator*(const oclass &x, const oclass &y);

// Class of Q = K+ x (0,1) u K- x (-1,0).
oclass q_class();

// Small cell calculus used to ground class constants from first principles.
class cell_expr
{
public:
    enum class kind { point, open_interval, pos_ray, neg_ray, prod, disj_union, q_plus, q_minus, q, lambda };

    static cell_expr point();
    static cell_expr open_interval();
    static cell_expr pos_ray();
    static cell_expr neg_ray();
    static cell_expr prod(cell_expr a, cell_expr b);
    // Operands are disjoint by construction.
    static cell_expr disj_union(cell_expr a, cell_expr b);
    static cell_expr named(kind k);

    kind type() const noexcept
    {
        return m_kind;
    }
    const cell_expr &lhs() const
    {
        return *m_lhs;
    }
    const cell_expr &rhs() const
    {
        return *m_rhs;
    }

private:
    explicit cell_expr(kind k) : m_kind(k) {}

    kind m_kind;
    std::shared_ptr<const cell_expr> m_lhs;
    std::shared_ptr<const cell_expr> m_rhs;
};

// chi of a d-cell is (-1)^d; products multiply and disjoint unions add.
oclass measure(const cell_expr &e);

// Text form: Point, OpenInterval, PosRay, NegRay, Qplus, Qminus, Q, Lambda,
// Prod(a, b), DisjUnion(a, b). Throws parse_error.
cell_expr parse_cell_expr(std::string_view text);

// Element of gsk Lambda[*] = O[X]: a finitely supported map level -> class.
// Levels holding the empty class are never stored.
class lambda_class
{
public:
    lambda_class() = default;
    explicit lambda_class(std::map<std::uint32_t, oclass> levels);

    static lambda_class at_level(std::uint32_t level, const oclass &c);

    const std::map<std::uint32_t, oclass> &levels() const noexcept
    {
        return m_levels;
    }
    bool is_zero() const noexcept
    {
        return m_levels.empty();
    }
    // Largest stored level; U is in*-Lambda[<= n] iff top() == n.
    std::optional<std::uint32_t> top() const;
    // The empty class for unstored levels.
    oclass at(std::uint32_t level) const;

    void set(std::uint32_t level, const oclass &c);

    friend bool operator==(const lambda_class &, const lambda_class &) = default;

private:
    std::map<std::uint32_t, oclass> m_levels;
};

lambda_class operator+(const lambda_class &u, const lambda_class &v);
// Convolution (U V)_k = sum_{i+j=k} U_i V_j.
lambda_class operator*(const lambda_class &u, const lambda_class &v);

// sum_i (-1)^i chi(U_i)
std::int64_t chi_alt(const lambda_class &u);

// Dense (dim, chi) list from level 0 to top, empty levels as (0, 0).
std::vector<oclass> signature(const lambda_class &u);

} // namespace hahn

#endif
