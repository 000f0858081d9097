#ifndef HAHN_ERROR_HPP
#define HAHN_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace hahn
{

enum class error_kind {
    division_by_zero,
    ambiguous_sign,
    mode_error,
    domain_error,
    no_leading_term,
    precision_gain,
    ambiguous,
    not_in_o,
    insufficient_precision,
    not_positive_unit,
    not_positive,
    invalid_step,
    precondition_error,
    parse_error,
    io_error,
};

// Stable wire name, e.g. "DivisionByZero".
std::string_view to_string(error_kind k) noexcept;

// Single exception type for the library; the kind carries the category.
class error : public std::runtime_error
{
public:
    error(error_kind k, const std::string &what) : std::runtime_error(what), m_kind(k) {}

    error_kind kind() const noexcept
    {
        return m_kind;
    }

private:
    error_kind m_kind;
};

[[noreturn]] void raise(error_kind k, const std::string &what);

} // namespace hahn

#endif
