#include <hahn/error.hpp>

namespace hahn
{

std::string_view to_string(error_kind k) noexcept
{
    switch (k) {
        case error_kind::division_by_zero:
            return "DivisionByZero";
        case error_kind::ambiguous_sign:
            return "AmbiguousSign";
        case error_kind::mode_error:
            return "ModeError";
        case error_kind::domain_error:
            return "DomainError";
        case error_kind::no_leading_term:
            return "NoLeadingTerm";
        case error_kind::precision_gain:
            return "PrecisionGain";
        case error_kind::ambiguous:
            return "Ambiguous";
        case error_kind::not_in_o:
            return "NotInO";
        case error_kind::insufficient_precision:
            return "InsufficientPrecision";
        case error_kind::not_positive_unit:
            return "NotPositiveUnit";
        case error_kind::not_positive:
            return "NotPositive";
        case error_kind::invalid_step:
            return "InvalidStep";
        case error_kind::precondition_error:
            return "PreconditionError";
        case error_kind::parse_error:
            return "ParseError";
        case error_kind::io_error:
            return "IOError";
    }
    return "Unknown";
}

void raise(error_kind k, const std::string &what)
{
    throw error(k, what);
}

} // namespace hahn
