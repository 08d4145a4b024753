#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace binext {

enum class ErrorKind {
    ParseError,
    DimensionMismatch,
    UnboundedPolyhedron,
    PointNotInPolytope,
    RangeViolation,
    NotBijective,
    NotABinarization,
    RangeMismatch,
    SizeLimitExceeded,
    NonNaturalBinarization,
    NoWitness,
    PersistencyViolation,
    InfeasibleRow,
    NonPositiveH,
};

std::string_view to_string(ErrorKind kind);

/** Every failure raised by the library carries one of the kinds above. */
class Error : public std::runtime_error
{
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace binext
