#ifndef MONOSCROLL_ERROR_HPP
#define MONOSCROLL_ERROR_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace monoscroll {

enum class ErrorKind {
    EmptyGenerators,
    GcdNotOne,
    BoundExceeded,
    NotAValidKappaStar,
    NotIncreasing,
    GenusZero,
    ZeroExponent,
    NotUnibranchSingle,
    NotTopDimensional,
    UnsupportedDimension,
    PathsDisagree,
    NonIntegralGenus,
    UnknownFixture,
    InvalidArgument,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Validation failure raised by every public operation of the library.
///
/// `value()` carries the offending number where one exists (the gcd for
/// GcdNotOne, the requested genus for BoundExceeded, ...).
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message, std::optional<long long> value = std::nullopt)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind), value_(value) {}

    ErrorKind kind() const noexcept { return kind_; }
    std::optional<long long> value() const noexcept { return value_; }

private:
    ErrorKind kind_;
    std::optional<long long> value_;
};

}  // namespace monoscroll

#endif  // MONOSCROLL_ERROR_HPP
