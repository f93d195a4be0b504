#include "monoscroll/error.hpp"

namespace monoscroll {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::EmptyGenerators: return "EmptyGenerators";
        case ErrorKind::GcdNotOne: return "GcdNotOne";
        case ErrorKind::BoundExceeded: return "BoundExceeded";
        case ErrorKind::NotAValidKappaStar: return "NotAValidKappaStar";
        case ErrorKind::NotIncreasing: return "NotIncreasing";
        case ErrorKind::GenusZero: return "GenusZero";
        case ErrorKind::ZeroExponent: return "ZeroExponent";
        case ErrorKind::NotUnibranchSingle: return "NotUnibranchSingle";
        case ErrorKind::NotTopDimensional: return "NotTopDimensional";
        case ErrorKind::UnsupportedDimension: return "UnsupportedDimension";
        case ErrorKind::PathsDisagree: return "PathsDisagree";
        case ErrorKind::NonIntegralGenus: return "NonIntegralGenus";
        case ErrorKind::UnknownFixture: return "UnknownFixture";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

}  // namespace monoscroll
