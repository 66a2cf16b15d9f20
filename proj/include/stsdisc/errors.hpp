#pragma once

#include <stdexcept>

namespace stsdisc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidTripleError : Error { using Error::Error; };
struct InvalidSystemError : Error { using Error::Error; };
struct InvalidSubsetError : Error { using Error::Error; };
struct InvalidPermutationError : Error { using Error::Error; };
struct DimensionMismatchError : Error { using Error::Error; };
struct ConstructionDomainError : Error { using Error::Error; };
struct FeasibilityError : Error { using Error::Error; };
struct EmptyDomainError : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

}  // namespace stsdisc
