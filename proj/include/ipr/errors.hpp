#pragma once

#include <stdexcept>
#include <string>

namespace ipr {

// Base class for everything this library throws.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input document (JSON files, rational literals).
struct ParseError : Error {
    using Error::Error;
};

// Precondition violated by a caller-supplied value.
struct InvalidArgument : Error {
    using Error::Error;
};

// Enumeration budget exceeded before the requested work finished.
struct BudgetExceeded : Error {
    using Error::Error;
};

} // namespace ipr
