#pragma once

#include <stdexcept>
#include <string>

namespace cagegen {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnknownColor : Error { using Error::Error; };
struct DuplicateMotif : Error { using Error::Error; };
struct EmptyBase : Error { using Error::Error; };
struct NotSaturated : Error { using Error::Error; };
struct NonPlanar : Error { using Error::Error; };
struct NotFoldable : Error { using Error::Error; };
struct InvalidPair : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };
struct NonTerminating : Error { using Error::Error; };
struct UnknownField : Error { using Error::Error; };
struct BudgetExceeded : Error { using Error::Error; };

// Parse failure with 1-based line number.
struct ParseError : Error {
    int line;
    ParseError(int line_no, const std::string& what_arg)
        : Error("line " + std::to_string(line_no) + ": " + what_arg), line(line_no) {}
};

} // namespace cagegen
