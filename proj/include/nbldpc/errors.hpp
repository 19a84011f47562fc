#pragma once

#include <stdexcept>
#include <string>

namespace nbldpc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Field / symbol domain
struct InvalidField : Error { using Error::Error; };
struct ZeroInverse : Error { using Error::Error; };
struct ZeroCoefficient : Error { using Error::Error; };
struct OutOfDomain : Error { using Error::Error; };

// Shapes and parameters
struct ShapeMismatch : Error { using Error::Error; };
struct DegreeMismatch : Error { using Error::Error; };
struct InvalidParams : Error { using Error::Error; };

// Code construction
struct InfeasibleDegrees : Error { using Error::Error; };
struct RankDeficient : Error { using Error::Error; };

// Code files
struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t line, std::size_t column)
        : Error(msg + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
          line(line),
          column(column) {}
    std::size_t line = 0;
    std::size_t column = 0;
};
struct ChecksumMismatch : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

}  // namespace nbldpc
