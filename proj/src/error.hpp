#pragma once

#include <stdexcept>
#include <string>

namespace nkecc {

enum class ErrorCode {
    ParseError,
    RadixMismatch,
    Underflow,
    DivisionByZero,
    Domain,
    ModulusMismatch,
    NonInvertible,
    NotOnCurve,
    SingularCurve,
    BadConfig,
};

// Single exception type for all library failures. The code survives the
// C boundary as a status value; the message is kept for diagnostics.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace nkecc
