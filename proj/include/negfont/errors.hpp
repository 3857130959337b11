#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace negfont {

enum class ErrorCode {
    DimensionMismatch,
    ZeroVector,
    NonFinite,
    QubitOutOfRange,
    NonUnitary,
    InvalidPermutation,
    UnknownState,
    MissingParameter,
    BadK,
    NotHermitian,
    SpecMismatch,
    WrongArity,
    UnknownFamily,
    BadGrid,
    ParseError,
    UnsupportedArity,
};

std::string_view error_code_name(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so that
/// callers (the CLI in particular) can map it onto an exit status.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace negfont
