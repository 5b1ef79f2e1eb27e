#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bilevel {

enum class ErrorCode {
    InvalidInput,
    UnknownId,
    BottleneckOfEmptySet,
    NotBipartite,
    EmptyRestrict,
    Infeasible,
    OracleUnavailable,
    CapExceeded,
    MalformedClause,
    IndexOutOfRange,
    CorruptTables,
    BadParameter,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI exit-code mapping) can branch on it.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace bilevel
