#pragma once

#include <stdexcept>
#include <string>

namespace tropdiv {

enum class ErrorCode {
    Disconnected,
    UnknownVertex,
    Empty,
    GraphMismatch,
    AllInfinite,
    BoundExceeded,
    UnassignedLabel,
    DegeneratePolynomial,
    IndRankUndetermined,
    IrrationalData,
    ScheduleStalled,
    BadInput,
};

const char* error_code_name(ErrorCode c);

struct Error : std::runtime_error {
    ErrorCode code;
    Error(ErrorCode c, const std::string& msg)
        : std::runtime_error(std::string(error_code_name(c)) + ": " + msg), code(c) {}
};

}  // namespace tropdiv
