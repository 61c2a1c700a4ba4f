#include "tropdiv/errors.hpp"

namespace tropdiv {

const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::Disconnected: return "Disconnected";
        case ErrorCode::UnknownVertex: return "UnknownVertex";
        case ErrorCode::Empty: return "Empty";
        case ErrorCode::GraphMismatch: return "GraphMismatch";
        case ErrorCode::AllInfinite: return "AllInfinite";
        case ErrorCode::BoundExceeded: return "BoundExceeded";
        case ErrorCode::UnassignedLabel: return "UnassignedLabel";
        case ErrorCode::DegeneratePolynomial: return "DegeneratePolynomial";
        case ErrorCode::IndRankUndetermined: return "IndRankUndetermined";
        case ErrorCode::IrrationalData: return "IrrationalData";
        case ErrorCode::ScheduleStalled: return "ScheduleStalled";
        case ErrorCode::BadInput: return "BadInput";
    }
    return "Unknown";
}

}  // namespace tropdiv
