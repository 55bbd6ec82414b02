#include "cramer_lgv/errors.hpp"

namespace cramer_lgv {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::DuplicateVertex: return "DuplicateVertex";
        case ErrorCode::UnknownEndpoint: return "UnknownEndpoint";
        case ErrorCode::DuplicateEdge: return "DuplicateEdge";
        case ErrorCode::SelfLoop: return "SelfLoop";
        case ErrorCode::CycleDetected: return "CycleDetected";
        case ErrorCode::UnknownVertex: return "UnknownVertex";
        case ErrorCode::NotAPath: return "NotAPath";
        case ErrorCode::JunctionMismatch: return "JunctionMismatch";
        case ErrorCode::VertexRepeated: return "VertexRepeated";
        case ErrorCode::SizeMismatch: return "SizeMismatch";
        case ErrorCode::DuplicateInRole: return "DuplicateInRole";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::SizeTooLarge: return "SizeTooLarge";
        case ErrorCode::SingularMatrix: return "SingularMatrix";
        case ErrorCode::CapExceeded: return "CapExceeded";
        case ErrorCode::CertificateInvalid: return "CertificateInvalid";
        case ErrorCode::InternalDisagreement: return "InternalDisagreement";
    }
    return "Unknown";
}

}  // namespace cramer_lgv
