#ifndef CRAMER_LGV_ERRORS_HPP
#define CRAMER_LGV_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cramer_lgv {

enum class ErrorCode {
    ParseError,
    DivisionByZero,
    DuplicateVertex,
    UnknownEndpoint,
    DuplicateEdge,
    SelfLoop,
    CycleDetected,
    UnknownVertex,
    NotAPath,
    JunctionMismatch,
    VertexRepeated,
    SizeMismatch,
    DuplicateInRole,
    IndexOutOfRange,
    SizeTooLarge,
    SingularMatrix,
    CapExceeded,
    CertificateInvalid,
    InternalDisagreement,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Thrown by graph construction; cycle() lists one directed cycle,
/// first vertex repeated at the end.
class CycleError : public Error {
public:
    CycleError(std::vector<std::string> cycle, const std::string& message)
        : Error(ErrorCode::CycleDetected, message), cycle_(std::move(cycle)) {}

    const std::vector<std::string>& cycle() const noexcept { return cycle_; }

private:
    std::vector<std::string> cycle_;
};

}  // namespace cramer_lgv

#endif  // CRAMER_LGV_ERRORS_HPP
