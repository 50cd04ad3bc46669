#pragma once

#include <stdexcept>
#include <string>

namespace pnc {

enum class ErrorKind {
    DimensionMismatch,
    InvalidValue,
    NonPositiveNu,
    NotInvertible,
    DegenerateDirection,
    OutsideDomain,
    Overflow,
    InsufficientCoefficients,
    OutsideConvergenceRegion,
    PointOnPath,
    NoConvergence,
    NonRealAssembly,
    Usage,
};

const char* error_kind_name(ErrorKind kind);

/// All library failures throw this; what() is "<KindName>: <detail>".
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string detail)
        : std::runtime_error(std::string(error_kind_name(kind)) +
                             (detail.empty() ? "" : ": " + detail)),
          kind_(kind),
          detail_(std::move(detail)) {}

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorKind kind_;
    std::string detail_;
};

inline const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::InvalidValue: return "InvalidValue";
        case ErrorKind::NonPositiveNu: return "NonPositiveNu";
        case ErrorKind::NotInvertible: return "NotInvertible";
        case ErrorKind::DegenerateDirection: return "DegenerateDirection";
        case ErrorKind::OutsideDomain: return "OutsideDomain";
        case ErrorKind::Overflow: return "Overflow";
        case ErrorKind::InsufficientCoefficients: return "InsufficientCoefficients";
        case ErrorKind::OutsideConvergenceRegion: return "OutsideConvergenceRegion";
        case ErrorKind::PointOnPath: return "PointOnPath";
        case ErrorKind::NoConvergence: return "NoConvergence";
        case ErrorKind::NonRealAssembly: return "NonRealAssembly";
        case ErrorKind::Usage: return "Usage";
    }
    return "Error";
}

}  // namespace pnc
