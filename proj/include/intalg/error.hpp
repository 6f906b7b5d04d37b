#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace intalg {

enum class ErrorCode {
    LengthMismatch,
    NegativeEntry,
    DoublyZeroIndex,
    NonPositiveEntry,
    ZeroGenerator,
    Unbounded,
    EmptyPolytope,
    BoxTooSmall,
    CaseNotCovered,
    MethodDisagreement,
    NotUnimodular,
    InvalidArgument,
};

inline std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::NegativeEntry: return "NegativeEntry";
        case ErrorCode::DoublyZeroIndex: return "DoublyZeroIndex";
        case ErrorCode::NonPositiveEntry: return "NonPositiveEntry";
        case ErrorCode::ZeroGenerator: return "ZeroGenerator";
        case ErrorCode::Unbounded: return "Unbounded";
        case ErrorCode::EmptyPolytope: return "EmptyPolytope";
        case ErrorCode::BoxTooSmall: return "BoxTooSmall";
        case ErrorCode::CaseNotCovered: return "CaseNotCovered";
        case ErrorCode::MethodDisagreement: return "MethodDisagreement";
        case ErrorCode::NotUnimodular: return "NotUnimodular";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace intalg
