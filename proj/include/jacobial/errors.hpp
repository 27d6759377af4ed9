#pragma once

#include <stdexcept>
#include <string>

namespace jacobial {

// Error kinds, split by how the CLI maps them to exit codes:
// parse errors -> 2, validation errors -> 3, resource caps -> 4.
enum class ErrorCode {
    MalformedSpec,
    DuplicateName,
    DisconnectedGraph,
    ImproperSubcurve,
    EmptySubcurve,
    TooManyComponents,
    TooManyEdges,
    RankTooHigh,
    WrongRank,
    UnknownName,
    BadParameter,
    NonIntegralTotal,
    NotGeneral,
    WrongTotal,
    WrongTotalDegree,
    DisconnectedNormalization,
    NotBlockCompatible,
    HasSeparatingPoints,
    HasBridges,
    GradeCountMismatch,
    UnsupportedModel,
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::MalformedSpec: return "MalformedSpec";
        case ErrorCode::DuplicateName: return "DuplicateName";
        case ErrorCode::DisconnectedGraph: return "DisconnectedGraph";
        case ErrorCode::ImproperSubcurve: return "ImproperSubcurve";
        case ErrorCode::EmptySubcurve: return "EmptySubcurve";
        case ErrorCode::TooManyComponents: return "TooManyComponents";
        case ErrorCode::TooManyEdges: return "TooManyEdges";
        case ErrorCode::RankTooHigh: return "RankTooHigh";
        case ErrorCode::WrongRank: return "WrongRank";
        case ErrorCode::UnknownName: return "UnknownName";
        case ErrorCode::BadParameter: return "BadParameter";
        case ErrorCode::NonIntegralTotal: return "NonIntegralTotal";
        case ErrorCode::NotGeneral: return "NotGeneral";
        case ErrorCode::WrongTotal: return "WrongTotal";
        case ErrorCode::WrongTotalDegree: return "WrongTotalDegree";
        case ErrorCode::DisconnectedNormalization: return "DisconnectedNormalization";
        case ErrorCode::NotBlockCompatible: return "NotBlockCompatible";
        case ErrorCode::HasSeparatingPoints: return "HasSeparatingPoints";
        case ErrorCode::HasBridges: return "HasBridges";
        case ErrorCode::GradeCountMismatch: return "GradeCountMismatch";
        case ErrorCode::UnsupportedModel: return "UnsupportedModel";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
          code_(code) {}

    ErrorCode code() const { return code_; }

    bool is_parse_error() const { return code_ == ErrorCode::MalformedSpec; }

    bool is_resource_cap() const {
        return code_ == ErrorCode::TooManyComponents ||
               code_ == ErrorCode::TooManyEdges ||
               code_ == ErrorCode::RankTooHigh;
    }

private:
    ErrorCode code_;
};

} // namespace jacobial
