#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ofnts {

enum class ErrorCode {
    MalformedRow,
    MissingColumn,
    DuplicateDate,
    InvalidWindowSpec,
    EmptyWindow,
    SizeExceedsData,
    EmptySeries,
    BadGamma,
    TooFewPoints,
    ImproperShape,
    AlphaOutOfRange,
    MissingOhlc,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::MalformedRow: return "MalformedRow";
    case ErrorCode::MissingColumn: return "MissingColumn";
    case ErrorCode::DuplicateDate: return "DuplicateDate";
    case ErrorCode::InvalidWindowSpec: return "InvalidWindowSpec";
    case ErrorCode::EmptyWindow: return "EmptyWindow";
    case ErrorCode::SizeExceedsData: return "SizeExceedsData";
    case ErrorCode::EmptySeries: return "EmptySeries";
    case ErrorCode::BadGamma: return "BadGamma";
    case ErrorCode::TooFewPoints: return "TooFewPoints";
    case ErrorCode::ImproperShape: return "ImproperShape";
    case ErrorCode::AlphaOutOfRange: return "AlphaOutOfRange";
    case ErrorCode::MissingOhlc: return "MissingOhlc";
    }
    return "Unknown";
}

/// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace ofnts
