#pragma once

#include <stdexcept>
#include <string>

namespace ktwist {

enum class ErrorCode {
    MalformedCode,
    Disconnected,
    OrientationInconsistent,
    Unrealizable,
    InvalidSite,
    ZeroTwist,
    CoherentBand,
    ResourceExceeded,
    DimensionMismatch,
    NotSymplectic,
    FixtureMissing,
    NotUnknot,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

const char* error_code_name(ErrorCode code);

}  // namespace ktwist
