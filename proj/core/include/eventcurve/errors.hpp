#pragma once

#include <stdexcept>
#include <string>

namespace eventcurve {

// Exit-code category carried by every library error. The CLI maps it 1:1.
enum class ErrorCode {
    Internal = 1,
    BadInput = 2,
    MissingPrerequisite = 3,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& msg)
        : std::runtime_error(msg), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

#define EVENTCURVE_DEFINE_ERROR(Name, Code)                         \
    class Name : public Error {                                     \
    public:                                                         \
        explicit Name(const std::string& msg)                       \
            : Error(ErrorCode::Code, std::string(#Name ": ") + msg) {} \
    }

// Input and parsing failures.
EVENTCURVE_DEFINE_ERROR(ParseError, BadInput);
EVENTCURVE_DEFINE_ERROR(DuplicateDate, BadInput);
EVENTCURVE_DEFINE_ERROR(BadFilename, BadInput);
EVENTCURVE_DEFINE_ERROR(EmptyDocument, BadInput);
EVENTCURVE_DEFINE_ERROR(UnknownField, BadInput);
EVENTCURVE_DEFINE_ERROR(ConfigError, BadInput);

// Calendar / window failures. WindowUnavailable is caught during dataset
// construction and turned into a logged drop, never a crash.
EVENTCURVE_DEFINE_ERROR(NoTradingDate, Internal);
EVENTCURVE_DEFINE_ERROR(WindowUnavailable, Internal);
EVENTCURVE_DEFINE_ERROR(MissingValue, Internal);

// Estimation failures.
EVENTCURVE_DEFINE_ERROR(SingularDesign, Internal);
EVENTCURVE_DEFINE_ERROR(LeverageOne, Internal);
EVENTCURVE_DEFINE_ERROR(NoConvergence, Internal);
EVENTCURVE_DEFINE_ERROR(InsufficientData, Internal);
EVENTCURVE_DEFINE_ERROR(ZeroVariance, Internal);
EVENTCURVE_DEFINE_ERROR(InsufficientSample, Internal);
EVENTCURVE_DEFINE_ERROR(EmptySample, Internal);

// Pipeline ordering failures.
EVENTCURVE_DEFINE_ERROR(MissingPrerequisiteError, MissingPrerequisite);

#undef EVENTCURVE_DEFINE_ERROR

}  // namespace eventcurve
