#ifndef SUFFRIDGE_ERRORS_HPP
#define SUFFRIDGE_ERRORS_HPP

#include <stdexcept>

namespace suffridge {

// Numeric failures map to CLI exit code 1, validation failures to exit code 2.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NonConvergence : NumericError { using NumericError::NumericError; };
struct SingularDenominator : NumericError { using NumericError::NumericError; };
struct SingularParameter : NumericError { using NumericError::NumericError; };
struct PoleProximity : NumericError { using NumericError::NumericError; };
struct PointOnCurve : NumericError { using NumericError::NumericError; };
struct DegenerateSegment : NumericError { using NumericError::NumericError; };
struct QuadratureNonConvergence : NumericError { using NumericError::NumericError; };
struct NormalizationFailure : NumericError { using NumericError::NumericError; };
struct InconclusiveAtResolution : NumericError { using NumericError::NumericError; };

}  // namespace suffridge

#endif
