#pragma once

#include <stdexcept>
#include <string>

namespace refkit {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A required geometric relationship between inputs does not hold.
struct DimensionMismatch : Error {
    using Error::Error;
};

/// An argument violates a documented precondition (non-finite translation,
/// out-of-range config value, missing optional input, ...).
struct InvalidArgument : Error {
    using Error::Error;
};

/// The input carries no usable signal for the requested operation
/// (constant image handed to the registration, for example).
struct DegenerateInput : Error {
    using Error::Error;
};

/// A masked reduction was asked to run over an empty pixel set.
struct NoValidPixels : Error {
    using Error::Error;
};

/// Every view of a scene failed; there is nothing left to select.
struct NoValidView : Error {
    using Error::Error;
};

/// On-disk scene data does not follow the expected layout or encoding.
struct MalformedScene : Error {
    using Error::Error;
};

/// Scene data is well-formed but violates the dataset curation rules.
struct ValidationFailure : Error {
    using Error::Error;
};

/// Filesystem or codec failure.
struct IoFailure : Error {
    using Error::Error;
};

/// Parse failure in a CSV or other text sidecar file.
struct ParseFailure : Error {
    using Error::Error;
};

}  // namespace refkit
