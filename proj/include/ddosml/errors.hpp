#pragma once

#include <stdexcept>
#include <string>

namespace ddosml {

/// Base class for every error raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnknownColumnError : Error {
    explicit UnknownColumnError(const std::string& name)
        : Error("unknown column: " + name) {}
};

struct DuplicateColumnError : Error {
    explicit DuplicateColumnError(const std::string& name)
        : Error("duplicate column: " + name) {}
};

struct LengthMismatchError : Error {
    using Error::Error;
};

struct SchemaMismatchError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

struct MissingHeaderError : Error {
    using Error::Error;
};

struct MissingLabelColumnError : Error {
    explicit MissingLabelColumnError(const std::string& name)
        : Error("missing label column: " + name) {}
};

struct EmptyColumnError : Error {
    using Error::Error;
};

struct NonFiniteError : Error {
    using Error::Error;
};

struct EmptyClassError : Error {
    using Error::Error;
};

struct DimensionMismatchError : Error {
    using Error::Error;
};

struct UnknownLabelProfileError : Error {
    explicit UnknownLabelProfileError(const std::string& label)
        : Error("no class profile for label: " + label) {}
};

struct NonPositiveLatencyError : Error {
    using Error::Error;
};

struct KTooLargeError : Error {
    using Error::Error;
};

struct CountTooLargeError : Error {
    using Error::Error;
};

struct SingleClassError : Error {
    using Error::Error;
};

struct FeatureMismatchError : Error {
    using Error::Error;
};

struct UnfittedModelError : Error {
    using Error::Error;
};

struct CodeOutOfRangeError : Error {
    using Error::Error;
};

struct EmptyMatrixError : Error {
    using Error::Error;
};

struct EmptyManifestError : Error {
    using Error::Error;
};

/// Configuration / argument validation failure. `field` is the config path
/// ("smote.k_neighbors") so CLI users can locate the offending entry.
struct ValidationError : Error {
    explicit ValidationError(const std::string& field, const std::string& why)
        : Error(field + ": " + why) {}
    using Error::Error;
};

}  // namespace ddosml
