#pragma once

#include <stdexcept>
#include <string>

namespace ff {

// Error taxonomy shared by all modules. The CLI maps these to exit codes:
// ConfigError -> 2, DataError (and subclasses) -> 3, NumericError -> 4.

class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed file contents (bad header key, non-numeric token, ...).
class FormatError : public DataError {
public:
    explicit FormatError(const std::string& msg) : DataError(msg) {}
};

// Shape/geometry disagreement between rasters or tensors.
class DimensionError : public DataError {
public:
    explicit DimensionError(const std::string& msg) : DataError(msg) {}
};

// An operation that needs at least one valid element got none.
class EmptyDomainError : public DataError {
public:
    explicit EmptyDomainError(const std::string& msg) : DataError(msg) {}
};

class BoundsError : public DataError {
public:
    explicit BoundsError(const std::string& msg) : DataError(msg) {}
};

// Numerical failure: divergence, non-positive-definite systems, ...
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace ff
