#pragma once

#include <stdexcept>
#include <string>

namespace tofhair {

/// Bad configuration (invalid parameter file, out-of-range settings).
/// CLI exit code 2.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Bad or unusable data (degenerate signals, empty regions, missing files).
/// CLI exit code 3.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

/// Four correlation samples with no recoverable phase.
class DegenerateSignalError : public DataError {
public:
    explicit DegenerateSignalError(const std::string& what) : DataError(what) {}
};

/// A requested region contains no pixels (or no valid pixels).
class EmptyRegionError : public DataError {
public:
    explicit EmptyRegionError(const std::string& what) : DataError(what) {}
};

/// A labeled region has no valid depth anywhere, so its holes cannot be filled.
class UnfillableRegionError : public DataError {
public:
    explicit UnfillableRegionError(const std::string& what) : DataError(what) {}
};

/// Instance exceeds the configured pixel-count cap for exact O(N^2) paths.
/// CLI exit code 4.
class SizeCapError : public std::runtime_error {
public:
    explicit SizeCapError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tofhair
