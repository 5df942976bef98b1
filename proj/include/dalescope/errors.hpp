#pragma once

#include <stdexcept>
#include <string>

namespace dalescope {

/// Contract violation by the caller (bad arguments, unknown names,
/// mismatched grids). CLI maps this to exit code 2.
class UsageError : public std::invalid_argument {
public:
    explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

/// Data or I/O failure (unreadable file, malformed PGM). CLI exit code 1.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace dalescope
