#pragma once

#include <stdexcept>
#include <string>

namespace gbc {

/// Base class for all errors raised by the library.
class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Caller violated a precondition (mixed rings, mismatched sizes, bad index...).
class usage_error : public error {
public:
    explicit usage_error(const std::string& msg) : error(msg) {}
};

/// Malformed textual or JSON input.
class parse_error : public error {
public:
    explicit parse_error(const std::string& msg) : error(msg) {}
};

/// An enumeration guard would be exceeded; pass force=true to override.
class guard_error : public error {
public:
    explicit guard_error(const std::string& msg) : error(msg) {}
};

/// Broken internal invariant. Seeing this is a bug in the library.
class internal_error : public error {
public:
    explicit internal_error(const std::string& msg) : error(msg) {}
};

} // namespace gbc
