#pragma once

#include <stdexcept>
#include <string>

namespace panolayout {

// Bad inputs, violated preconditions, malformed configuration.
// The CLI maps this to exit code 1.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed configuration files or mappings (still exit code 1).
class config_error : public validation_error {
public:
    explicit config_error(const std::string& msg) : validation_error(msg) {}
};

// File system / serialization failures. The CLI maps this to exit code 2.
class io_error : public std::runtime_error {
public:
    explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Scene-level failure of the bottom-boundary reconstruction (e.g. the pole
// rows of the depth map are all holes). Carries no per-meridian detail; the
// caller downgrades the whole scene in the layout validity mask.
class unreconstructable_error : public validation_error {
public:
    explicit unreconstructable_error(const std::string& msg) : validation_error(msg) {}
};

} // namespace panolayout
