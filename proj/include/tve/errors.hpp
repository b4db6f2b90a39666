#pragma once

#include <stdexcept>
#include <string>

namespace tve {

/// Malformed or inconsistent input text (mesh file, config file).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Structurally valid input that violates a physical or numerical precondition.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Non-finite state detected during explicit time stepping.
class InstabilityError : public std::runtime_error {
public:
    InstabilityError(const std::string& msg, long step, int node)
        : std::runtime_error(msg), step(step), node(node) {}
    long step = -1;
    int node = -1;
};

/// Filesystem failure while writing outputs.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace tve
