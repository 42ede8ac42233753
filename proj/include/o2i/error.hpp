#pragma once

#include <stdexcept>
#include <string>

namespace o2i {

// Input outside an operation's domain (bad geometry, MS outside the room, ...).
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed or inconsistent sweep configuration.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace o2i
