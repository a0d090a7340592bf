#pragma once

#include <stdexcept>
#include <string>

namespace kp2 {

/// Malformed or out-of-range configuration input (CLI exit code 2).
class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

/// Picard iteration failed to contract (CLI exit code 3).
class divergence_error : public std::runtime_error {
public:
    explicit divergence_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace kp2
