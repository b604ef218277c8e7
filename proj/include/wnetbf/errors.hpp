// errors.hpp
// Error classes map onto distinct process exit codes in the CLI.
#pragma once

#include <stdexcept>
#include <string>

namespace wnetbf {

// Bad configuration, unknown keys, fingerprint mismatches. Exit code 2.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Filesystem / file format problems. Exit code 3.
struct IoError : std::runtime_error {
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// Numerical failures (singular matrices, diverged training, undefined SNR).
// Exit code 4.
struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace wnetbf
