#pragma once

#include <stdexcept>
#include <string>

namespace hermnn {

// Invalid configuration or violated interface contract.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// A computation produced non-finite values, hit an ill-conditioned system,
// or failed to converge.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace hermnn
