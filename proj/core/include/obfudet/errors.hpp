#pragma once

#include <stdexcept>
#include <string>

namespace obfudet {

// Library code signals failures through these three categories; the CLI maps
// them onto its documented exit codes (3, 4, 5).

// Bad inputs: malformed files, out-of-range labels, contract violations.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& message) : std::runtime_error(message) {}
};

// A training routine could not produce a usable model.
class TrainingError : public std::runtime_error {
 public:
  explicit TrainingError(const std::string& message) : std::runtime_error(message) {}
};

// Filesystem and serialization failures.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& message) : std::runtime_error(message) {}
};

}  // namespace obfudet
