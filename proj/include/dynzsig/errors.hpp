#pragma once

#include <stdexcept>
#include <string>

namespace dynzsig {

/// A mathematical hypothesis of an operation does not hold for the input.
class HypothesisViolated : public std::invalid_argument {
 public:
  explicit HypothesisViolated(const std::string& reason) : std::invalid_argument(reason) {}
};

}  // namespace dynzsig
