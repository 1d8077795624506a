#pragma once

#include <stdexcept>
#include <string>

namespace bcube {

// Raised when an exhaustive search would exceed its enumeration budget.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bcube
