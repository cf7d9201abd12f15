#pragma once

#include <stdexcept>
#include <string>

namespace hermcode {

// Thrown when a request exceeds a configured enumeration or table budget.
// Distinct from invalid_argument so callers can map it to a usage-style exit.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hermcode
