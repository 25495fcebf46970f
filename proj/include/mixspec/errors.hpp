#pragma once

#include <stdexcept>
#include <string>

namespace mixspec {

// Thrown when an enumeration or exhaustive search exceeds its configured
// budget. Callers may retry with a smaller instance or a larger budget.
class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown by the closed-form determinant when some mixed component has
// neither the AP nor the AC property.
class FormulaInapplicableError : public std::invalid_argument {
public:
    explicit FormulaInapplicableError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace mixspec
