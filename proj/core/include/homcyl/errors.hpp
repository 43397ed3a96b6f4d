#pragma once

#include <stdexcept>
#include <string>

namespace homcyl {

// Malformed or inconsistent input (bad files, violated preconditions).
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A configured resource cap (cell count, chain count, search nodes) was hit.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A structural guarantee that should hold by construction failed at runtime.
struct PropertyViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace homcyl
