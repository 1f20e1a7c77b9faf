#pragma once

#include <stdexcept>

namespace kmslab {

struct DivergentSeries : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PeriodicObstruction : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnsupportedCylinder : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct VariantMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UncertifiedTail : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NoConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InsufficientRecurrences : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace kmslab
