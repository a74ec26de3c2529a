#ifndef DIGITSEAL_ERRORS_HPP
#define DIGITSEAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace digitseal {

// Precondition violations (non-monic divisor, empty digit set, ...) throw
// std::invalid_argument. The types below mark failures of the numeric
// machinery itself, so callers can tell a bad input from a blown budget.

// Root isolation could not certify pairwise disjoint disks within the
// precision cap.
struct IsolationFailure : std::runtime_error {
    explicit IsolationFailure(const std::string& what) : std::runtime_error(what) {}
};

// A computation hit the working-precision cap before reaching a decision.
struct PrecisionExhausted : std::runtime_error {
    explicit PrecisionExhausted(const std::string& what) : std::runtime_error(what) {}
};

// The input degree exceeds the configured cap of a combinatorial routine
// (factorization over Z, partition classification).
struct UnsupportedDegree : std::invalid_argument {
    explicit UnsupportedDegree(const std::string& what) : std::invalid_argument(what) {}
};

// A root could not be placed strictly inside or outside the unit circle and
// the caller did not opt into excluding such roots.
struct UnimodularUnresolved : std::runtime_error {
    explicit UnimodularUnresolved(const std::string& what) : std::runtime_error(what) {}
};

} // namespace digitseal

#endif
