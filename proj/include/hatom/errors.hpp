#pragma once

#include <stdexcept>
#include <string>

namespace hatom {

/// Two routes that must agree exactly did not; indicates a broken
/// construction, never bad user input.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Integrand falls outside the closed classes the exact engine handles.
class UnsupportedIntegrand : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Exponential integral with nonpositive decay rate.
class DivergentIntegral : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Quadrature order too low to keep the exact-up-to-rounding contract.
class InsufficientOrder : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace hatom
