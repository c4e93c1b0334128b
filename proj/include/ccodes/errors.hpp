#pragma once

#include <stdexcept>

namespace ccodes {

// Invalid caller input.
struct NonPrimeCharacteristic final : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct ReducibleModulus final : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct FieldMismatch final : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotCoprime final : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct LengthMismatch final : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Domain violations detected during computation.
struct DivisionByZero final : std::domain_error {
    using std::domain_error::domain_error;
};
struct ZeroElement final : std::domain_error {
    using std::domain_error::domain_error;
};
struct ZeroPolynomial final : std::domain_error {
    using std::domain_error::domain_error;
};
struct ZeroConstantTerm final : std::domain_error {
    using std::domain_error::domain_error;
};
struct BothZero final : std::domain_error {
    using std::domain_error::domain_error;
};
struct NonUnit final : std::domain_error {
    using std::domain_error::domain_error;
};
struct NonUnitLeadingCoefficient final : std::domain_error {
    using std::domain_error::domain_error;
};

// Resource guard for exhaustive computations.
struct TooLarge final : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An internal invariant failed; indicates a bug, never valid-input behavior.
struct ConsistencyFailure final : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace ccodes
