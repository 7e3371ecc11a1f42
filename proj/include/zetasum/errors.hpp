#pragma once

#include <stdexcept>
#include <string>

namespace zetasum {

// Parse-layer failures carry the 1-based line number of the offending line.
struct ParseError : std::runtime_error {
    long line_no;
    ParseError(std::string msg, long line) : std::runtime_error(std::move(msg)), line_no(line) {}
};

struct EmptyInput : ParseError {
    EmptyInput() : ParseError("empty input: no ordinates found", 0) {}
};

struct NonNumericLine : ParseError {
    explicit NonNumericLine(long line)
        : ParseError("non-numeric content on line " + std::to_string(line), line) {}
};

struct NonMonotonic : ParseError {
    explicit NonMonotonic(long line)
        : ParseError("ordinate on line " + std::to_string(line) + " is <= its predecessor", line) {}
};

struct InvalidOrdinate : ParseError {
    explicit InvalidOrdinate(long line)
        : ParseError("ordinate on line " + std::to_string(line) + " is not a zeta-zero ordinate (must exceed 14)", line) {}
};

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Argument excluded by an identity's validity region (cut plane, strip, t<=1, ...).
struct DomainViolation : std::domain_error {
    using std::domain_error::domain_error;
};

struct PoleAtOne : std::domain_error {
    PoleAtOne() : std::domain_error("zeta has a pole at s = 1") {}
};

struct DegenerateDenominator : std::domain_error {
    DegenerateDenominator()
        : std::domain_error("1 - 2^(1-s) vanishes away from s = 1 (s = 1 + 2*pi*i*k/log 2)") {}
};

struct RemovableAtOne : std::domain_error {
    RemovableAtOne() : std::domain_error("h(z) is removable at z = 1; use h_near_one") {}
};

struct OutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};

struct CapacityExceeded : std::length_error {
    using std::length_error::length_error;
};

struct InsufficientZeros : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DerivativeTooSmall : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace zetasum
