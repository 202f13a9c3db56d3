#pragma once

#include <stdexcept>
#include <string>

namespace sesqui {

// Input was syntactically malformed.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A rational input lies outside Z[1/2].
struct NotDyadic : std::runtime_error {
    explicit NotDyadic(const std::string& what) : std::runtime_error(what) {}
};

// div_base needs a numerator divisible by 3; the caller must first
// subtract a digit to reach the correct residue class.
struct NotDivisibleBy3 : std::runtime_error {
    explicit NotDivisibleBy3(const std::string& what) : std::runtime_error(what) {}
};

// Fractional expansion input outside [-6/5, 4/5].
struct InputOutsideOmega : std::runtime_error {
    explicit InputOutsideOmega(const std::string& what) : std::runtime_error(what) {}
};

// 2-adic cancellation consumed every known bit; re-derive the operands
// at higher precision.
struct PrecisionExhausted : std::runtime_error {
    explicit PrecisionExhausted(const std::string& what) : std::runtime_error(what) {}
};

// The 2-adic distance of two window-only values vanishes to full
// precision, so it cannot be decided.
struct IndeterminatePadicDistance : std::runtime_error {
    explicit IndeterminatePadicDistance(const std::string& what) : std::runtime_error(what) {}
};

// A point query needs more known 2-adic bits than the operand carries.
struct InsufficientPrecision : std::runtime_error {
    explicit InsufficientPrecision(const std::string& what) : std::runtime_error(what) {}
};

// Resource guard on 3^k enumerations.
struct LevelTooLarge : std::runtime_error {
    explicit LevelTooLarge(const std::string& what) : std::runtime_error(what) {}
};

// interior_witness found no box strictly inside the union (diagnostic).
struct NoWitnessFound : std::runtime_error {
    explicit NoWitnessFound(const std::string& what) : std::runtime_error(what) {}
};

// An iteration cap tripped. Termination of every loop is provable, so
// this always indicates an implementation bug, never a bad input.
struct InternalNonTermination : std::logic_error {
    explicit InternalNonTermination(const std::string& what) : std::logic_error(what) {}
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace sesqui
