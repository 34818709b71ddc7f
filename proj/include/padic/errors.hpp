#pragma once

#include <stdexcept>
#include <string>

namespace padic {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A division that was required to be exact left a remainder. Both operands
// are reported; this always signals a misapplied formula, never bad input.
struct ExactDivisionError : Error {
    ExactDivisionError(const std::string& num, const std::string& den)
        : Error("inexact division: " + num + " / " + den) {}
};

// a*x = b (mod m) has no solution, i.e. gcd(a,m) does not divide b.
struct NoSolutionError : Error {
    explicit NoSolutionError(const std::string& what) : Error(what) {}
};

struct InvalidArgumentError : Error {
    explicit InvalidArgumentError(const std::string& what) : Error(what) {}
};

// The base field is ramified and no (e_p, f_p) override was supplied, but an
// operation needs the cyclotomic invariants of F(zeta_p)/F.
struct CyclotomicDataRequired : Error {
    CyclotomicDataRequired()
        : Error("cyclotomic data required: F is ramified over Q_p; pass e_p and f_p explicitly") {}
};

struct InvalidCyclotomicData : Error {
    explicit InvalidCyclotomicData(const std::string& what) : Error(what) {}
};

// Parameters fall outside the range any implemented formula covers
// (e.g. p^3 | e, or a chain-ring gate fails).
struct UnsupportedCase : Error {
    explicit UnsupportedCase(const std::string& what) : Error(what) {}
};

// The simplifying assumptions behind the p^2||e count do not hold.
struct AssumptionsViolated : Error {
    explicit AssumptionsViolated(const std::string& what) : Error(what) {}
};

// A brute-force enumeration would exceed its feasibility guard.
struct TooLargeError : Error {
    explicit TooLargeError(const std::string& what) : Error(what) {}
};

}  // namespace padic
