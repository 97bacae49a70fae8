#pragma once

#include <stdexcept>
#include <string>

namespace gsieve {

// Overflow of checked 64-bit Gaussian-integer arithmetic.
struct ArithmeticOverflow : std::overflow_error {
    using std::overflow_error::overflow_error;
};

// Input outside the operation's mathematical domain (zero modulus, pole, ...).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// A configured size cap was exceeded (residue systems, Kloosterman moduli).
struct SizeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Factorization did not complete within the trial-division budget.
struct FactorizationBudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A compute budget (pair count, lattice size) was exceeded.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A numerical routine could not meet the requested tolerance.  Carries the
// bound it did achieve.
struct AccuracyError : std::runtime_error {
    double achieved;
    AccuracyError(const std::string& what, double achieved_bound)
        : std::runtime_error(what), achieved(achieved_bound) {}
};

// Evaluation requested at a pole.
struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};

// Argument outside the validity regime of a series or asymptotic method.
struct RegimeError : std::domain_error {
    using std::domain_error::domain_error;
};

// Bad harness configuration (CLI exit code 2).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace gsieve
