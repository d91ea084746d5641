#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace rp2 {

using Int = mpz_class;
using Rat = mpq_class;

/// Thrown when an operation's domain precondition is violated.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Parses "p/q", an integer string, or a decimal string ("0.3" -> 3/10)
/// into an exact rational in lowest terms with positive denominator.
Rat parse_rational(const std::string& text);

/// Lowest-terms rendering: "p/q", or just "p" when the denominator is 1.
std::string format_rational(const Rat& value);

} // namespace rp2
