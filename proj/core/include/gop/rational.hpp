#pragma once

// Exact integers and rationals (GMP-backed) plus the error types shared by
// every module.

#include <gmpxx.h>

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gop {

using Int = mpz_class;
using Rat = mpq_class;

/// Raised when an operation's precondition on its mathematical input fails
/// (zero divisor, irregular place, order mismatch, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

Rat make_rat(const Int& num, const Int& den);
Rat make_rat(long num, long den = 1);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rat& q);
std::string to_string(const Int& n);

/// Accepts "p", "-p", "p/q" with optional surrounding blanks.
Rat parse_rat(std::string_view text);

bool is_integer(const Rat& q);
Int floor_rat(const Rat& q);
Int lcm(const Int& a, const Int& b);
Int gcd(const Int& a, const Int& b);
Int binomial(unsigned long n, unsigned long k);
Int factorial(unsigned long n);

/// Square root in Q when it exists.
std::optional<Rat> exact_sqrt(const Rat& q);

/// floor(2^bits * log2(x)) / 2^bits for x >= 1, computed with integer
/// squaring only. Deterministic across platforms.
Rat log2_fixed(const Int& x, unsigned bits = 32);

/// Exact least-squares slope of ys against xs (sizes equal, at least two
/// distinct xs).
Rat least_squares_slope(std::span<const Rat> xs, std::span<const Rat> ys);

} // namespace gop
