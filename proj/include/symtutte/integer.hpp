#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>

namespace symtutte {

using Integer = mpz_class;
using Rational = mpq_class;

/// binom(n, k); zero outside 0 <= k <= n.
Integer binomial(long n, long k);
Integer factorial(unsigned long n);
Integer ipow(const Integer& base, unsigned long exp);
/// n! / prod(parts_i!) with n = sum(parts).
Integer multinomial(std::span<const unsigned> parts);

bool is_prime(std::uint64_t n);
/// Exact quotient; throws InconsistencyError when `den` does not divide `num`.
Integer exact_div(const Integer& num, const Integer& den);

}  // namespace symtutte
