#include "symtutte/integer.hpp"

#include "symtutte/errors.hpp"

namespace symtutte {

Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer ipow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Integer multinomial(std::span<const unsigned> parts) {
  Integer r = 1;
  unsigned long total = 0;
  for (unsigned p : parts) {
    total += p;
    r *= binomial(static_cast<long>(total), static_cast<long>(p));
  }
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Integer exact_div(const Integer& num, const Integer& den) {
  if (den == 0) throw InconsistencyError("division by zero");
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
    throw InconsistencyError("inexact division of " + num.get_str() + " by " + den.get_str());
  Integer q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

}  // namespace symtutte
