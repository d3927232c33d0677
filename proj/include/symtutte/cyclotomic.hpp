#pragma once

// Exact arithmetic in Z[w], w a primitive m-th root of unity.
//
// CycElem keeps the l_m-coordinate form sum_i c_i w^i with the folding rule
// w^m = 1 (m odd) or w^{m/2} = -1 (m even). For odd m > 1 that form is not
// unique (1 + w + ... + w^{m-1} = 0), so anything that must decide equality
// in Q(w) goes through NFElem, which is reduced modulo the cyclotomic
// polynomial and therefore canonical.

#include <compare>
#include <string>
#include <vector>

#include "symtutte/integer.hpp"

namespace symtutte {

/// Number of coordinates of Z[w_m]: m for odd m, m/2 for even m.
unsigned l_of(unsigned m);
unsigned euler_phi(unsigned m);

class CycElem {
 public:
  /// The zero element of Z[w_m].
  explicit CycElem(unsigned m);
  CycElem(unsigned m, std::vector<Integer> coords);

  static CycElem integer(unsigned m, const Integer& value);
  /// w^k after folding; k may be negative.
  static CycElem root_power(unsigned m, long k);

  unsigned order() const { return m_; }
  const std::vector<Integer>& coords() const { return coords_; }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }

  /// True when every coordinate is zero. Not the same as being zero in Q(w).
  bool is_zero() const;

  CycElem operator-() const;
  CycElem& operator+=(const CycElem& rhs);
  CycElem& operator-=(const CycElem& rhs);
  CycElem& operator*=(const CycElem& rhs);

  friend CycElem operator+(CycElem a, const CycElem& b) { return a += b; }
  friend CycElem operator-(CycElem a, const CycElem& b) { return a -= b; }
  friend CycElem operator*(CycElem a, const CycElem& b) { return a *= b; }
  friend bool operator==(const CycElem&, const CycElem&) = default;

 private:
  unsigned m_;
  std::vector<Integer> coords_;
};

CycElem cyc_add(const CycElem& a, const CycElem& b);
CycElem cyc_mul(const CycElem& a, const CycElem& b);

/// Coordinatewise residues in [0, q).
CycElem reduce_mod_q(const CycElem& a, unsigned long q);

/// Phi_m as integer coefficients, lowest degree first.
const std::vector<Integer>& cyclotomic_polynomial(unsigned m);

/// Element of Q(w_m) = Q[x]/Phi_m, stored as the unique remainder of degree
/// < phi(m).
class NFElem {
 public:
  explicit NFElem(unsigned m);
  NFElem(unsigned m, std::vector<Rational> coeffs);

  static NFElem integer(unsigned m, const Integer& v);

  unsigned order() const { return m_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  /// True when the element lies in Q.
  bool is_rational() const;

  NFElem operator-() const;
  NFElem& operator+=(const NFElem& rhs);
  NFElem& operator-=(const NFElem& rhs);
  NFElem& operator*=(const NFElem& rhs);
  friend NFElem operator+(NFElem a, const NFElem& b) { return a += b; }
  friend NFElem operator-(NFElem a, const NFElem& b) { return a -= b; }
  friend NFElem operator*(NFElem a, const NFElem& b) { return a *= b; }

  /// Multiplicative inverse; throws InconsistencyError on zero.
  NFElem inverse() const;

  friend bool operator==(const NFElem& a, const NFElem& b) { return a.m_ == b.m_ && a.c_ == b.c_; }
  friend bool operator<(const NFElem& a, const NFElem& b);

 private:
  unsigned m_;
  std::vector<Rational> c_;
};

NFElem to_number_field(const CycElem& a);

std::string to_string(const CycElem& a);
std::string to_string(const NFElem& a);

}  // namespace symtutte
