#pragma once

// Finite coefficient rings for the finite field method.
//
// PaperLiteral: F_q[x]/(x^m - 1) for odd m, F_q[x]/(x^{m/2} + 1) for even m,
// i.e. the l_m-coordinate representation with every coordinate reduced mod q.
// It has q^{l_m} elements and zero divisors in general.
//
// PrimeField: F_q with q = 1 (mod m), w realised as an element of order m.

#include <cstdint>
#include <string>
#include <vector>

#include "symtutte/cyclotomic.hpp"

namespace symtutte {

enum class Backend { PaperLiteral, PrimeField };

struct RingSpec {
  Backend backend = Backend::PaperLiteral;
  unsigned m = 1;
  unsigned q = 2;
  /// Image of w in F_q; PrimeField only.
  unsigned zeta = 1;

  static RingSpec paper_literal(unsigned m, unsigned q);
  /// Uses the smallest element of multiplicative order m.
  static RingSpec prime_field(unsigned m, unsigned q);
  static RingSpec prime_field(unsigned m, unsigned q, unsigned zeta);

  std::uint64_t ring_size() const;
  std::string describe() const;

  friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

/// Every element of the ring exactly once, as a CycElem whose reduction is
/// that element (PrimeField elements are returned as integers).
std::vector<CycElem> enumerate_ring(const RingSpec& spec);

/// Arithmetic on a RingSpec with elements encoded as dense indices in
/// [0, size). Index 0 is zero and index 1 is one for both backends.
class FiniteRing {
 public:
  using Elem = std::uint32_t;

  explicit FiniteRing(const RingSpec& spec);

  const RingSpec& spec() const { return spec_; }
  std::uint32_t size() const { return size_; }
  unsigned root_order() const { return spec_.m; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem mul(Elem a, Elem b) const;
  Elem neg(Elem a) const { return sub(0, a); }

  Elem reduce(const CycElem& a) const;
  CycElem lift(Elem a) const;
  /// Coordinates in [0, q); a single coordinate for PrimeField.
  std::vector<std::uint32_t> coords(Elem a) const;

  /// w^0, ..., w^{m-1} as ring elements.
  const std::vector<Elem>& roots() const { return roots_; }

  std::string element_string(Elem a) const;

 private:
  Elem encode(const std::vector<std::uint32_t>& c) const;
  Elem mul_slow(Elem a, Elem b) const;

  RingSpec spec_;
  unsigned l_;
  std::uint32_t size_;
  std::vector<Elem> add_table_;
  std::vector<Elem> mul_table_;
  std::vector<Elem> roots_;
};

}  // namespace symtutte
