#pragma once

// Finite field method: reduce an arrangement into a finite ring, count points
// by how many hyperplanes they lie on, and recover the coboundary polynomial.

#include <cstdint>
#include <vector>

#include "symtutte/arrangement.hpp"
#include "symtutte/finite_ring.hpp"

namespace symtutte {

/// Above these sizes the minor check falls back to a magnitude bound.
struct MinorPolicy {
  unsigned max_dim = 4;
  std::size_t max_hyperplanes = 20;
};

/// True iff every square minor of the augmented coefficient matrix that is
/// nonzero over Q(w) stays nonzero in the ring.
bool check_correct_reduction(const Arrangement& a, const RingSpec& spec, const MinorPolicy& policy = {});

/// All square minors of the augmented matrix, as elements of Z[w].
std::vector<CycElem> augmented_minors(const Arrangement& a);

class ReducedArrangement {
 public:
  using Elem = FiniteRing::Elem;

  /// Throws InvalidReduction when some hyperplane loses all its coefficients.
  ReducedArrangement(const Arrangement& a, const RingSpec& spec);

  const RingSpec& spec() const { return ring_.spec(); }
  const FiniteRing& ring() const { return ring_; }
  unsigned dim() const { return n_; }
  std::size_t size() const { return rhs_.size(); }
  const std::vector<Elem>& coeffs(std::size_t i) const { return coeffs_[i]; }
  Elem rhs(std::size_t i) const { return rhs_[i]; }

  bool contains(std::size_t i, std::span<const Elem> point) const;
  /// h(point): how many hyperplanes contain the point.
  unsigned membership_count(std::span<const Elem> point) const;

 private:
  FiniteRing ring_;
  unsigned n_;
  std::vector<std::vector<Elem>> coeffs_;
  std::vector<Elem> rhs_;
};

/// counts[h] = number of points lying on exactly h hyperplanes.
struct HHistogram {
  std::vector<std::uint64_t> counts;

  Integer total() const;
  /// sum_h counts[h] t^h.
  Poly as_polynomial() const;
  friend bool operator==(const HHistogram&, const HHistogram&) = default;
};

/// Enumerates ring^n, split into index ranges over `threads` workers
/// (0 means hardware concurrency).
HHistogram point_count_histogram(const ReducedArrangement& r, unsigned threads = 0);

/// Counts the points on every intersection of a subarrangement and throws
/// FlatSizeViolation for the first one whose size is not |ring|^{n - r(B)}
/// (central B) or 0 (otherwise). Returns false without checking when the
/// arrangement has more than `max_hyperplanes` hyperplanes.
bool check_flat_sizes(const Arrangement& a, const ReducedArrangement& r, std::size_t max_hyperplanes = 12,
                      unsigned threads = 0);

/// cob evaluated at the ring size, from the point count divided by
/// |ring|^{n - r(A)}. Throws InvalidReduction when the reduction is not
/// correct and TheoremViolation when the division is inexact. On paper-literal
/// rings of dimension l_m > 1 the flat sizes are checked first.
Poly coboundary_at_prime(const Arrangement& a, const RingSpec& spec, unsigned threads = 0,
                         const MinorPolicy& policy = {});

/// What coboundary_at_prime must return according to the definition:
/// cob(|ring|, t).
Poly expected_at_prime(const Arrangement& a, const RingSpec& spec);

/// Interpolates a polynomial in the first variable through (node, value)
/// pairs, coefficientwise in t. Result must have integer coefficients and
/// degree at most `degree_bound` in the first variable.
BivarPoly interpolate_from_values(const std::vector<Integer>& nodes, const std::vector<Poly>& values,
                                  unsigned degree_bound);

/// Interpolates cob(X, t) of an arrangement of rank `full_rank` from values at
/// nodes X, using that the X^r coefficient is 1; needs max(r, 1) nodes.
BivarPoly interpolate_coboundary_values(const std::vector<Integer>& nodes, const std::vector<Poly>& values,
                                        unsigned full_rank);

/// Recovers the w-coboundary from per-ring evaluations. Nodes are ring sizes,
/// so the interpolated polynomial is cob(X, t) and the result is cob(X^{l_m}, t).
BivarPoly interpolate_coboundary(const Arrangement& a, const std::vector<RingSpec>& specs,
                                 unsigned threads = 0);

/// The first `count` primes q >= `from` giving a correct reduction on the
/// requested backend (for PrimeField also q = 1 mod m).
std::vector<RingSpec> select_valid_specs(const Arrangement& a, Backend backend, std::size_t count,
                                         unsigned from = 2, const MinorPolicy& policy = {});

}  // namespace symtutte
