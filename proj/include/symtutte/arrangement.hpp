#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "symtutte/cyclotomic.hpp"
#include "symtutte/polynomial.hpp"

namespace symtutte {

/// c_1 z_1 + ... + c_n z_n = d with coefficients in Z[w_m].
struct Hyperplane {
  std::vector<CycElem> coeffs;
  CycElem rhs;

  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

/// Normalised augmented row over Q(w): (c_1, ..., c_n, d) divided by its first
/// nonzero coefficient. Two hyperplanes are the same affine set iff their keys
/// are equal.
std::vector<NFElem> normalized_key(const Hyperplane& h);

/// A finite set of distinct hyperplanes in C^n with Z[w_m] coefficients.
class Arrangement {
 public:
  /// Throws InvalidHyperplane for a zero coefficient vector or wrong shape and
  /// DuplicateHyperplane when two entries define the same affine set.
  Arrangement(unsigned m, unsigned n, std::vector<Hyperplane> hyperplanes = {});

  unsigned root_order() const { return m_; }
  unsigned dim() const { return n_; }
  std::size_t size() const { return hyperplanes_.size(); }
  bool empty() const { return hyperplanes_.empty(); }
  const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
  const Hyperplane& operator[](std::size_t i) const { return hyperplanes_[i]; }

  /// Augmented rows (c_1, ..., c_n, d) mapped into Q(w).
  const std::vector<std::vector<NFElem>>& nf_rows() const { return rows_; }

  friend bool operator==(const Arrangement& a, const Arrangement& b) {
    return a.m_ == b.m_ && a.n_ == b.n_ && a.hyperplanes_ == b.hyperplanes_;
  }

 private:
  unsigned m_;
  unsigned n_;
  std::vector<Hyperplane> hyperplanes_;
  std::vector<std::vector<NFElem>> rows_;
};

/// Incremental row echelon form over Q(w) for augmented rows whose last
/// column is the right-hand side. Supports push/pop for depth-first search.
class EchelonBasis {
 public:
  enum class Outcome { Independent, Dependent, Inconsistent };

  EchelonBasis(unsigned m, unsigned coef_cols, bool augmented);

  /// Classifies `row` against the basis and, when independent, appends it.
  Outcome insert(std::span<const NFElem> row);
  void pop();
  unsigned rank() const { return static_cast<unsigned>(rows_.size()); }

 private:
  unsigned m_;
  unsigned coef_cols_;
  bool augmented_;
  std::vector<std::vector<NFElem>> rows_;
  std::vector<unsigned> pivots_;
};

/// Consistency of the sub-system over Q(w). The empty subset is central.
bool is_central(const Arrangement& a, std::span<const std::size_t> sub);
/// Rank of a subarrangement: n - dim of the intersection for central subsets,
/// the largest central rank otherwise.
unsigned rank(const Arrangement& a, std::span<const std::size_t> sub);
unsigned rank(const Arrangement& a);
/// Same value as rank(), computed literally from the definition by exploring
/// every central, coefficient-independent subset of `sub`. Exponential.
unsigned rank_by_central_search(const Arrangement& a, std::span<const std::size_t> sub);

/// Number of central subsets by (rank, size), plus r(A).
struct CentralProfile {
  unsigned full_rank = 0;
  std::map<std::pair<unsigned, unsigned>, Integer> counts;
};

CentralProfile central_profile(const Arrangement& a);

BivarPoly tutte(const Arrangement& a);
BivarPoly tutte(const CentralProfile& p);
BivarPoly coboundary(const Arrangement& a);
BivarPoly coboundary(const CentralProfile& p);
/// Coboundary with every q exponent multiplied by l_m.
BivarPoly zeta_coboundary(const Arrangement& a);

/// Checks T(x, y) == cob((x-1)(y-1), y) / (y-1)^{r(A)} as polynomials.
bool tutte_coboundary_check(const Arrangement& a);

/// q^{n - r(A)} cob(q, 0).
Poly characteristic(const Arrangement& a);
/// Poincare polynomial of the complement, q^{r(A)} T(1 + 1/q, 0).
Poly poincare(const Arrangement& a);
/// |T(2, 0)|; throws NotReal unless every coefficient is rational.
Integer region_count(const Arrangement& a);

}  // namespace symtutte
