#pragma once

// Exponential generating functions sum_n u_n x^n / n! truncated at x^N, with
// coefficients that are integer polynomials in t.

#include <string>
#include <vector>

#include "symtutte/finite_ring.hpp"
#include "symtutte/polynomial.hpp"
#include "symtutte/representative.hpp"

namespace symtutte {

class TruncatedSeries {
 public:
  /// Zero series with terms u_0..u_order.
  explicit TruncatedSeries(unsigned order);
  TruncatedSeries(unsigned order, std::vector<Poly> terms);

  /// 1, the multiplicative identity.
  static TruncatedSeries one(unsigned order);
  /// sum_n term(n) x^n / n!.
  template <class F>
  static TruncatedSeries from(unsigned order, F&& term) {
    TruncatedSeries s(order);
    for (unsigned n = 0; n <= order; ++n) s.terms_[n] = term(n);
    return s;
  }

  unsigned order() const { return static_cast<unsigned>(terms_.size()) - 1; }
  const Poly& operator[](unsigned n) const { return terms_[n]; }
  const std::vector<Poly>& terms() const { return terms_; }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<Poly> terms_;
};

/// u_n = sum_i binom(n, i) a_i b_{n-i}. Throws InvalidParameter on order mismatch.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_pow(const TruncatedSeries& a, unsigned long k);

enum class Identity { A, B, D, In, Gmpn, Gmmn };

Identity identity_from_name(const std::string& name);
std::string identity_name(Identity id);

struct EgfParams {
  unsigned q = 5;
  unsigned m = 1;
  unsigned p = 1;
  Backend backend = Backend::PrimeField;

  /// The ring the identity is evaluated over.
  RingSpec ring() const;
};

/// Right-hand side of the named identity, with the ring size standing for
/// q^{l_m} in the G exponents.
TruncatedSeries build_named_rhs(Identity id, const EgfParams& params, unsigned order);

/// Product over the indice partition blocks of per-block series, times one
/// exponential factor per ring element (or class) that no solution touches.
/// Coefficient n is the point sum of the arrangement generated in C^n.
TruncatedSeries series_from_partition(const std::vector<RepresentativeEquation>& reps, SymmetryKind kind,
                                      const RingSpec& spec, unsigned order);

enum class LhsSource { Definition, PointCount, ClosedForm };

struct EgfEntry {
  unsigned n;
  Poly lhs;
  Poly rhs;
  bool equal;
};

struct EgfReport {
  Identity identity;
  EgfParams params;
  LhsSource source;
  std::vector<EgfEntry> entries;

  bool all_equal() const;
  std::string to_string() const;
};

/// n-th left-hand coefficient: |ring|^{n - r(A_n)} cob_{A_n}(|ring|, t), where
/// A_n is the family member in C^n.
Poly egf_lhs_term(Identity id, const EgfParams& params, unsigned n, LhsSource source);

EgfReport egf_check(Identity id, const EgfParams& params, unsigned order, LhsSource source);

}  // namespace symtutte
