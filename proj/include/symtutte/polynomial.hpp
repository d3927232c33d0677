#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "symtutte/integer.hpp"

namespace symtutte {

/// Dense univariate polynomial with exact integer coefficients.
class Poly {
 public:
  Poly() = default;
  Poly(const Integer& constant);  // NOLINT: implicit by design of the algebra
  Poly(int constant) : Poly(Integer(constant)) {}
  explicit Poly(std::vector<Integer> coeffs);

  static Poly monomial(const Integer& c, unsigned exp);
  /// The variable itself.
  static Poly var() { return monomial(1, 1); }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Integer& coeff(unsigned exp) const;
  const std::vector<Integer>& coeffs() const { return c_; }

  Integer eval(const Integer& x) const;
  /// this(p), i.e. substitute p for the variable.
  Poly compose(const Poly& p) const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly operator-() const;
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend bool operator==(const Poly&, const Poly&) = default;

  Poly pow(unsigned e) const;
  /// Divides every coefficient exactly; throws InconsistencyError otherwise.
  Poly exact_div(const Integer& d) const;

  std::string to_string(const std::string& var) const;

 private:
  void trim();
  std::vector<Integer> c_;
};

/// Sparse polynomial in two named variables with exact integer coefficients.
class BivarPoly {
 public:
  using Exponents = std::pair<unsigned, unsigned>;
  using Terms = std::map<Exponents, Integer>;

  BivarPoly(std::string v1, std::string v2) : vars_{std::move(v1), std::move(v2)} {}

  static BivarPoly constant(std::string v1, std::string v2, const Integer& c);
  static BivarPoly first(std::string v1, std::string v2);
  static BivarPoly second(std::string v1, std::string v2);
  /// p(v1) as a bivariate polynomial.
  static BivarPoly from_first(std::string v1, std::string v2, const Poly& p);
  static BivarPoly from_second(std::string v1, std::string v2, const Poly& p);

  const std::array<std::string, 2>& vars() const { return vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coeff(unsigned e1, unsigned e2) const;
  void add_term(unsigned e1, unsigned e2, const Integer& c);

  unsigned degree_first() const;
  unsigned degree_second() const;

  BivarPoly& operator+=(const BivarPoly& rhs);
  BivarPoly& operator-=(const BivarPoly& rhs);
  BivarPoly& operator*=(const BivarPoly& rhs);
  friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
  friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
  friend BivarPoly operator*(BivarPoly a, const BivarPoly& b) { return a *= b; }
  BivarPoly pow(unsigned e) const;

  /// Equality of the polynomials; variable names are metadata only.
  friend bool operator==(const BivarPoly& a, const BivarPoly& b) { return a.terms_ == b.terms_; }

  Integer eval(const Integer& v1, const Integer& v2) const;
  /// Value with the first variable fixed, as a polynomial in the second.
  Poly eval_first(const Integer& v1) const;
  /// Value with the second variable fixed, as a polynomial in the first.
  Poly eval_second(const Integer& v2) const;

  /// this(a, b) where a and b share a variable pair.
  BivarPoly substitute(const BivarPoly& a, const BivarPoly& b) const;
  /// Exact quotient by (v2 - root); throws InconsistencyError on remainder.
  BivarPoly divide_second_linear(const Integer& root) const;

  /// v1 -> v1^k.
  BivarPoly scale_first(unsigned k) const;
  /// Inverse of scale_first; throws InconsistencyError when an exponent is
  /// not a multiple of k.
  BivarPoly unscale_first(unsigned k) const;

  BivarPoly renamed(std::string v1, std::string v2) const;

  /// Canonical text, monomials in descending lexicographic exponent order.
  std::string to_string() const;

 private:
  std::array<std::string, 2> vars_;
  Terms terms_;
};

}  // namespace symtutte
