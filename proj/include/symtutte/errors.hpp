#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace symtutte {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidOrder : public Error {
 public:
  using Error::Error;
};

/// Operands live in rings with different root orders.
class IncompatibleRing : public Error {
 public:
  using Error::Error;
};

/// F_q has no element of the requested multiplicative order.
class NoRootOfUnity : public Error {
 public:
  using Error::Error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

class InvalidHyperplane : public Error {
 public:
  using Error::Error;
};

class DuplicateHyperplane : public Error {
 public:
  using Error::Error;
};

class InvalidFamily : public Error {
 public:
  using Error::Error;
};

class NotReal : public Error {
 public:
  using Error::Error;
};

/// The reduction of an arrangement or equation mod q is degenerate.
class InvalidReduction : public Error {
 public:
  using Error::Error;
};

class InsufficientPoints : public Error {
 public:
  using Error::Error;
};

/// An identity that must hold exactly did not (signals a bug).
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

/// The point count over a finite ring is not divisible as the finite field
/// method requires. Carries enough context to report the failing instance.
class TheoremViolation : public Error {
 public:
  TheoremViolation(std::string ring, unsigned t_degree, std::string count, std::string divisor)
      : Error("point count not divisible over " + ring + ": coefficient of t^" +
              std::to_string(t_degree) + " is " + count + ", divisor " + divisor),
        ring_(std::move(ring)),
        t_degree_(t_degree),
        count_(std::move(count)),
        divisor_(std::move(divisor)) {}

  const std::string& ring() const { return ring_; }
  unsigned t_degree() const { return t_degree_; }
  const std::string& count() const { return count_; }
  const std::string& divisor() const { return divisor_; }

 private:
  std::string ring_;
  unsigned t_degree_;
  std::string count_;
  std::string divisor_;
};

/// A root of unity other than 1 fixes a nonzero ring element, so U_m does not
/// act freely and orbit sizes differ from m^{#nonzero coordinates}.
class FreenessViolation : public Error {
 public:
  FreenessViolation(std::string ring, unsigned root_power, std::string element)
      : Error("U_m does not act freely on " + ring + ": w^" + std::to_string(root_power) +
              " fixes " + element),
        ring_(std::move(ring)),
        root_power_(root_power),
        element_(std::move(element)) {}

  const std::string& ring() const { return ring_; }
  unsigned root_power() const { return root_power_; }
  const std::string& element() const { return element_; }

 private:
  std::string ring_;
  unsigned root_power_;
  std::string element_;
};

/// The intersection of a subarrangement has the wrong number of points in
/// the ring: |ring|^{n - r(B)} for central B, none otherwise. Raised on rings
/// with zero divisors, where the finite field method loses its footing.
class FlatSizeViolation : public Error {
 public:
  FlatSizeViolation(std::string ring, std::string subset, std::string points, std::string expected)
      : Error("intersection of hyperplanes " + subset + " has " + points + " points over " + ring +
              ", expected " + expected),
        ring_(std::move(ring)),
        subset_(std::move(subset)),
        points_(std::move(points)),
        expected_(std::move(expected)) {}

  const std::string& ring() const { return ring_; }
  const std::string& subset() const { return subset_; }
  const std::string& points() const { return points_; }
  const std::string& expected() const { return expected_; }

 private:
  std::string ring_;
  std::string subset_;
  std::string points_;
  std::string expected_;
};

/// Syntax or semantic error in an arrangement file. `token` is 1-based
/// within the line, 0 when the whole line is at fault.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t token, const std::string& what)
      : Error("line " + std::to_string(line) +
              (token ? ", token " + std::to_string(token) : std::string()) + ": " + what),
        line_(line),
        token_(token) {}

  std::size_t line() const { return line_; }
  std::size_t token() const { return token_; }

 private:
  std::size_t line_;
  std::size_t token_;
};

}  // namespace symtutte
