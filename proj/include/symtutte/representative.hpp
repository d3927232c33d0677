#pragma once

#include <string>
#include <vector>

#include "symtutte/arrangement.hpp"

namespace symtutte {

/// Which group the arrangement is invariant under: coordinate permutations
/// (sh) or colored permutations U_m wr S_n (csh).
enum class SymmetryKind { SH, CSH };

std::string to_string(SymmetryKind k);

/// c_1 z_1 + ... + c_j z_j = d generating one orbit of hyperplanes.
struct RepresentativeEquation {
  std::vector<CycElem> coeffs;
  CycElem rhs;

  unsigned arity() const { return static_cast<unsigned>(coeffs.size()); }
  /// The equation as a hyperplane of C^arity.
  Hyperplane as_hyperplane() const { return {coeffs, rhs}; }

  friend bool operator==(const RepresentativeEquation&, const RepresentativeEquation&) = default;
};

/// Throws InvalidHyperplane unless the arity is positive and the first and
/// last coefficients are nonzero in Q(w).
void validate(const RepresentativeEquation& e);

}  // namespace symtutte
