#pragma once

// Named arrangement families with their representative equations.

#include <string>
#include <vector>

#include "symtutte/arrangement.hpp"
#include "symtutte/representative.hpp"

namespace symtutte {

struct FamilyInstance {
  std::string name;
  Arrangement arrangement;
  SymmetryKind kind;
  std::vector<RepresentativeEquation> reps;
};

/// {z_i - z_j = 0} in C^n.
FamilyInstance family_a(unsigned n);
/// {z_i +- z_j = 0} and {z_i = 0} in C^n.
FamilyInstance family_b(unsigned n);
/// {z_i +- z_j = 0} in C^n.
FamilyInstance family_d(unsigned n);
/// {z_i = 0}, {z_i = 1}, {z_i + z_j = 1} in C^n.
FamilyInstance family_i(unsigned n);
/// {z_i - w^k z_j = 0} for every k, plus {z_i = 0} when p < m. Requires p | m.
FamilyInstance family_g(unsigned m, unsigned p, unsigned n);

/// Dispatch by letter (A, B, D, I, G) with positional parameters, as used by
/// the command line.
FamilyInstance family_by_name(const std::string& letter, const std::vector<unsigned>& params);

}  // namespace symtutte
