#pragma once

// Line-oriented arrangement files:
//
//   m = 4
//   n = 2
//   z1 - (w) z2 = 0
//   2 z1 + (1 - w^1) z2 = 1 + w
//
// or, for symmetric arrangements, representative equations:
//
//   rep csh: z1 - z2 = 0
//
// Blank lines and lines starting with '#' are ignored.

#include <optional>
#include <string>
#include <vector>

#include "symtutte/arrangement.hpp"
#include "symtutte/representative.hpp"

namespace symtutte {

struct ArrangementFile {
  unsigned m = 1;
  unsigned n = 0;
  std::vector<Hyperplane> hyperplanes;
  /// Set when the body consists of representative lines.
  std::optional<SymmetryKind> kind;
  std::vector<RepresentativeEquation> reps;

  /// The listed hyperplanes, or the expansion of the representatives.
  Arrangement arrangement() const;
};

/// Throws ParseError with line and token positions.
ArrangementFile parse_arrangement(const std::string& text);
std::string render_arrangement(const ArrangementFile& f);
/// A file listing every hyperplane of `a`.
ArrangementFile file_from(const Arrangement& a);

/// Text form of a coefficient: an integer, or a parenthesised combination of
/// powers of w.
std::string render_coefficient(const CycElem& c);

/// {"vars":[v1,v2],"terms":[[e1,e2,"coeff"],...]} with terms in increasing
/// lexicographic exponent order.
std::string to_json(const BivarPoly& p);
std::string to_json(const Poly& p, const std::string& var);

}  // namespace symtutte
