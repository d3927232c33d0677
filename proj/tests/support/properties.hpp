#pragma once

// Randomised structural checks. Each runs at least `cases` instances from a
// fixed seed and records the first failure.

#include <functional>
#include <string>
#include <vector>

namespace props {

struct Result {
  std::string name;
  unsigned cases = 0;
  unsigned failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0 && cases > 0; }
};

Result ring_axioms(unsigned cases, unsigned seed = 1);
Result number_field_homomorphism(unsigned cases, unsigned seed = 2);
Result orbit_invariance(unsigned cases, unsigned seed = 3);
Result orbit_size_law(unsigned cases, unsigned seed = 4);
Result reconstruction(unsigned cases, unsigned seed = 5);
Result histogram_mass(unsigned cases, unsigned seed = 6);
Result parse_round_trip(unsigned cases, unsigned seed = 7);

struct Suite {
  const char* name;
  std::function<Result(unsigned)> run;
};

/// All suites, in the order reported.
const std::vector<Suite>& all_suites();

}  // namespace props
