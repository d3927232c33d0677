#pragma once

// Closed-form coboundary polynomials of arrangements that are invariant under
// coordinate permutations (sh) or colored permutations (csh).
//
// A point u of ring^n lies on the hyperplane sum_k c_k xi_k z_{i(k)} = d of the
// orbit of a representative equation E iff (xi_k u_{i(k)})_k solves E. Counting
// those colored injections and dividing by the order of the stabiliser of E
// gives h(u) as a function of the value composition of u alone, which is what
// makes the multinomial closed forms work.

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "symtutte/finite_field.hpp"
#include "symtutte/representative.hpp"

namespace symtutte {

using Elem = FiniteRing::Elem;
using Tuple = std::vector<Elem>;

/// Sparse composition: a_t for each element (or class) t with a_t > 0.
struct CompositionIndex {
  std::map<Elem, unsigned> a;

  unsigned at(Elem t) const;
  unsigned norm() const;
  friend bool operator==(const CompositionIndex&, const CompositionIndex&) = default;
};

unsigned occurrences(const Tuple& v, Elem t);
std::set<Elem> support(const Tuple& v);
CompositionIndex composition(const Tuple& v);

/// prod_{t in S(v)} binom(a_t, o_t(v)).
Integer f(const CompositionIndex& a, const Tuple& v);
Integer f(const CompositionIndex& a, const std::vector<Tuple>& M);
/// m^{j-1} binom(a_u, j) when every entry of v (length j) equals u,
/// m^{o_u(v)} f(a, v) otherwise.
Integer f_u_m(const CompositionIndex& a, const Tuple& v, Elem u, unsigned m);
Integer f_u_m(const CompositionIndex& a, const std::vector<Tuple>& M, Elem u, unsigned m);

/// Orbits of ring elements under multiplication by the m-th roots of unity.
/// Each class is keyed by its smallest member; 0 is its own class.
class OrbitClasses {
 public:
  /// Throws FreenessViolation if a nontrivial root fixes a nonzero element.
  explicit OrbitClasses(const FiniteRing& ring);

  Elem class_of(Elem e) const { return class_of_[e]; }
  const std::vector<Elem>& keys() const { return keys_; }
  unsigned m() const { return m_; }

 private:
  unsigned m_;
  std::vector<Elem> class_of_;
  std::vector<Elem> keys_;
};

/// U_m * v: all (xi_1 v_1, ..., xi_k v_k) with xi_i roots of unity.
std::set<Tuple> u_m_star(const Tuple& v, const FiniteRing& ring);
/// |U_m * v|; throws FreenessViolation unless it equals m^{#nonzero entries}.
std::uint64_t orbit_size(const Tuple& v, const FiniteRing& ring);
/// Class tuple of v (each entry replaced by its class key).
Tuple star_class(const Tuple& v, const OrbitClasses& classes);
std::set<Tuple> star_classes(const std::set<Tuple>& vs, const OrbitClasses& classes);

/// Solutions of a reduced representative equation, one per orbit of its
/// stabiliser, with the data needed to turn compositions into counts.
struct SolutionSet {
  RepresentativeEquation equation;
  RingSpec spec;
  bool colored = false;
  /// Order of the group of (colored) permutations of the variables mapping
  /// the equation to a multiple of itself.
  std::uint64_t stabilizer_order = 1;
  /// Lexicographically smallest member of each orbit.
  std::vector<Tuple> vectors;
  /// Orbit sizes, aligned with `vectors`.
  std::vector<std::uint64_t> orbit_sizes;
  /// Class tuples (csh only), aligned with `vectors`.
  std::vector<Tuple> classes;
};

/// Throws InvalidReduction when every coefficient vanishes in the ring.
SolutionSet solve_representative(const RepresentativeEquation& e, const FiniteRing& ring, bool colored);

/// Connected components of solution vectors under "supports intersect".
/// For csh solution sets the supports are taken over orbit classes.
struct IndicePartition {
  struct Member {
    std::size_t set;
    std::size_t vector;
  };
  std::vector<std::vector<Member>> blocks;
};

IndicePartition build_indice_partition(const std::vector<SolutionSet>& sols);

/// h(u) from the composition of u, one stabiliser-weighted term per solution
/// orbit. Works for any representative system, including ones whose
/// stabiliser is smaller than the value-stabiliser of a solution.
unsigned h_of_point_sh(const Tuple& u, const std::vector<SolutionSet>& sols);
unsigned h_of_point_csh(const Tuple& u, const std::vector<SolutionSet>& sols, const OrbitClasses& classes);

/// The same counts from a composition (over elements for sh, over classes
/// for csh).
Integer hyperplane_count_sh(const CompositionIndex& a, const std::vector<SolutionSet>& sols);
Integer hyperplane_count_csh(const CompositionIndex& a, const std::vector<SolutionSet>& sols);

/// sum_j f(a, M_j) and sum_j f_0^{(m)}(a, M_j*) over the indice partition:
/// the binomial-product counts, exact when each solution's value-stabiliser
/// lies inside the equation's stabiliser (true for every named family).
Integer binomial_count_sh(const CompositionIndex& a, const std::vector<SolutionSet>& sols);
Integer binomial_count_csh(const CompositionIndex& a, const std::vector<SolutionSet>& sols);

/// Calls fn(a) for every composition of n over `keys`.
void for_each_composition(const std::vector<Elem>& keys, unsigned n,
                          const std::function<void(const CompositionIndex&)>& fn);

/// sum_u t^{h(u)} via sum_a binom(n, a) t^{h(a)}.
Poly point_sum_sh(const std::vector<RepresentativeEquation>& reps, unsigned n, const RingSpec& spec);
/// sum_u t^{h(u)} via sum_a binom(n, a) m^{n - a_0} t^{h(a)} over classes.
Poly point_sum_csh(const std::vector<RepresentativeEquation>& reps, unsigned n, const RingSpec& spec);

/// cob(|ring|, t) = point sum / |ring|^{n - r}. `full_rank` is r(A).
Poly coboundary_sh_closed_form(const std::vector<RepresentativeEquation>& reps, unsigned n,
                               const RingSpec& spec, unsigned full_rank);
Poly coboundary_csh_closed_form(const std::vector<RepresentativeEquation>& reps, unsigned n,
                                const RingSpec& spec, unsigned full_rank);

/// Every distinct hyperplane sum_k c_k xi_k z_{i(k)} = d over injections
/// i: [j] -> [n] (and roots xi_k when csh).
Arrangement expand_representatives(const std::vector<RepresentativeEquation>& reps, SymmetryKind kind,
                                   unsigned m, unsigned n);

/// Groups the hyperplanes of `a` into orbits and returns one representative
/// per orbit. Throws InvalidParameter when `a` is not invariant.
std::vector<RepresentativeEquation> discover_representatives(const Arrangement& a, SymmetryKind kind);

/// The I_n display: sum over compositions of n over F_q of
/// binom(n, a) t^{a_0 + a_1 + a_0 a_1 + binom(a_{(q+1)/2}, 2) + sum_i a_i a_{q+1-i}}.
Poly coboundary_i_display(unsigned n, unsigned q);
/// The G(m,p,n) display: sum over class compositions of
/// binom(n, a) m^{n - a_0} t^{[p<m] a_0 + m binom(a_0, 2) + sum_k binom(a_k, 2)},
/// divided by |ring|^{n - r}.
Poly coboundary_g_display(unsigned m, unsigned p, unsigned n, const RingSpec& spec);

}  // namespace symtutte
