#include "symtutte/symmetric.hpp"

#include <algorithm>
#include <numeric>

#include "symtutte/errors.hpp"
#include "symtutte/families.hpp"
#include "symtutte/union_find.hpp"

namespace symtutte {

namespace {

constexpr std::uint64_t kMaxTuples = 1ull << 26;

Integer falling(unsigned a, unsigned k) {
  if (k > a) return 0;
  Integer r = 1;
  for (unsigned i = 0; i < k; ++i) r *= a - i;
  return r;
}

// A (colored) permutation of the variables of a representative equation:
// the coefficient c_k moves to position perm[k] and picks up w^color[k].
struct Move {
  std::vector<unsigned> perm;
  std::vector<unsigned> color;
};

std::vector<Move> equation_stabilizer(const RepresentativeEquation& e, unsigned m, bool colored) {
  const unsigned j = e.arity();
  const auto key = normalized_key(e.as_hyperplane());
  std::vector<Move> out;
  std::vector<unsigned> perm(j);
  std::iota(perm.begin(), perm.end(), 0u);
  const unsigned colors = colored ? m : 1;
  std::uint64_t color_count = 1;
  for (unsigned k = 0; k < j; ++k) color_count *= colors;
  do {
    for (std::uint64_t code = 0; code < color_count; ++code) {
      std::vector<unsigned> color(j);
      std::uint64_t c = code;
      for (unsigned k = 0; k < j; ++k) {
        color[k] = static_cast<unsigned>(c % colors);
        c /= colors;
      }
      Hyperplane moved{std::vector<CycElem>(j, CycElem(m)), e.rhs};
      for (unsigned k = 0; k < j; ++k) moved.coeffs[perm[k]] = e.coeffs[k] * CycElem::root_power(m, color[k]);
      if (normalized_key(moved) == key) out.push_back({perm, color});
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// Image of a solution tuple: a point w lies on the moved hyperplane iff
// (w^{color_k} w_{perm_k})_k solves the original equation.
Tuple apply(const Move& g, const Tuple& w, const FiniteRing& ring) {
  Tuple out(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) out[k] = ring.mul(ring.roots()[g.color[k]], w[g.perm[k]]);
  return out;
}

Poly divide_point_sum(const Poly& sum, const RingSpec& spec, unsigned exponent) {
  const Integer divisor = ipow(Integer(static_cast<unsigned long>(spec.ring_size())), exponent);
  std::vector<Integer> c;
  for (int e = 0; e <= sum.degree(); ++e) {
    const Integer& v = sum.coeff(static_cast<unsigned>(e));
    if (v % divisor != 0)
      throw TheoremViolation(spec.describe(), static_cast<unsigned>(e), v.get_str(), divisor.get_str());
    c.push_back(v / divisor);
  }
  return Poly(std::move(c));
}

std::vector<SolutionSet> solve_all(const std::vector<RepresentativeEquation>& reps, unsigned n,
                                   const FiniteRing& ring, bool colored) {
  std::vector<SolutionSet> sols;
  unsigned widest = 0;
  for (const auto& e : reps)
    if (e.arity() <= n) {
      sols.push_back(solve_representative(e, ring, colored));
      widest = std::max(widest, e.arity());
    }
  // Overlapping orbits would be counted twice.
  expand_representatives(reps, colored ? SymmetryKind::CSH : SymmetryKind::SH, ring.root_order(), widest);
  return sols;
}

std::vector<Elem> all_elements(const FiniteRing& ring) {
  std::vector<Elem> keys(ring.size());
  std::iota(keys.begin(), keys.end(), Elem{0});
  return keys;
}

Integer multinomial_of(const CompositionIndex& a) {
  std::vector<unsigned> parts;
  for (const auto& [k, v] : a.a) parts.push_back(v);
  return multinomial(parts);
}

}  // namespace

unsigned CompositionIndex::at(Elem t) const {
  const auto it = a.find(t);
  return it == a.end() ? 0 : it->second;
}

unsigned CompositionIndex::norm() const {
  unsigned s = 0;
  for (const auto& [k, v] : a) s += v;
  return s;
}

unsigned occurrences(const Tuple& v, Elem t) {
  return static_cast<unsigned>(std::count(v.begin(), v.end(), t));
}

std::set<Elem> support(const Tuple& v) { return {v.begin(), v.end()}; }

CompositionIndex composition(const Tuple& v) {
  CompositionIndex c;
  for (auto x : v) ++c.a[x];
  return c;
}

Integer f(const CompositionIndex& a, const Tuple& v) {
  Integer r = 1;
  for (const auto& [t, o] : composition(v).a) r *= binomial(a.at(t), o);
  return r;
}

Integer f(const CompositionIndex& a, const std::vector<Tuple>& M) {
  Integer s = 0;
  for (const auto& v : M) s += f(a, v);
  return s;
}

Integer f_u_m(const CompositionIndex& a, const Tuple& v, Elem u, unsigned m) {
  const unsigned o = occurrences(v, u);
  if (o == v.size()) return ipow(Integer(m), v.empty() ? 0 : v.size() - 1) * binomial(a.at(u), o);
  return ipow(Integer(m), o) * f(a, v);
}

Integer f_u_m(const CompositionIndex& a, const std::vector<Tuple>& M, Elem u, unsigned m) {
  Integer s = 0;
  for (const auto& v : M) s += f_u_m(a, v, u, m);
  return s;
}

OrbitClasses::OrbitClasses(const FiniteRing& ring)
    : m_(ring.root_order()), class_of_(ring.size(), 0) {
  std::vector<bool> seen(ring.size(), false);
  for (Elem e = 0; e < ring.size(); ++e) {
    if (seen[e]) continue;
    if (e != 0)
      for (unsigned k = 1; k < m_; ++k)
        if (ring.mul(ring.roots()[k], e) == e)
          throw FreenessViolation(ring.spec().describe(), k, ring.element_string(e));
    Elem key = e;
    for (unsigned k = 0; k < m_; ++k) key = std::min(key, ring.mul(ring.roots()[k], e));
    for (unsigned k = 0; k < m_; ++k) {
      const Elem x = ring.mul(ring.roots()[k], e);
      seen[x] = true;
      class_of_[x] = key;
    }
    keys_.push_back(key);
  }
  std::sort(keys_.begin(), keys_.end());
}

std::set<Tuple> u_m_star(const Tuple& v, const FiniteRing& ring) {
  std::set<Tuple> out{Tuple{}};
  for (auto x : v) {
    std::set<Tuple> next;
    for (const auto& prefix : out)
      for (auto r : ring.roots()) {
        Tuple t = prefix;
        t.push_back(ring.mul(r, x));
        next.insert(std::move(t));
      }
    out = std::move(next);
  }
  return out;
}

std::uint64_t orbit_size(const Tuple& v, const FiniteRing& ring) {
  const std::uint64_t size = u_m_star(v, ring).size();
  std::uint64_t expected = 1;
  for (auto x : v)
    if (x != 0) expected *= ring.root_order();
  if (size != expected) {
    for (auto x : v)
      for (unsigned k = 1; x != 0 && k < ring.root_order(); ++k)
        if (ring.mul(ring.roots()[k], x) == x)
          throw FreenessViolation(ring.spec().describe(), k, ring.element_string(x));
    throw InconsistencyError("orbit size mismatch without a fixed point");
  }
  return size;
}

Tuple star_class(const Tuple& v, const OrbitClasses& classes) {
  Tuple out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out[k] = classes.class_of(v[k]);
  return out;
}

std::set<Tuple> star_classes(const std::set<Tuple>& vs, const OrbitClasses& classes) {
  std::set<Tuple> out;
  for (const auto& v : vs) out.insert(star_class(v, classes));
  return out;
}

SolutionSet solve_representative(const RepresentativeEquation& e, const FiniteRing& ring, bool colored) {
  validate(e);
  const unsigned m = ring.root_order();
  if (e.rhs.order() != m) throw IncompatibleRing("equation and ring have different root orders");
  const unsigned j = e.arity();
  std::vector<Elem> c;
  for (const auto& x : e.coeffs) c.push_back(ring.reduce(x));
  if (std::all_of(c.begin(), c.end(), [](Elem x) { return x == 0; }))
    throw InvalidReduction("representative equation vanishes over " + ring.spec().describe());
  const Elem d = ring.reduce(e.rhs);

  std::uint64_t total = 1;
  for (unsigned k = 0; k < j; ++k) {
    total *= ring.size();
    if (total > kMaxTuples) throw InvalidParameter("solution space too large");
  }
  std::vector<Tuple> sol;
  Tuple w(j, 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Elem acc = 0;
    for (unsigned k = 0; k < j; ++k) acc = ring.add(acc, ring.mul(c[k], w[k]));
    if (acc == d) sol.push_back(w);
    for (unsigned k = j; k-- > 0;) {
      if (++w[k] < ring.size()) break;
      w[k] = 0;
    }
  }
  // `sol` is in lexicographic order by construction.
  const auto stab = equation_stabilizer(e, m, colored);
  SolutionSet out{e, ring.spec(), colored, stab.size(), {}, {}, {}};
  std::set<Tuple> visited;
  for (const auto& v : sol) {
    if (visited.count(v)) continue;
    std::set<Tuple> orbit;
    for (const auto& g : stab) orbit.insert(apply(g, v, ring));
    for (const auto& x : orbit) {
      if (!std::binary_search(sol.begin(), sol.end(), x))
        throw InconsistencyError("stabiliser of the equation does not preserve its solutions over " +
                                 ring.spec().describe());
      visited.insert(x);
    }
    out.vectors.push_back(v);
    out.orbit_sizes.push_back(orbit.size());
  }
  if (colored) {
    const OrbitClasses classes(ring);
    for (const auto& v : out.vectors) out.classes.push_back(star_class(v, classes));
  }
  return out;
}

IndicePartition build_indice_partition(const std::vector<SolutionSet>& sols) {
  std::vector<IndicePartition::Member> members;
  std::vector<const Tuple*> supports;
  for (std::size_t s = 0; s < sols.size(); ++s)
    for (std::size_t v = 0; v < sols[s].vectors.size(); ++v) {
      members.push_back({s, v});
      supports.push_back(sols[s].colored ? &sols[s].classes[v] : &sols[s].vectors[v]);
    }
  UnionFind uf(members.size());
  std::map<Elem, std::size_t> owner;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (auto x : *supports[i]) {
      const auto [it, fresh] = owner.emplace(x, i);
      if (!fresh) uf.unite(it->second, i);
    }
  std::map<std::size_t, std::size_t> block_of;
  IndicePartition out;
  for (std::size_t i = 0; i < members.size(); ++i) {
    const auto root = uf.find(i);
    const auto [it, fresh] = block_of.emplace(root, out.blocks.size());
    if (fresh) out.blocks.emplace_back();
    out.blocks[it->second].push_back(members[i]);
  }
  return out;
}

Integer hyperplane_count_sh(const CompositionIndex& a, const std::vector<SolutionSet>& sols) {
  Integer total = 0;
  for (const auto& s : sols) {
    Integer sum = 0;
    for (std::size_t i = 0; i < s.vectors.size(); ++i) {
      Integer injections = 1;
      for (const auto& [t, o] : composition(s.vectors[i]).a) injections *= falling(a.at(t), o);
      sum += injections * s.orbit_sizes[i];
    }
    total += exact_div(sum, s.stabilizer_order);
  }
  return total;
}

Integer hyperplane_count_csh(const CompositionIndex& a, const std::vector<SolutionSet>& sols) {
  Integer total = 0;
  for (const auto& s : sols) {
    if (!s.colored) throw InvalidParameter("csh count needs colored solution sets");
    const unsigned m = s.spec.m;
    Integer sum = 0;
    for (std::size_t i = 0; i < s.vectors.size(); ++i) {
      const Tuple& cls = s.classes[i];
      Integer injections = ipow(Integer(m), occurrences(s.vectors[i], 0));
      for (const auto& [k, o] : composition(cls).a) injections *= falling(a.at(k), o);
      sum += injections * s.orbit_sizes[i];
    }
    total += exact_div(sum, s.stabilizer_order);
  }
  return total;
}

unsigned h_of_point_sh(const Tuple& u, const std::vector<SolutionSet>& sols) {
  return static_cast<unsigned>(hyperplane_count_sh(composition(u), sols).get_ui());
}

unsigned h_of_point_csh(const Tuple& u, const std::vector<SolutionSet>& sols, const OrbitClasses& classes) {
  return static_cast<unsigned>(hyperplane_count_csh(composition(star_class(u, classes)), sols).get_ui());
}

Integer binomial_count_sh(const CompositionIndex& a, const std::vector<SolutionSet>& sols) {
  const auto part = build_indice_partition(sols);
  Integer total = 0;
  for (const auto& block : part.blocks) {
    std::vector<Tuple> M;
    for (const auto& mem : block) M.push_back(sols[mem.set].vectors[mem.vector]);
    total += f(a, M);
  }
  return total;
}

Integer binomial_count_csh(const CompositionIndex& a, const std::vector<SolutionSet>& sols) {
  const auto part = build_indice_partition(sols);
  Integer total = 0;
  for (const auto& block : part.blocks) {
    std::vector<Tuple> M;
    for (const auto& mem : block) M.push_back(sols[mem.set].classes[mem.vector]);
    if (!M.empty()) total += f_u_m(a, M, 0, sols[block.front().set].spec.m);
  }
  return total;
}

void for_each_composition(const std::vector<Elem>& keys, unsigned n,
                          const std::function<void(const CompositionIndex&)>& fn) {
  CompositionIndex a;
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i + 1 == keys.size()) {
      if (left) a.a[keys[i]] = left;
      fn(a);
      a.a.erase(keys[i]);
      return;
    }
    for (unsigned v = 0; v <= left; ++v) {
      if (v) a.a[keys[i]] = v;
      rec(i + 1, left - v);
    }
    a.a.erase(keys[i]);
  };
  if (keys.empty()) {
    if (n == 0) fn(a);
    return;
  }
  rec(0, n);
}

Poly point_sum_sh(const std::vector<RepresentativeEquation>& reps, unsigned n, const RingSpec& spec) {
  const FiniteRing ring(spec);
  const auto sols = solve_all(reps, n, ring, false);
  std::map<unsigned long, Integer> by_h;
  for_each_composition(all_elements(ring), n, [&](const CompositionIndex& a) {
    by_h[hyperplane_count_sh(a, sols).get_ui()] += multinomial_of(a);
  });
  Poly out;
  for (const auto& [h, c] : by_h) out += Poly::monomial(c, static_cast<unsigned>(h));
  return out;
}

Poly point_sum_csh(const std::vector<RepresentativeEquation>& reps, unsigned n, const RingSpec& spec) {
  const FiniteRing ring(spec);
  const OrbitClasses classes(ring);
  const auto sols = solve_all(reps, n, ring, true);
  const unsigned m = spec.m;
  std::map<unsigned long, Integer> by_h;
  for_each_composition(classes.keys(), n, [&](const CompositionIndex& a) {
    by_h[hyperplane_count_csh(a, sols).get_ui()] += multinomial_of(a) * ipow(Integer(m), n - a.at(0));
  });
  Poly out;
  for (const auto& [h, c] : by_h) out += Poly::monomial(c, static_cast<unsigned>(h));
  return out;
}

Poly coboundary_sh_closed_form(const std::vector<RepresentativeEquation>& reps, unsigned n,
                               const RingSpec& spec, unsigned full_rank) {
  return divide_point_sum(point_sum_sh(reps, n, spec), spec, n - full_rank);
}

Poly coboundary_csh_closed_form(const std::vector<RepresentativeEquation>& reps, unsigned n,
                                const RingSpec& spec, unsigned full_rank) {
  return divide_point_sum(point_sum_csh(reps, n, spec), spec, n - full_rank);
}

Arrangement expand_representatives(const std::vector<RepresentativeEquation>& reps, SymmetryKind kind,
                                   unsigned m, unsigned n) {
  std::vector<Hyperplane> hs;
  std::map<std::vector<NFElem>, std::size_t> seen;
  const unsigned colors = kind == SymmetryKind::CSH ? m : 1;
  for (std::size_t ei = 0; ei < reps.size(); ++ei) {
    const auto& e = reps[ei];
    validate(e);
    const unsigned j = e.arity();
    if (j > n) continue;
    if (e.rhs.order() != m) throw IncompatibleRing("representative equation is not over Z[w_" + std::to_string(m) + "]");
    std::uint64_t color_count = 1;
    for (unsigned k = 0; k < j; ++k) color_count *= colors;
    // Injections [j] -> [n] as ordered selections.
    std::vector<unsigned> pick(j, 0);
    std::function<void(unsigned, std::vector<bool>&)> rec = [&](unsigned k, std::vector<bool>& used) {
      if (k == j) {
        for (std::uint64_t code = 0; code < color_count; ++code) {
          Hyperplane h{std::vector<CycElem>(n, CycElem(m)), e.rhs};
          std::uint64_t c = code;
          for (unsigned i = 0; i < j; ++i) {
            h.coeffs[pick[i]] = e.coeffs[i] * CycElem::root_power(m, static_cast<long>(c % colors));
            c /= colors;
          }
          const auto [it, fresh] = seen.emplace(normalized_key(h), ei);
          if (fresh) hs.push_back(std::move(h));
          else if (it->second != ei)
            throw DuplicateHyperplane("representatives " + std::to_string(it->second + 1) + " and " +
                                      std::to_string(ei + 1) + " generate the same hyperplanes");
        }
        return;
      }
      for (unsigned i = 0; i < n; ++i) {
        if (used[i]) continue;
        used[i] = true;
        pick[k] = i;
        rec(k + 1, used);
        used[i] = false;
      }
    };
    std::vector<bool> used(n, false);
    rec(0, used);
  }
  return Arrangement(m, n, std::move(hs));
}

std::vector<RepresentativeEquation> discover_representatives(const Arrangement& a, SymmetryKind kind) {
  const unsigned m = a.root_order();
  std::map<std::vector<NFElem>, std::size_t> index;
  for (std::size_t i = 0; i < a.size(); ++i) index.emplace(normalized_key(a[i]), i);
  std::vector<bool> covered(a.size(), false);
  std::vector<RepresentativeEquation> reps;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (covered[i]) continue;
    RepresentativeEquation e{{}, a[i].rhs};
    for (const auto& c : a[i].coeffs)
      if (!to_number_field(c).is_zero()) e.coeffs.push_back(c);
    const Arrangement orbit = expand_representatives({e}, kind, m, a.dim());
    for (const auto& h : orbit.hyperplanes()) {
      const auto it = index.find(normalized_key(h));
      if (it == index.end())
        throw InvalidParameter("arrangement is not invariant under " +
                               std::string(kind == SymmetryKind::SH ? "coordinate" : "colored") +
                               " permutations (orbit of hyperplane " + std::to_string(i + 1) + ")");
      covered[it->second] = true;
    }
    reps.push_back(std::move(e));
  }
  return reps;
}

Poly coboundary_i_display(unsigned n, unsigned q) {
  if (q < 3 || q % 2 == 0 || !is_prime(q)) throw InvalidParameter("the I_n display needs an odd prime q");
  std::vector<Elem> keys(q);
  std::iota(keys.begin(), keys.end(), Elem{0});
  const Elem half = (q + 1) / 2;
  Poly out;
  for_each_composition(keys, n, [&](const CompositionIndex& a) {
    Integer e = a.at(0) + a.at(1) + a.at(0) * a.at(1) + binomial(a.at(half), 2);
    for (Elem i = 2; i <= (q - 1) / 2; ++i) e += a.at(i) * a.at(q + 1 - i);
    out += Poly::monomial(multinomial_of(a), static_cast<unsigned>(e.get_ui()));
  });
  return out;
}

Poly coboundary_g_display(unsigned m, unsigned p, unsigned n, const RingSpec& spec) {
  if (spec.m != m) throw IncompatibleRing("ring root order differs from m");
  const auto fam = family_g(m, p, n);
  const FiniteRing ring(spec);
  const OrbitClasses classes(ring);
  Poly sum;
  for_each_composition(classes.keys(), n, [&](const CompositionIndex& a) {
    const unsigned a0 = a.at(0);
    Integer e = (p < m ? a0 : 0) + m * binomial(a0, 2);
    for (const auto& [k, v] : a.a)
      if (k != 0) e += binomial(v, 2);
    sum += Poly::monomial(multinomial_of(a) * ipow(Integer(m), n - a0), static_cast<unsigned>(e.get_ui()));
  });
  return divide_point_sum(sum, spec, n - rank(fam.arrangement));
}

}  // namespace symtutte
