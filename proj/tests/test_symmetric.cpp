#include <doctest.h>

#include <algorithm>
#include <optional>
#include <random>

#include "symtutte/errors.hpp"
#include "symtutte/families.hpp"
#include "symtutte/symmetric.hpp"

using namespace symtutte;

namespace {

RepresentativeEquation eq(std::vector<long> c, long d, unsigned m = 1) {
  RepresentativeEquation e{{}, CycElem::integer(m, d)};
  for (auto x : c) e.coeffs.push_back(CycElem::integer(m, x));
  return e;
}

std::vector<SolutionSet> solve_all(const std::vector<RepresentativeEquation>& reps, const FiniteRing& ring,
                                   bool colored) {
  std::vector<SolutionSet> out;
  for (const auto& e : reps) out.push_back(solve_representative(e, ring, colored));
  return out;
}

CompositionIndex comp(std::initializer_list<std::pair<Elem, unsigned>> xs) {
  CompositionIndex a;
  for (auto [t, c] : xs) a.a[t] = c;
  return a;
}

// Runs fn on every point of ring^n.
template <class Fn>
void for_each_point(const FiniteRing& ring, unsigned n, Fn fn) {
  Tuple u(n, 0);
  while (true) {
    fn(u);
    unsigned i = 0;
    while (i < n && ++u[i] == ring.size()) u[i++] = 0;
    if (i == n) return;
  }
}

}  // namespace

TEST_CASE("occurrences, support, composition") {
  const Tuple v{3, 3};
  CHECK(occurrences(v, 3) == 2);
  CHECK(support(v) == std::set<Elem>{3});
  const auto c = composition({2, 4});
  CHECK(c.at(2) == 1);
  CHECK(c.at(4) == 1);
  CHECK(c.at(0) == 0);
  CHECK(c.norm() == 2);
  CHECK(support({}).empty());
}

TEST_CASE("f and f_u_m") {
  const auto a = comp({{0, 2}, {2, 3}, {3, 4}, {4, 5}});
  CHECK(f(a, Tuple{2, 4}) == 15);
  CHECK(f(a, Tuple{3, 3}) == 6);
  CHECK(f(a, Tuple{1}) == 0);
  CHECK(f(a, std::vector<Tuple>{{2, 4}, {3, 3}}) == 21);
  CHECK(f_u_m(comp({{0, 3}}), Tuple{0, 0}, 0, 2) == 6);
  CHECK(f_u_m(comp({{1, 4}}), Tuple{1, 1}, 0, 3) == 6);
  CHECK(f_u_m(comp({{0, 1}}), Tuple{0}, 0, 3) == 1);
  // Mixed tuple: m^{o_0} f.
  CHECK(f_u_m(comp({{0, 2}, {1, 2}}), Tuple{0, 1}, 0, 3) == 3 * 4);
}

TEST_CASE("solution sets") {
  const FiniteRing f5(RingSpec::prime_field(1, 5));
  const auto s = solve_representative(eq({1, 1}, 1), f5, false);
  CHECK(s.vectors == std::vector<Tuple>{{0, 1}, {2, 4}, {3, 3}});
  CHECK(s.stabilizer_order == 2);
  CHECK(s.orbit_sizes == std::vector<std::uint64_t>{2, 2, 1});
  CHECK(solve_representative(eq({1}, 0), f5, false).vectors == std::vector<Tuple>{{0}});
  CHECK_THROWS_AS(solve_representative(eq({5}, 1), f5, false), InvalidReduction);

  const FiniteRing f7(RingSpec::prime_field(3, 7));
  const auto g = solve_representative(eq({1, -1}, 0, 3), f7, true);
  CHECK(g.vectors == std::vector<Tuple>{{0, 0}, {1, 1}, {3, 3}});
  const OrbitClasses cl(f7);
  CHECK(cl.keys() == std::vector<Elem>{0, 1, 3});
  CHECK(g.classes == std::vector<Tuple>{{0, 0}, {1, 1}, {3, 3}});
}

TEST_CASE("indice partitions") {
  const FiniteRing f5(RingSpec::prime_field(1, 5));
  const auto sols = solve_all(family_i(3).reps, f5, false);
  const auto p = build_indice_partition(sols);
  std::vector<std::vector<Tuple>> blocks;
  for (const auto& b : p.blocks) {
    std::vector<Tuple> vs;
    for (auto [s, v] : b) vs.push_back(sols[s].vectors[v]);
    std::sort(vs.begin(), vs.end());
    blocks.push_back(vs);
  }
  std::sort(blocks.begin(), blocks.end());
  CHECK(blocks == std::vector<std::vector<Tuple>>{{{0}, {0, 1}, {1}}, {{2, 4}}, {{3, 3}}});

  const FiniteRing f7(RingSpec::prime_field(3, 7));
  const auto gp = build_indice_partition(solve_all(family_g(3, 1, 2).reps, f7, true));
  std::vector<std::size_t> sizes;
  for (const auto& b : gp.blocks) sizes.push_back(b.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{1, 1, 2});

  const auto disjoint = build_indice_partition(solve_all({eq({1}, 2), eq({1}, 3)}, f5, false));
  CHECK(disjoint.blocks.size() == 2);
}

TEST_CASE("U_m orbits") {
  const FiniteRing f7(RingSpec::prime_field(3, 7));
  CHECK(u_m_star({0, 0}, f7) == std::set<Tuple>{{0, 0}});
  CHECK(u_m_star({1}, f7) == std::set<Tuple>{{1}, {2}, {4}});
  CHECK(orbit_size({1, 0}, f7) == 3);
  CHECK(orbit_size({1, 5}, f7) == 9);
  const OrbitClasses cl(f7);
  CHECK(star_class({4, 6, 0}, cl) == Tuple{1, 3, 0});
  CHECK(star_classes({{2}, {4}, {5}}, cl) == std::set<Tuple>{{1}, {3}});
  // x fixes 1 + x + x^2 in F_5[x]/(x^3 - 1).
  const FiniteRing lit(RingSpec::paper_literal(3, 5));
  CHECK_THROWS_AS(OrbitClasses{lit}, FreenessViolation);
  CHECK_THROWS_AS(orbit_size({lit.reduce(CycElem(3, {1, 1, 1}))}, lit), FreenessViolation);
}

TEST_CASE("h examples") {
  const FiniteRing f5(RingSpec::prime_field(1, 5));
  const auto sols = solve_all(family_i(3).reps, f5, false);
  CHECK(h_of_point_sh({0, 1, 2}, sols) == 3);
  const auto a2 = solve_all(family_a(3).reps, f5, false);
  CHECK(h_of_point_sh({0, 1, 2}, a2) == 0);
  CHECK(h_of_point_sh({4, 4, 4}, a2) == 3);

  const FiniteRing f7(RingSpec::prime_field(3, 7));
  const OrbitClasses cl(f7);
  const auto g = solve_all(family_g(3, 3, 2).reps, f7, true);
  CHECK(h_of_point_csh({1, 2}, g, cl) == 1);
  CHECK(h_of_point_csh({0, 0}, g, cl) == 3);
  CHECK(h_of_point_csh({1, 3}, g, cl) == 0);
}

TEST_CASE("h agrees with direct membership on every point") {
  struct Case {
    FamilyInstance fam;
    RingSpec spec;
  };
  std::vector<Case> cases;
  for (unsigned n = 1; n <= 3; ++n)
    for (unsigned q : {3u, 5u, 7u}) {
      cases.push_back({family_a(n), RingSpec::prime_field(1, q)});
      cases.push_back({family_b(n), RingSpec::prime_field(1, q)});
      cases.push_back({family_d(n), RingSpec::prime_field(1, q)});
      cases.push_back({family_i(n), RingSpec::prime_field(1, q)});
    }
  for (unsigned n = 1; n <= 3; ++n) {
    cases.push_back({family_g(3, 1, n), RingSpec::prime_field(3, 7)});
    cases.push_back({family_g(3, 3, n), RingSpec::prime_field(3, 7)});
    cases.push_back({family_g(2, 1, n), RingSpec::prime_field(2, 5)});
    cases.push_back({family_g(2, 2, n), RingSpec::prime_field(2, 7)});
    cases.push_back({family_g(4, 2, n), RingSpec::prime_field(4, 5)});
    cases.push_back({family_g(6, 3, n), RingSpec::prime_field(6, 7)});
  }
  for (const auto& [fam, spec] : cases) {
    CAPTURE(fam.name);
    CAPTURE(spec.describe());
    if (!check_correct_reduction(fam.arrangement, spec)) continue;
    const ReducedArrangement red(fam.arrangement, spec);
    const FiniteRing& ring = red.ring();
    const bool csh = fam.kind == SymmetryKind::CSH;
    const auto sols = solve_all(fam.reps, ring, csh);
    std::optional<OrbitClasses> cl;
    if (csh) cl.emplace(ring);
    unsigned bad = 0, bad_binomial = 0;
    for_each_point(ring, fam.arrangement.dim(), [&](const Tuple& u) {
      const unsigned direct = red.membership_count(u);
      const unsigned h = csh ? h_of_point_csh(u, sols, *cl) : h_of_point_sh(u, sols);
      bad += h != direct;
      Tuple key = csh ? star_class(u, *cl) : u;
      const auto a = composition(key);
      bad_binomial += (csh ? binomial_count_csh(a, sols) : binomial_count_sh(a, sols)) != direct;
    });
    CHECK(bad == 0);
    CHECK(bad_binomial == 0);
  }
}

TEST_CASE("weighted count generalises the binomial count") {
  // z1 + 2 z2 = 0 over F_5: its only symmetry is the identity, so (0,0) is a
  // solution whose value-stabiliser swaps the two coordinates.
  const FiniteRing f5(RingSpec::prime_field(1, 5));
  const std::vector<RepresentativeEquation> reps{eq({1, 2}, 0)};
  const auto sols = solve_all(reps, f5, false);
  const auto arr = expand_representatives(reps, SymmetryKind::SH, 1, 3);
  CHECK(arr.size() == 6);
  const ReducedArrangement red(arr, f5.spec());
  unsigned weighted_bad = 0, binomial_bad = 0;
  for_each_point(f5, 3, [&](const Tuple& u) {
    const unsigned direct = red.membership_count(u);
    weighted_bad += h_of_point_sh(u, sols) != direct;
    binomial_bad += binomial_count_sh(composition(u), sols) != direct;
  });
  CHECK(weighted_bad == 0);
  CHECK(binomial_bad > 0);
  CHECK(coboundary_sh_closed_form(reps, 3, f5.spec(), rank(arr)) == expected_at_prime(arr, f5.spec()));
}

TEST_CASE("closed forms") {
  const auto f5 = RingSpec::prime_field(1, 5);
  const auto a = family_a(3);
  CHECK(coboundary_sh_closed_form(a.reps, 3, f5, 2) == Poly(std::vector<Integer>{12, 12, 0, 1}));
  CHECK(coboundary_sh_closed_form(a.reps, 0, f5, 0) == Poly(1));
  CHECK(coboundary_csh_closed_form(family_g(3, 1, 1).reps, 0, RingSpec::prime_field(3, 7), 0) == Poly(1));

  const auto b2 = family_g(2, 1, 2);
  CHECK(coboundary_csh_closed_form(b2.reps, 2, RingSpec::prime_field(2, 5), 2) ==
        coboundary(family_b(2).arrangement).eval_first(5));

  for (unsigned n = 0; n <= 3; ++n)
    for (unsigned q : {5u, 7u, 11u}) {
      const auto fam = family_i(n);
      const auto spec = RingSpec::prime_field(1, q);
      const unsigned r = rank(fam.arrangement);
      CHECK(coboundary_i_display(n, q) == coboundary_sh_closed_form(fam.reps, n, spec, r));
      CHECK(coboundary_i_display(n, q) == expected_at_prime(fam.arrangement, spec));
    }

  for (auto [m, p, q] : std::vector<std::array<unsigned, 3>>{{2, 1, 5}, {2, 2, 7}, {3, 1, 7}, {3, 3, 13},
                                                             {4, 2, 5}, {4, 4, 13}, {4, 1, 17}})
    for (unsigned n = 1; n <= 3; ++n) {
      const auto fam = family_g(m, p, n);
      const auto spec = RingSpec::prime_field(m, q);
      CAPTURE(fam.name);
      CAPTURE(q);
      const auto expect = expected_at_prime(fam.arrangement, spec);
      CHECK(coboundary_g_display(m, p, n, spec) == expect);
      CHECK(coboundary_csh_closed_form(fam.reps, n, spec, rank(fam.arrangement)) == expect);
      CHECK(coboundary_at_prime(fam.arrangement, spec) == expect);
    }
}

TEST_CASE("expansion and discovery") {
  for (const auto& fam : {family_a(4), family_b(3), family_d(3), family_i(3)}) {
    CAPTURE(fam.name);
    const auto arr = expand_representatives(fam.reps, SymmetryKind::SH, 1, fam.arrangement.dim());
    CHECK(coboundary(arr) == coboundary(fam.arrangement));
    const auto found = discover_representatives(fam.arrangement, SymmetryKind::SH);
    CHECK(found.size() == fam.reps.size());
    CHECK(coboundary(expand_representatives(found, SymmetryKind::SH, 1, fam.arrangement.dim())) ==
          coboundary(fam.arrangement));
  }
  const auto g = family_g(3, 1, 3);
  const auto garr = expand_representatives(g.reps, SymmetryKind::CSH, 3, 3);
  CHECK(garr.size() == g.arrangement.size());
  CHECK(discover_representatives(g.arrangement, SymmetryKind::CSH).size() == 2);
  // Plain permutations also preserve G(m,p,n); w and w^2 differences are swapped into each other.
  CHECK(discover_representatives(g.arrangement, SymmetryKind::SH).size() == 3);
  // {z_i = 1} is permutation invariant but -z_1 = 1 is missing.
  const Arrangement ones(2, 2, {{{CycElem::integer(2, 1), CycElem(2)}, CycElem::integer(2, 1)},
                                {{CycElem(2), CycElem::integer(2, 1)}, CycElem::integer(2, 1)}});
  CHECK(discover_representatives(ones, SymmetryKind::SH).size() == 1);
  CHECK_THROWS_AS(discover_representatives(ones, SymmetryKind::CSH), InvalidParameter);
  const Arrangement lone(1, 2, {{{CycElem::integer(1, 1), CycElem(1)}, CycElem(1)}});
  CHECK_THROWS_AS(discover_representatives(lone, SymmetryKind::SH), InvalidParameter);
}

TEST_CASE("overlapping representatives are rejected") {
  const std::vector<RepresentativeEquation> twice{eq({1, -1}, 0), eq({-1, 1}, 0)};
  CHECK_THROWS_AS(expand_representatives(twice, SymmetryKind::SH, 1, 3), DuplicateHyperplane);
  CHECK_THROWS_AS(point_sum_sh(twice, 3, RingSpec::prime_field(1, 5)), DuplicateHyperplane);
  // A zero middle coefficient lands in the arity 2 orbit.
  CHECK_THROWS_AS(expand_representatives({eq({1, 1}, 0), eq({1, 0, 1}, 0)}, SymmetryKind::SH, 1, 3),
                  DuplicateHyperplane);
}

TEST_CASE("random representative systems") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> coef(-2, 2);
  unsigned checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const bool csh = trial % 2 == 1;
    const unsigned m = csh ? std::array{2u, 3u, 4u}[trial % 3] : 1;
    const unsigned n = csh ? 2 : 2 + trial % 4 / 2;
    std::vector<RepresentativeEquation> reps;
    for (int k = 0; k < 2; ++k) {
      const unsigned j = 1 + rng() % 2;
      RepresentativeEquation e{{}, CycElem::integer(m, coef(rng))};
      for (unsigned i = 0; i < j; ++i) {
        int c = coef(rng);
        if ((i == 0 || i + 1 == j) && c == 0) c = 1;
        e.coeffs.push_back(CycElem::integer(m, c));
      }
      reps.push_back(e);
    }
    Arrangement arr(1, 0);
    try {
      // Rejects systems whose representatives share an orbit.
      arr = expand_representatives(reps, csh ? SymmetryKind::CSH : SymmetryKind::SH, m, n);
    } catch (const Error&) {
      continue;
    }
    for (const auto& spec : select_valid_specs(arr, Backend::PrimeField, 2, 5, MinorPolicy{4, 64})) {
      CAPTURE(trial);
      CAPTURE(spec.describe());
      const unsigned r = rank(arr);
      // Colored expansions get large; the definition is only affordable on small ones.
      const auto expect = arr.size() <= 14 ? expected_at_prime(arr, spec) : coboundary_at_prime(arr, spec, 0, {4, 64});
      const auto got = csh ? coboundary_csh_closed_form(reps, n, spec, r) : coboundary_sh_closed_form(reps, n, spec, r);
      CHECK(got == expect);
      ++checked;
    }
  }
  CHECK(checked >= 40);
}
