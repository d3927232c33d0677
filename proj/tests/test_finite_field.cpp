#include <doctest.h>

#include <random>

#include "support/oracles.hpp"
#include "symtutte/errors.hpp"
#include "symtutte/families.hpp"
#include "symtutte/finite_field.hpp"

using namespace symtutte;

namespace {

Hyperplane hp(std::vector<long> c, long d, unsigned m = 1) {
  Hyperplane h{{}, CycElem::integer(m, d)};
  for (auto x : c) h.coeffs.push_back(CycElem::integer(m, x));
  return h;
}

Poly poly(std::vector<long> c) {
  std::vector<Integer> v(c.begin(), c.end());
  return Poly(v);
}

std::vector<std::uint64_t> trimmed(std::vector<std::uint64_t> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

}  // namespace

TEST_CASE("reduction check") {
  const auto a2 = family_a(3).arrangement;
  CHECK(check_correct_reduction(a2, RingSpec::prime_field(1, 5)));
  CHECK(check_correct_reduction(a2, RingSpec::paper_literal(1, 5)));
  CHECK_FALSE(check_correct_reduction(Arrangement(1, 1, {hp({2}, 0)}), RingSpec::prime_field(1, 2)));
  CHECK(check_correct_reduction(Arrangement(1, 3), RingSpec::prime_field(1, 2)));
  // The 2x2 coefficient determinant is -2, which vanishes mod 2.
  const Arrangement par(1, 2, {hp({1, 1}, 0), hp({1, -1}, 2)});
  CHECK_FALSE(check_correct_reduction(par, RingSpec::prime_field(1, 2)));
  CHECK(check_correct_reduction(par, RingSpec::prime_field(1, 3)));
  CHECK_THROWS_AS(check_correct_reduction(a2, RingSpec::prime_field(3, 7)), IncompatibleRing);
}

TEST_CASE("minor policy fallback is conservative") {
  const auto b3 = family_b(3).arrangement;
  const MinorPolicy tiny{1, 2};
  for (unsigned q : {3u, 5u, 7u, 11u, 13u})
    if (check_correct_reduction(b3, RingSpec::prime_field(1, q), tiny))
      CHECK(check_correct_reduction(b3, RingSpec::prime_field(1, q)));
}

TEST_CASE("augmented minors of a single hyperplane") {
  const auto minors = augmented_minors(Arrangement(1, 1, {hp({2}, 3)}));
  std::vector<long> vals;
  for (const auto& c : minors) vals.push_back(c[0].get_si());
  std::sort(vals.begin(), vals.end());
  CHECK(vals == std::vector<long>{2, 3});
}

TEST_CASE("point count histograms") {
  const auto spec = RingSpec::prime_field(1, 5);
  const ReducedArrangement one(Arrangement(1, 1, {hp({1}, 0)}), spec);
  CHECK(trimmed(point_count_histogram(one).counts) == std::vector<std::uint64_t>{4, 1});
  const ReducedArrangement a2(family_a(3).arrangement, spec);
  const auto h = point_count_histogram(a2);
  CHECK(trimmed(h.counts) == std::vector<std::uint64_t>{60, 60, 0, 5});
  CHECK(h.total() == 125);
  CHECK(h.as_polynomial() == poly({60, 60, 0, 5}));
  const ReducedArrangement empty(Arrangement(1, 2), spec);
  CHECK(trimmed(point_count_histogram(empty).counts) == std::vector<std::uint64_t>{25});
  for (unsigned threads : {1u, 2u, 3u, 7u}) CHECK(point_count_histogram(a2, threads) == h);
}

TEST_CASE("reduction errors") {
  CHECK_THROWS_AS(ReducedArrangement(Arrangement(1, 1, {hp({5}, 1)}), RingSpec::prime_field(1, 5)), InvalidReduction);
  CHECK_THROWS_AS(coboundary_at_prime(Arrangement(1, 1, {hp({2}, 0)}), RingSpec::prime_field(1, 2)),
                  InvalidReduction);
}

TEST_CASE("coboundary at a prime") {
  const auto spec = RingSpec::prime_field(1, 5);
  CHECK(coboundary_at_prime(Arrangement(1, 1, {hp({1}, 0)}), spec) == poly({4, 1}));
  CHECK(coboundary_at_prime(family_a(3).arrangement, spec) == poly({12, 12, 0, 1}));
  CHECK(coboundary_at_prime(Arrangement(1, 2), spec) == Poly(1));
  CHECK(expected_at_prime(family_a(3).arrangement, spec) == poly({12, 12, 0, 1}));
}

TEST_CASE("cyclotomic reductions on both backends") {
  for (const auto& fam : {family_g(3, 3, 2), family_g(3, 1, 2), family_g(4, 2, 2), family_g(4, 4, 2)}) {
    CAPTURE(fam.name);
    const unsigned m = fam.arrangement.root_order();
    for (const auto& spec : select_valid_specs(fam.arrangement, Backend::PrimeField, 3))
      CHECK(coboundary_at_prime(fam.arrangement, spec) == expected_at_prime(fam.arrangement, spec));
    // m = 4: F_q[x]/(x^2+1) is a field for q = 3 mod 4.
    if (m == 4) {
      const auto spec = RingSpec::paper_literal(4, 3);
      if (check_correct_reduction(fam.arrangement, spec))
        CHECK(coboundary_at_prime(fam.arrangement, spec) == expected_at_prime(fam.arrangement, spec));
    }
  }
}

TEST_CASE("engine histogram agrees with the modular oracle") {
  std::mt19937 rng(17);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const unsigned m = std::array{1u, 3u, 4u, 6u}[trial % 4];
    const auto a = oracle::random_arrangement(rng, m, 1 + trial % 3, 5);
    for (const auto& spec : select_valid_specs(a, Backend::PrimeField, 1, 7)) {
      if (ipow(spec.q, a.dim()) > 40000) continue;
      const auto h = point_count_histogram(ReducedArrangement(a, spec));
      auto ref = oracle::prime_field_histogram(a, spec.q, spec.zeta);
      CHECK(trimmed(h.counts) == trimmed(ref));
      CHECK(coboundary_at_prime(a, spec) == expected_at_prime(a, spec));
      ++checked;
    }
  }
  CHECK(checked > 30);
}

TEST_CASE("interpolation") {
  const Arrangement one(1, 1, {hp({1}, 0)});
  std::vector<RingSpec> specs{RingSpec::prime_field(1, 3), RingSpec::prime_field(1, 5), RingSpec::prime_field(1, 7)};
  BivarPoly expect("q", "t");
  expect.add_term(1, 0, 1);
  expect.add_term(0, 1, 1);
  expect.add_term(0, 0, -1);
  CHECK(interpolate_coboundary(one, specs) == expect);

  const auto a2 = family_a(3).arrangement;
  std::vector<RingSpec> s2{RingSpec::prime_field(1, 5), RingSpec::prime_field(1, 7), RingSpec::prime_field(1, 11)};
  CHECK(interpolate_coboundary(a2, s2) == coboundary(a2));
  CHECK(interpolate_coboundary(Arrangement(1, 2), {RingSpec::prime_field(1, 5)}) ==
        BivarPoly::constant("q", "t", 1));

  const auto g = family_g(3, 3, 2).arrangement;
  CHECK(interpolate_coboundary(g, select_valid_specs(g, Backend::PrimeField, 3)) == zeta_coboundary(g));
}

TEST_CASE("interpolation errors") {
  CHECK_THROWS_AS(interpolate_from_values({5}, {Poly(1)}, 1), InsufficientPoints);
  // Values 0, 1 at nodes 0, 2 force coefficient 1/2.
  CHECK_THROWS_AS(interpolate_from_values({0, 2}, {Poly(0), Poly(1)}, 1), InconsistencyError);
  CHECK_THROWS_AS(interpolate_from_values({0, 1, 2}, {Poly(0), Poly(1), Poly(4)}, 1), InconsistencyError);
  CHECK(interpolate_from_values({0, 1, 2}, {Poly(0), Poly(1), Poly(4)}, 2).coeff(2, 0) == 1);
}

TEST_CASE("held-out prime") {
  for (const auto& fam : {family_b(3), family_d(3), family_i(2), family_g(3, 1, 2)}) {
    CAPTURE(fam.name);
    const auto& a = fam.arrangement;
    const unsigned r = rank(a);
    auto specs = select_valid_specs(a, Backend::PrimeField, r + 2);
    const RingSpec held = specs.back();
    specs.pop_back();
    const auto cob = interpolate_coboundary(a, specs);
    CHECK(cob == zeta_coboundary(a));
    CHECK(cob.unscale_first(l_of(a.root_order())).eval_first(held.ring_size()) == coboundary_at_prime(a, held));
  }
}

TEST_CASE("valid ring selection") {
  const auto g = family_g(3, 3, 2).arrangement;
  const auto specs = select_valid_specs(g, Backend::PrimeField, 3);
  REQUIRE(specs.size() == 3);
  for (const auto& s : specs) {
    CHECK(s.q % 3 == 1);
    CHECK(check_correct_reduction(g, s));
  }
  CHECK(specs[0].q == 7);
  const auto b = select_valid_specs(family_b(2).arrangement, Backend::PrimeField, 2);
  CHECK(b[0].q == 3);
}

TEST_CASE("flat sizes") {
  const auto g = family_g(3, 3, 2).arrangement;
  CHECK(check_flat_sizes(g, ReducedArrangement(g, RingSpec::prime_field(3, 7))));
  // 1 - w is a zero divisor in F_5[x]/(x^3 - 1), so z1 = z2 = w z2 has extra solutions.
  CHECK_THROWS_AS(check_flat_sizes(g, ReducedArrangement(g, RingSpec::paper_literal(3, 5))), FlatSizeViolation);
  CHECK_THROWS_AS(coboundary_at_prime(g, RingSpec::paper_literal(3, 7)), FlatSizeViolation);
  const auto b3 = family_b(3).arrangement;
  CHECK_FALSE(check_flat_sizes(b3, ReducedArrangement(b3, RingSpec::prime_field(1, 5)), 4));
  CHECK(check_flat_sizes(b3, ReducedArrangement(b3, RingSpec::prime_field(1, 5))));
  // F_3[x]/(x^2 + 1) is a field.
  const auto g4 = family_g(4, 2, 2).arrangement;
  CHECK(coboundary_at_prime(g4, RingSpec::paper_literal(4, 3)) == expected_at_prime(g4, RingSpec::paper_literal(4, 3)));
}
